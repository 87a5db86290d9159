// Copyright 2026 The qaframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaframe/selection.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>

#include "qaframe/errors.h"
#include "qaframe/metrics.h"
#include "qaframe/text.h"

namespace qaframe {

std::string ArgumentSample::Passage() const { return Join(tokens, " "); }

uint64_t BoundedDraw(uint64_t n, std::mt19937_64 &rng) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::vector<ArgumentSample> SampleArguments(const std::vector<GoldInstance> &corpus,
                                            const std::string &lemma,
                                            const std::string &sense,
                                            const std::string &role,
                                            uint64_t seed) {
  const bool adjunct = IsAdjunctRole(role);
  std::vector<ArgumentSample> pool;
  for (const GoldInstance &inst : corpus) {
    if (lemma != RoleLexicon::kWildcard || !adjunct) {
      if (inst.predicate.lemma != lemma) continue;
      if (!adjunct && inst.predicate.sense != sense) continue;
    }
    for (const GoldArgument &arg : inst.arguments) {
      if (arg.role != role) continue;
      pool.push_back({inst.sentence_id, inst.tokens, inst.predicate, role, arg.span});
    }
  }
  const size_t limit = adjunct ? kAdjunctSampleLimit : kCoreSampleLimit;
  if (pool.size() <= limit) return pool;

  std::mt19937_64 rng(seed);
  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (size_t i = 0; i < limit; ++i) {
    size_t j = i + BoundedDraw(order.size() - i, rng);
    std::swap(order[i], order[j]);
  }
  order.resize(limit);
  std::sort(order.begin(), order.end());
  std::vector<ArgumentSample> out;
  out.reserve(limit);
  for (size_t i : order) out.push_back(std::move(pool[i]));
  return out;
}

Selection SelectPrototype(const std::vector<Candidate> &candidates,
                          const std::vector<ArgumentSample> &samples,
                          const Contextualizer &contextualize, QaOracle &oracle) {
  if (candidates.empty()) {
    throw Error(ErrorKind::kFormat, "no prototype candidates to select from");
  }
  Selection out;
  out.sample_count = static_cast<int>(samples.size());
  for (const Candidate &c : candidates) {
    CandidateScore score{c.text, c.count, std::nullopt, 0};
    if (!samples.empty()) {
      double sum = 0;
      for (const ArgumentSample &s : samples) {
        try {
          QaQuery query{contextualize(c.text, s), s.Passage(), s.GoldText()};
          std::optional<std::string> answer = oracle.Answer(query);
          if (answer) sum += TokenF1(AnswerTokens(*answer), AnswerTokens(query.gold));
        } catch (const Error &) {
          ++score.failures;
        }
      }
      score.mean_f1 = sum / static_cast<double>(samples.size());
    }
    out.scores.push_back(std::move(score));
  }

  auto better = [](const CandidateScore &a, const CandidateScore &b) {
    double fa = a.mean_f1.value_or(0), fb = b.mean_f1.value_or(0);
    if (fa != fb) return fa > fb;
    if (a.count != b.count) return a.count > b.count;
    return a.text < b.text;
  };
  const CandidateScore *best = &out.scores.front();
  for (const CandidateScore &s : out.scores) {
    if (better(s, *best)) best = &s;
  }
  out.prototype = best->text;
  out.mean_f1 = best->mean_f1;
  out.failures = best->failures;
  return out;
}

std::string_view LookupMatchName(LookupMatch match) {
  switch (match) {
    case LookupMatch::kExact: return "exact";
    case LookupMatch::kOtherSense: return "other-sense";
    case LookupMatch::kGlobal: return "global";
  }
  return "exact";
}

void RoleLexicon::Add(LexiconEntry entry) {
  auto key = std::make_tuple(entry.lemma, entry.sense, entry.role);
  entries_[key] = std::move(entry);
}

const LexiconEntry *RoleLexicon::Find(const std::string &lemma, const std::string &sense,
                                      const std::string &role) const {
  auto it = entries_.find(std::make_tuple(lemma, sense, role));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<LexiconHit> RoleLexicon::Lookup(const std::string &lemma,
                                              const std::string &sense,
                                              const std::string &role) const {
  if (const LexiconEntry *e = Find(lemma, sense, role)) {
    return LexiconHit{e, LookupMatch::kExact};
  }
  // Senses sort after the wildcard, so "*" is preferred over numbered senses.
  for (auto it = entries_.lower_bound(std::make_tuple(lemma, std::string(), std::string()));
       it != entries_.end() && std::get<0>(it->first) == lemma; ++it) {
    if (std::get<2>(it->first) == role) return LexiconHit{&it->second, LookupMatch::kOtherSense};
  }
  if (IsAdjunctRole(role)) {
    if (const LexiconEntry *e = Find(kWildcard, kWildcard, role)) {
      return LexiconHit{e, LookupMatch::kGlobal};
    }
  }
  return std::nullopt;
}

std::vector<LexiconEntry> RoleLexicon::Entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto &[key, entry] : entries_) out.push_back(entry);
  return out;
}

void RoleLexicon::Write(std::ostream &out) const {
  for (const auto &[key, e] : entries_) {
    char score[32] = "-";
    if (e.mean_f1) std::snprintf(score, sizeof(score), "%.6f", *e.mean_f1);
    out << e.lemma << '\t' << e.sense << '\t' << e.role << '\t' << e.prototype << '\t'
        << score << '\t' << e.sample_count << '\n';
  }
}

RoleLexicon RoleLexicon::Read(std::istream &in, const std::string &source) {
  RoleLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string &what) {
      return Error(ErrorKind::kFormat,
                   source + ":" + std::to_string(line_no) + ": " + what);
    };
    std::vector<std::string> cols;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 6) throw fail("expected 6 tab-separated columns");
    LexiconEntry e;
    e.lemma = cols[0];
    e.sense = cols[1];
    try {
      e.role = NormalizeRole(cols[2]);
    } catch (const Error &err) {
      throw fail(err.what());
    }
    e.prototype = cols[3];
    if (e.lemma.empty() || e.sense.empty() || e.prototype.empty()) {
      throw fail("empty lemma, sense or prototype");
    }
    try {
      size_t used = 0;
      if (cols[4] != "-") {
        double f = std::stod(cols[4], &used);
        if (used != cols[4].size() || f < 0 || f > 1) throw std::invalid_argument("");
        e.mean_f1 = f;
      }
      e.sample_count = std::stoi(cols[5], &used);
      if (used != cols[5].size() || e.sample_count < 0) throw std::invalid_argument("");
    } catch (const std::exception &) {
      throw fail("bad mean_f1 or sample_count");
    }
    lexicon.Add(std::move(e));
  }
  return lexicon;
}

namespace {

struct SelectionTask {
  std::string lemma;
  std::string sense;
  std::string role;
  std::vector<Candidate> candidates;
};

}  // namespace

LexiconBuild BuildAndFilterLexicon(const CandidateTable &table,
                                   const std::vector<GoldInstance> &corpus,
                                   const WorkerFactory &factory,
                                   const LexiconOptions &options) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> senses;
  for (const GoldInstance &inst : corpus) {
    for (const GoldArgument &arg : inst.arguments) {
      senses[{inst.predicate.lemma, arg.role}].insert(inst.predicate.sense);
    }
  }

  std::vector<SelectionTask> tasks;
  for (const auto &[lemma, role] : table.Keys()) {
    std::vector<Candidate> candidates = table.Candidates(lemma, role);
    if (candidates.empty()) continue;
    if (IsAdjunctRole(role)) {
      tasks.push_back({lemma, RoleLexicon::kWildcard, role, candidates});
      continue;
    }
    auto it = senses.find({lemma, role});
    if (it == senses.end()) {
      tasks.push_back({lemma, RoleLexicon::kWildcard, role, candidates});
      continue;
    }
    for (const std::string &sense : it->second) {
      tasks.push_back({lemma, sense, role, candidates});
    }
  }

  std::vector<Selection> results(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto run = [&] {
    try {
      SelectionWorker worker = factory();
      for (size_t i = next++; i < tasks.size(); i = next++) {
        const SelectionTask &t = tasks[i];
        auto samples = SampleArguments(corpus, t.lemma, t.sense, t.role, options.seed);
        results[i] = SelectPrototype(t.candidates, samples, worker.contextualize,
                                     *worker.oracle);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next = tasks.size();
    }
  };
  const int workers =
      std::max(1, std::min<int>(options.workers, static_cast<int>(tasks.size())));
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(run);
    for (auto &t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  LexiconBuild build;
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Selection &s = results[i];
    LexiconEntry e{tasks[i].lemma, tasks[i].sense, tasks[i].role,
                   s.prototype,    s.mean_f1,      s.sample_count};
    if (s.flagged()) build.flagged.push_back(e);
    if (s.mean_f1 && *s.mean_f1 < options.threshold) {
      build.dropped.push_back(std::move(e));
    } else {
      build.lexicon.Add(std::move(e));
    }
  }
  build.coverage = ComputeCoverage(build.lexicon, corpus);
  return build;
}

Coverage ComputeCoverage(const RoleLexicon &lexicon,
                         const std::vector<GoldInstance> &corpus) {
  Coverage c;
  for (const GoldInstance &inst : corpus) {
    for (const GoldArgument &arg : inst.arguments) {
      ++c.instances_total;
      if (lexicon.Lookup(inst.predicate.lemma, inst.predicate.sense, arg.role)) {
        ++c.instances_covered;
      }
    }
  }
  return c;
}

}  // namespace qaframe
