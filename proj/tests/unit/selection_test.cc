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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "qaframe/errors.h"
#include "qaframe/metrics.h"
#include "qaframe/prototype.h"
#include "qaframe/selection.h"
#include "qaframe/text.h"
#include "test_support.h"

namespace qaframe {
namespace {

using testing::FilterOracle;
using testing::GoldOracle;
using testing::IdentityContextualizer;

GoldInstance Instance(const std::string &id, const std::string &sentence, int pred,
                      const std::string &lemma, const std::string &sense,
                      std::vector<GoldArgument> args) {
  return {id, SplitWhitespace(sentence), {pred, lemma, sense}, std::move(args)};
}

// `n` copies of a one-argument instance; passage i carries the token "t<i>".
std::vector<GoldInstance> Repeated(int n, const std::string &lemma, const std::string &sense,
                                   const std::string &role) {
  std::vector<GoldInstance> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(Instance(lemma + sense + "-" + std::to_string(i),
                           "the team " + lemma + " in t" + std::to_string(i) + " .", 2, lemma,
                           sense, {{role, {4, 5}}}));
  }
  return out;
}

bool Contains(const std::string &haystack, const std::string &needle) {
  return ToLower(haystack).find(needle) != std::string::npos;
}

TEST_CASE("argument sampling") {
  auto many = Repeated(200, "win", "01", "A0");
  auto s = SampleArguments(many, "win", "01", "A0", 11);
  REQUIRE(s.size() == 50);
  std::set<std::string> ids;
  for (const auto &a : s) ids.insert(a.sentence_id);
  CHECK(ids.size() == 50);
  CHECK(std::is_sorted(s.begin(), s.end(), [](const auto &a, const auto &b) {
    return std::stoi(a.sentence_id.substr(6)) < std::stoi(b.sentence_id.substr(6));
  }));
  auto again = SampleArguments(many, "win", "01", "A0", 11);
  for (size_t i = 0; i < s.size(); ++i) CHECK(s[i].sentence_id == again[i].sentence_id);
  auto other = SampleArguments(many, "win", "01", "A0", 12);
  bool differs = false;
  for (size_t i = 0; i < s.size(); ++i) differs |= s[i].sentence_id != other[i].sentence_id;
  CHECK(differs);

  CHECK(SampleArguments(Repeated(7, "win", "01", "A0"), "win", "01", "A0").size() == 7);
  CHECK(SampleArguments(many, "win", "02", "A0").empty());
  CHECK(SampleArguments(many, "lose", "01", "A0").empty());

  // Adjuncts come from every sense, up to a larger limit.
  auto adj = Repeated(80, "win", "01", "AM-LOC");
  auto adj2 = Repeated(80, "win", "02", "AM-LOC");
  adj.insert(adj.end(), adj2.begin(), adj2.end());
  auto drawn = SampleArguments(adj, "win", "01", "AM-LOC");
  CHECK(drawn.size() == 100);
  CHECK(SampleArguments(adj, "*", "*", "AM-LOC").size() == 100);
  CHECK(SampleArguments(Repeated(30, "win", "02", "AM-LOC"), "win", "01", "AM-LOC").size() ==
        30);

  CHECK(s[0].GoldText() == s[0].tokens[4]);
  CHECK(s[0].Passage() == Join(s[0].tokens, " "));
}

TEST_CASE("sampling is close to uniform") {
  auto pool = Repeated(200, "win", "01", "A0");
  std::map<std::string, int> hits;
  const int kRuns = 2000;
  for (int seed = 0; seed < kRuns; ++seed) {
    for (const auto &a : SampleArguments(pool, "win", "01", "A0", seed)) ++hits[a.sentence_id];
  }
  REQUIRE(hits.size() == 200);
  // Each item is expected kRuns / 4 times, standard deviation about 19.
  for (const auto &[id, n] : hits) {
    CAPTURE(id);
    CHECK(n > 400);
    CHECK(n < 600);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) CHECK(BoundedDraw(7, rng) < 7);
}

std::vector<ArgumentSample> WinSamples() {
  std::vector<GoldInstance> corpus = {
      Instance("w0", "The Lakers won in Boston .", 2, "win", "01", {{"AM-LOC", {3, 5}}}),
      Instance("w1", "She won at the casino .", 1, "win", "01", {{"AM-LOC", {2, 5}}}),
      Instance("w2", "They won the cup in Paris .", 1, "win", "01", {{"AM-LOC", {4, 6}}}),
  };
  return SampleArguments(corpus, "win", "01", "AM-LOC");
}

TEST_CASE("consistency selection prefers what the oracle can answer") {
  std::vector<Candidate> candidates = {{"what does someone win at?", 5},
                                       {"where does something win?", 2}};
  FilterOracle where([](const std::string &q) { return Contains(q, "where"); });
  Selection s = SelectPrototype(candidates, WinSamples(), IdentityContextualizer, where);
  CHECK(s.prototype == "where does something win?");
  CHECK(s.mean_f1 == 1.0);
  CHECK(s.sample_count == 3);
  CHECK(s.scores[0].mean_f1 == 0.0);
  CHECK_FALSE(s.flagged());

  GoldOracle gold;
  Selection tie = SelectPrototype(candidates, WinSamples(), IdentityContextualizer, gold);
  CHECK(tie.prototype == "what does someone win at?");

  // Equal score and count fall back to the text.
  Selection text = SelectPrototype({{"b?", 1}, {"a?", 1}}, WinSamples(),
                                   IdentityContextualizer, gold);
  CHECK(text.prototype == "a?");

  Selection empty = SelectPrototype(candidates, {}, IdentityContextualizer, gold);
  CHECK(empty.prototype == "what does someone win at?");
  CHECK_FALSE(empty.mean_f1.has_value());

  CHECK_THROWS_AS(SelectPrototype({}, WinSamples(), IdentityContextualizer, gold), Error);
}

class TableOracle : public QaOracle {
 public:
  std::map<std::pair<std::string, std::string>, std::string> answers;
  std::optional<std::string> Answer(const QaQuery &q) override {
    auto it = answers.find({q.question, q.passage});
    if (it == answers.end()) return std::nullopt;
    return it->second;
  }
};

TEST_CASE("mean F1 matches a direct average") {
  std::vector<GoldInstance> corpus = {
      Instance("s0", "The crew fixed the old red engine .", 2, "fix", "01", {{"A1", {3, 7}}}),
      Instance("s1", "Mary fixed the broken fence .", 1, "fix", "01", {{"A1", {2, 5}}}),
      Instance("s2", "He fixed it .", 1, "fix", "01", {{"A1", {2, 3}}}),
  };
  auto samples = SampleArguments(corpus, "fix", "01", "A1");
  REQUIRE(samples.size() == 3);
  TableOracle oracle;
  const std::string a = "What is fixed?", b = "What does something fix?";
  oracle.answers[{a, samples[0].Passage()}] = "engine";  // 1 of 4 tokens
  oracle.answers[{a, samples[1].Passage()}] = "the broken fence";
  oracle.answers[{a, samples[2].Passage()}] = "it";
  oracle.answers[{b, samples[0].Passage()}] = "the old red engine";
  oracle.answers[{b, samples[1].Passage()}] = "fence";  // 1 of 3 tokens

  auto expected = [&](const std::string &q) {
    double sum = 0;
    for (const auto &s : samples) {
      auto ans = oracle.Answer({q, s.Passage(), ""});
      if (ans) sum += testing::OracleTokenF1(SplitWhitespace(ToLower(*ans)),
                                             SplitWhitespace(ToLower(s.GoldText())));
    }
    return sum / samples.size();
  };
  CHECK(expected(a) == doctest::Approx(0.8));
  CHECK(expected(b) == doctest::Approx(0.5));
  Selection s = SelectPrototype({{b, 10}, {a, 1}}, samples, IdentityContextualizer, oracle);
  CHECK(s.prototype == a);
  CHECK(std::abs(*s.mean_f1 - expected(a)) < 1e-12);
  CHECK(std::abs(*s.scores[0].mean_f1 - expected(b)) < 1e-12);
}

TEST_CASE("selection ignores candidate order") {
  std::vector<Candidate> candidates = {{"where does something win?", 2},
                                       {"what does someone win at?", 5},
                                       {"when does something win?", 2},
                                       {"where does something win at?", 2},
                                       {"what does something win?", 1}};
  FilterOracle where([](const std::string &q) { return Contains(q, "where"); });
  GoldOracle gold;
  auto samples = WinSamples();
  Selection ref_where = SelectPrototype(candidates, samples, IdentityContextualizer, where);
  Selection ref_gold = SelectPrototype(candidates, samples, IdentityContextualizer, gold);
  CHECK(ref_where.prototype == "where does something win at?");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    CHECK(SelectPrototype(candidates, samples, IdentityContextualizer, where).prototype ==
          ref_where.prototype);
    CHECK(SelectPrototype(candidates, samples, IdentityContextualizer, gold).prototype ==
          ref_gold.prototype);
  }
}

TEST_CASE("contextualization failures score zero and are flagged") {
  GoldOracle gold;
  Contextualizer flaky = [](const std::string &p, const ArgumentSample &s) -> std::string {
    if (s.sentence_id == "w1") throw Error(ErrorKind::kGrammar, "cannot contextualize");
    return p;
  };
  Selection s = SelectPrototype({{"where does something win?", 1}}, WinSamples(), flaky, gold);
  CHECK(s.failures == 1);
  CHECK(s.flagged());
  CHECK(*s.mean_f1 == doctest::Approx(2.0 / 3.0));
}

CandidateTable OneCandidate(const std::string &lemma, const std::string &role) {
  CandidateTable t;
  t.Add(lemma, role, "Where does something win?", 3);
  return t;
}

// Answers the instances whose passage marker is below `answered`.
class PassageOracle : public QaOracle {
 public:
  explicit PassageOracle(int answered) : answered_(answered) {}
  std::optional<std::string> Answer(const QaQuery &q) override {
    int i = std::stoi(q.passage.substr(q.passage.find(" in t") + 5));
    if (i < answered_) return q.gold;
    return std::nullopt;
  }

 private:
  int answered_;
};

WorkerFactory PassageWorkers(int answered) {
  return [answered] {
    return SelectionWorker{IdentityContextualizer, std::make_unique<PassageOracle>(answered)};
  };
}

TEST_CASE("filter threshold boundary") {
  auto corpus = Repeated(100, "win", "01", "AM-LOC");
  LexiconBuild low = BuildAndFilterLexicon(OneCandidate("win", "AM-LOC"), corpus,
                                           PassageWorkers(49));
  REQUIRE(low.dropped.size() == 1);
  CHECK(*low.dropped[0].mean_f1 == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(low.lexicon.size() == 0);

  LexiconBuild high = BuildAndFilterLexicon(OneCandidate("win", "AM-LOC"), corpus,
                                            PassageWorkers(50));
  CHECK(high.dropped.empty());
  REQUIRE(high.lexicon.size() == 1);
  const LexiconEntry &e = high.lexicon.Entries()[0];
  CHECK(e.mean_f1 == 0.5);
  CHECK(e.sense == "*");
  CHECK(e.sample_count == 100);
  CHECK(high.coverage == Coverage{100, 100});
}

TEST_CASE("lexicon build over the gold corpus") {
  auto corpus = testing::LoadGold();
  std::vector<JointRecord> records;
  for (const auto &rec : testing::LoadFrames()) {
    if (!rec.srl) continue;
    auto r = AlignQaToSrl(rec.frame, rec.frame.predicate.index, *rec.srl);
    records.insert(records.end(), r.begin(), r.end());
  }
  CandidateTable table = AggregateCandidates(records, testing::Lexicon());
  REQUIRE_FALSE(table.empty());

  auto all_gold = [] {
    return SelectionWorker{IdentityContextualizer, std::make_unique<GoldOracle>()};
  };
  LexiconBuild full = BuildAndFilterLexicon(table, corpus, all_gold);
  CHECK(full.dropped.empty());
  CHECK(full.flagged.empty());

  // Coverage against direct counting.
  int total = 0, covered = 0;
  std::set<std::pair<std::string, std::string>> core_keys;
  for (const auto &e : full.lexicon.Entries()) core_keys.insert({e.lemma, e.role});
  for (const auto &inst : corpus) {
    for (const auto &arg : inst.arguments) {
      ++total;
      bool hit = core_keys.count({inst.predicate.lemma, arg.role}) > 0 ||
                 (IsAdjunctRole(arg.role) && core_keys.count({"*", arg.role}) > 0);
      covered += hit;
    }
  }
  CHECK(full.coverage == Coverage{total, covered});
  CHECK(ComputeCoverage(full.lexicon, corpus) == full.coverage);

  // Workers only change scheduling.
  LexiconBuild parallel =
      BuildAndFilterLexicon(table, corpus, all_gold, {.threshold = 0.5, .workers = 4});
  CHECK(parallel.lexicon == full.lexicon);

  // Raising the threshold never grows the lexicon.
  auto where_only = [] {
    return SelectionWorker{IdentityContextualizer,
                           std::make_unique<FilterOracle>([](const std::string &q) {
                             return q.find("Where") != std::string::npos ||
                                    q.find("Who") == 0;
                           })};
  };
  size_t previous = SIZE_MAX;
  for (double th = 0.0; th <= 1.0; th += 0.1) {
    LexiconBuild b = BuildAndFilterLexicon(table, corpus, where_only, {.threshold = th});
    CHECK(b.lexicon.size() <= previous);
    CHECK(b.lexicon.size() + b.dropped.size() == full.lexicon.size());
    previous = b.lexicon.size();
  }
}

TEST_CASE("lexicon lookup and file format") {
  RoleLexicon lex;
  lex.Add({"win", "01", "A0", "What wins?", 0.9, 50});
  lex.Add({"win", "02", "A1", "What is won?", 0.75, 20});
  lex.Add({"win", "*", "AM-LOC", "Where does something win?", 0.5, 100});
  lex.Add({"*", "*", "AM-TMP", "When does something happen?", std::nullopt, 0});

  CHECK(lex.Lookup("win", "01", "A0")->match == LookupMatch::kExact);
  auto other = lex.Lookup("win", "01", "A1");
  REQUIRE(other);
  CHECK(other->match == LookupMatch::kOtherSense);
  CHECK(other->entry->prototype == "What is won?");
  CHECK(lex.Lookup("win", "01", "AM-LOC")->match == LookupMatch::kOtherSense);
  auto global = lex.Lookup("win", "01", "AM-TMP");
  REQUIRE(global);
  CHECK(global->match == LookupMatch::kGlobal);
  CHECK_FALSE(lex.Lookup("win", "01", "A2"));
  CHECK_FALSE(lex.Lookup("lose", "01", "A0"));
  CHECK(lex.Lookup("lose", "01", "AM-TMP")->match == LookupMatch::kGlobal);

  std::ostringstream out;
  lex.Write(out);
  CHECK(out.str().find("*\t*\tAM-TMP\tWhen does something happen?\t-\t0\n") !=
        std::string::npos);
  std::istringstream in(out.str());
  CHECK(RoleLexicon::Read(in, "lex.tsv") == lex);

  for (const char *bad : {"win\t01\tA0\tWhat wins?\t0.9\n", "win\t01\tA0\tWhat wins?\t1.5\t3\n",
                          "win\t01\tA9\tWhat wins?\t0.5\t3\n"}) {
    std::istringstream b(std::string("# header\n") + bad);
    try {
      RoleLexicon::Read(b, "lex.tsv");
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(std::string(e.what()).find("lex.tsv:2") != std::string::npos);
    }
  }
}

}  // namespace
}  // namespace qaframe
