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

#include "qaframe/prototype.h"

#include <set>
#include <sstream>

#include "qaframe/errors.h"
#include "qaframe/metrics.h"

namespace qaframe {

namespace {

Placeholder Inanimate(Placeholder p) {
  return p == Placeholder::kSomeone ? Placeholder::kSomething : p;
}

}  // namespace

SlotQuestion ToPrototype(const SlotQuestion &q) {
  SlotQuestion p = q;
  p.verb_prefix.clear();
  if (VoiceOf(q) == Voice::kPassive) {
    p.aux = "is";
    p.verb_form = VerbForm::kPastParticiple;
  } else if (q.subj == Placeholder::kNone) {
    p.aux.clear();
    p.verb_form = VerbForm::kPresent3sg;
  } else {
    p.aux = "does";
    p.verb_form = VerbForm::kStem;
  }
  if (p.wh == WhWord::kWho) p.wh = WhWord::kWhat;
  p.subj = Inanimate(p.subj);
  p.obj = Inanimate(p.obj);
  p.misc = Inanimate(p.misc);
  return p;
}

std::vector<JointRecord> AlignQaToSrl(const Frame &frame, int srl_predicate_index,
                                      const std::vector<SrlArgument> &arguments,
                                      double threshold) {
  if (srl_predicate_index != frame.predicate.index) {
    throw Error(ErrorKind::kAlignment,
                "SRL predicate index " + std::to_string(srl_predicate_index) +
                    " does not match frame predicate " +
                    std::to_string(frame.predicate.index));
  }
  std::vector<JointRecord> records;
  for (const QaEntry &entry : frame.entries) {
    std::set<size_t> used;
    for (Span answer : entry.answers) {
      size_t best = arguments.size();
      double best_iou = -1.0;
      for (size_t i = 0; i < arguments.size(); ++i) {
        double iou = SpanIou(answer, arguments[i].span);
        if (iou < threshold) continue;
        bool better = iou > best_iou;
        if (!better && iou == best_iou) {
          const Span &cur = arguments[best].span;
          const Span &cand = arguments[i].span;
          better = cand.start < cur.start ||
                   (cand.start == cur.start && cand.end < cur.end);
        }
        if (better) {
          best = i;
          best_iou = iou;
        }
      }
      if (best == arguments.size() || !used.insert(best).second) continue;
      JointRecord r;
      r.sentence_id = frame.sentence_id;
      r.lemma = frame.predicate.lemma;
      r.sense = frame.predicate.sense;
      r.role = NormalizeRole(arguments[best].role);
      r.question = entry.question;
      r.answer = answer;
      r.source = AlignmentSource::kParser;
      records.push_back(std::move(r));
    }
  }
  return records;
}

void CandidateTable::Add(const std::string &lemma, const std::string &role,
                         const std::string &prototype, int count) {
  counts_[{lemma, role}][prototype] += count;
}

void CandidateTable::Merge(const CandidateTable &other) {
  for (const auto &[key, protos] : other.counts_) {
    for (const auto &[text, count] : protos) counts_[key][text] += count;
  }
}

std::vector<Candidate> CandidateTable::Candidates(const std::string &lemma,
                                                  const std::string &role) const {
  std::vector<Candidate> out;
  auto it = counts_.find({lemma, role});
  if (it == counts_.end()) return out;
  for (const auto &[text, count] : it->second) out.push_back({text, count});
  std::stable_sort(out.begin(), out.end(), [](const Candidate &a, const Candidate &b) {
    return a.count > b.count;
  });
  return out;
}

std::vector<std::pair<std::string, std::string>> CandidateTable::Keys() const {
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto &[key, protos] : counts_) keys.push_back(key);
  return keys;
}

void CandidateTable::Write(std::ostream &out) const {
  for (const auto &[key, protos] : counts_) {
    for (const auto &[text, count] : protos) {
      out << key.first << '\t' << key.second << '\t' << text << '\t' << count
          << '\n';
    }
  }
}

CandidateTable CandidateTable::Read(std::istream &in, const std::string &source) {
  CandidateTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (cols.size() != 4) {
      throw Error(ErrorKind::kFormat, where + "expected 4 tab-separated columns");
    }
    int count = 0;
    try {
      size_t used = 0;
      count = std::stoi(cols[3], &used);
      if (used != cols[3].size() || count < 0) throw std::invalid_argument("");
    } catch (const std::exception &) {
      throw Error(ErrorKind::kFormat, where + "bad count '" + cols[3] + "'");
    }
    try {
      table.Add(cols[0], NormalizeRole(cols[1]), cols[2], count);
    } catch (const Error &e) {
      throw Error(e.kind(), where + e.what());
    }
  }
  return table;
}

CandidateTable AggregateCandidates(const std::vector<JointRecord> &records,
                                   const InflectionLexicon &lexicon) {
  CandidateTable table;
  for (const JointRecord &r : records) {
    std::string text = Render(ToPrototype(r.question), lexicon);
    table.Add(r.lemma, r.role, text);
    if (IsAdjunctRole(r.role)) table.Add(CandidateTable::kGlobalLemma, r.role, text);
  }
  return table;
}

}  // namespace qaframe
