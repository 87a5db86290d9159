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

// Context-independent question prototypes and their aggregation per role.

#ifndef QAFRAME_PROTOTYPE_H_
#define QAFRAME_PROTOTYPE_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qaframe/frame.h"
#include "qaframe/inflection.h"
#include "qaframe/qgrammar.h"

namespace qaframe {

// Rewrites AUX/VERB to simple present (passive: "is" + past participle;
// active without SUBJ: present 3sg; active with SUBJ: "does" + stem) and
// maps who/someone to what/something. Voice, prepositions, adverbial
// wh-words and placeholder positions are kept. Idempotent.
SlotQuestion ToPrototype(const SlotQuestion &q);

inline constexpr double kDefaultIouThreshold = 0.4;

enum class AlignmentSource { kParser, kGenerator };

struct JointRecord {
  std::string sentence_id;
  std::string lemma;
  std::string sense;
  std::string role;
  SlotQuestion question;
  Span answer;
  AlignmentSource source = AlignmentSource::kParser;
};

// Pairs each answer with the SRL argument of highest IoU, provided the IoU
// reaches `threshold`. Equal IoU goes to the earlier argument. A question
// contributes one record per distinct argument it aligns to.
std::vector<JointRecord> AlignQaToSrl(const Frame &frame, int srl_predicate_index,
                                      const std::vector<SrlArgument> &arguments,
                                      double threshold = kDefaultIouThreshold);

struct Candidate {
  std::string text;  // rendered prototype
  int count = 0;
};

// Prototype counts per (lemma, role), merged across senses. Adjunct roles are
// also pooled under the lemma kGlobalLemma.
class CandidateTable {
 public:
  static constexpr const char *kGlobalLemma = "*";

  void Add(const std::string &lemma, const std::string &role,
           const std::string &prototype, int count = 1);
  void Merge(const CandidateTable &other);

  // Sorted by descending count, then text.
  std::vector<Candidate> Candidates(const std::string &lemma,
                                    const std::string &role) const;
  std::vector<std::pair<std::string, std::string>> Keys() const;
  bool empty() const { return counts_.empty(); }

  // lemma<TAB>role<TAB>prototype_text<TAB>count
  void Write(std::ostream &out) const;
  static CandidateTable Read(std::istream &in, const std::string &source);

  bool operator==(const CandidateTable &) const = default;

 private:
  std::map<std::pair<std::string, std::string>, std::map<std::string, int>> counts_;
};

CandidateTable AggregateCandidates(const std::vector<JointRecord> &records,
                                   const InflectionLexicon &lexicon);

}  // namespace qaframe

#endif  // QAFRAME_PROTOTYPE_H_
