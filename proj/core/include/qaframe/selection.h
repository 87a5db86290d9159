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

// QA-consistency selection of one prototype per role, and the role lexicon
// built from it.

#ifndef QAFRAME_SELECTION_H_
#define QAFRAME_SELECTION_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "qaframe/frame.h"
#include "qaframe/prototype.h"

namespace qaframe {

struct GoldArgument {
  std::string role;
  Span span;
};

// A predicate instance with its gold PropBank arguments.
struct GoldInstance {
  std::string sentence_id;
  std::vector<std::string> tokens;
  Predicate predicate;
  std::vector<GoldArgument> arguments;
};

struct ArgumentSample {
  std::string sentence_id;
  std::vector<std::string> tokens;
  Predicate predicate;
  std::string role;
  Span gold;

  std::string GoldText() const { return SpanText(gold, tokens); }
  std::string Passage() const;
};

inline constexpr int kCoreSampleLimit = 50;
inline constexpr int kAdjunctSampleLimit = 100;
inline constexpr uint64_t kDefaultSeed = 20210519;

// Uniform draw in [0, n) from a 64-bit Mersenne Twister; stable across
// standard libraries, unlike std::uniform_int_distribution.
uint64_t BoundedDraw(uint64_t n, std::mt19937_64 &rng);

// Up to kCoreSampleLimit arguments of `role` for lemma.sense, or up to
// kAdjunctSampleLimit for adjunct roles drawn from any sense of the lemma
// (any predicate at all when lemma is "*"). Uniform without replacement;
// returned in corpus order.
std::vector<ArgumentSample> SampleArguments(const std::vector<GoldInstance> &corpus,
                                            const std::string &lemma,
                                            const std::string &sense,
                                            const std::string &role,
                                            uint64_t seed = kDefaultSeed);

struct QaQuery {
  std::string question;
  std::string passage;
  std::string gold;  // only mock oracles look at it
};

// Extractive QA model. nullopt means "no answer"; failures throw Error.
class QaOracle {
 public:
  virtual ~QaOracle() = default;
  virtual std::optional<std::string> Answer(const QaQuery &query) = 0;
};

// Turns a prototype into a question about one sampled instance. Throws
// Error when it cannot.
using Contextualizer =
    std::function<std::string(const std::string &prototype, const ArgumentSample &sample)>;

struct CandidateScore {
  std::string text;
  int count = 0;
  std::optional<double> mean_f1;  // absent without samples
  int failures = 0;               // samples scored 0 for a failure
};

struct Selection {
  std::string prototype;
  std::optional<double> mean_f1;
  int sample_count = 0;
  int failures = 0;
  std::vector<CandidateScore> scores;  // in input order

  bool flagged() const { return failures > 0; }
};

// Highest mean token F1 over the samples; ties go to the higher count, then
// the smaller text. Without samples the most frequent candidate wins.
Selection SelectPrototype(const std::vector<Candidate> &candidates,
                          const std::vector<ArgumentSample> &samples,
                          const Contextualizer &contextualize, QaOracle &oracle);

struct LexiconEntry {
  std::string lemma;
  std::string sense;
  std::string role;
  std::string prototype;
  std::optional<double> mean_f1;
  int sample_count = 0;

  bool operator==(const LexiconEntry &) const = default;
};

enum class LookupMatch { kExact, kOtherSense, kGlobal };

std::string_view LookupMatchName(LookupMatch match);

struct LexiconHit {
  const LexiconEntry *entry = nullptr;
  LookupMatch match = LookupMatch::kExact;
};

// (lemma, sense, role) -> prototype. Adjunct entries use the wildcard sense,
// and the wildcard lemma for entries shared by all predicates.
class RoleLexicon {
 public:
  static constexpr const char *kWildcard = "*";

  void Add(LexiconEntry entry);  // replaces an entry with the same key
  const LexiconEntry *Find(const std::string &lemma, const std::string &sense,
                           const std::string &role) const;

  // Exact key, then another sense of the lemma, then (adjuncts only) the
  // wildcard lemma.
  std::optional<LexiconHit> Lookup(const std::string &lemma, const std::string &sense,
                                   const std::string &role) const;

  std::vector<LexiconEntry> Entries() const;
  size_t size() const { return entries_.size(); }

  // lemma<TAB>sense<TAB>role<TAB>prototype<TAB>mean_f1<TAB>sample_count, with
  // "-" for an absent mean_f1.
  void Write(std::ostream &out) const;
  static RoleLexicon Read(std::istream &in, const std::string &source);

  bool operator==(const RoleLexicon &) const = default;

 private:
  std::map<std::tuple<std::string, std::string, std::string>, LexiconEntry> entries_;
};

// Per-thread scoring resources; each worker owns its oracle connection.
struct SelectionWorker {
  Contextualizer contextualize;
  std::unique_ptr<QaOracle> oracle;
};
using WorkerFactory = std::function<SelectionWorker()>;

struct LexiconOptions {
  double threshold = 0.5;
  uint64_t seed = kDefaultSeed;
  int workers = 1;
};

struct Coverage {
  int instances_total = 0;
  int instances_covered = 0;

  bool operator==(const Coverage &) const = default;
};

struct LexiconBuild {
  RoleLexicon lexicon;
  std::vector<LexiconEntry> dropped;
  std::vector<LexiconEntry> flagged;  // kept or dropped, with failed samples
  Coverage coverage;
};

// Runs SelectPrototype for every role key of `table`, keeps entries whose
// mean F1 reaches the threshold (or that had nothing to score), and counts
// the gold arguments the result can serve.
LexiconBuild BuildAndFilterLexicon(const CandidateTable &table,
                                   const std::vector<GoldInstance> &corpus,
                                   const WorkerFactory &factory,
                                   const LexiconOptions &options = {});

Coverage ComputeCoverage(const RoleLexicon &lexicon,
                         const std::vector<GoldInstance> &corpus);

}  // namespace qaframe

#endif  // QAFRAME_SELECTION_H_
