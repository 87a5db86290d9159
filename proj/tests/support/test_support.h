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

// Fixtures shared by the unit tests and the acceptance runner.

#ifndef QAFRAME_TESTS_SUPPORT_TEST_SUPPORT_H_
#define QAFRAME_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaframe/corpus_io.h"
#include "qaframe/frame.h"
#include "qaframe/inflection.h"
#include "qaframe/pipeline.h"
#include "qaframe/selection.h"

namespace qaframe::testing {

std::string DataPath(const std::string &name);
std::string FakeBackend(const std::string &mode = "mock");
const InflectionLexicon &Lexicon();

struct QuestionRow {
  std::string question;
  std::string prototype;
  std::string kind;  // active-no-subj, active-subj, passive
};
std::vector<QuestionRow> LoadQuestions();
std::vector<FrameRecord> LoadFrames();
std::vector<GoldInstance> LoadGold();

struct ExpectedFill {
  std::string sentence_id;
  int entry;
  std::string slot;
  int source_entry;
  std::string rule;
};
std::vector<ExpectedFill> LoadExpectedFills();

// Frame from surface questions and their answer spans.
Frame MakeFrame(const std::string &sentence, int predicate_index, const std::string &lemma,
                const std::vector<std::pair<std::string, std::vector<Span>>> &entries);

std::vector<SlotQuestion> ParseAll(const std::vector<std::string> &questions);

// Two-sentence arrival example with its hand-built role lexicon.
struct ArrivalFixture {
  RoleQuestionRequest request;
  RoleLexicon lexicon;
  RoleInventory inventory;
  std::vector<std::string> adjuncts;
  std::vector<std::pair<std::string, std::string>> expected;  // role, question
};
ArrivalFixture Arrival();

// Always returns the gold answer.
class GoldOracle : public QaOracle {
 public:
  std::optional<std::string> Answer(const QaQuery &query) override { return query.gold; }
};

// Gold answer when `accept` holds for the question text, else no answer.
class FilterOracle : public QaOracle {
 public:
  explicit FilterOracle(std::function<bool(const std::string &)> accept)
      : accept_(std::move(accept)) {}
  std::optional<std::string> Answer(const QaQuery &query) override {
    if (accept_(query.question)) return query.gold;
    return std::nullopt;
  }

 private:
  std::function<bool(const std::string &)> accept_;
};

// Prototype text returned as is.
// Set-arithmetic reference implementations.
double OracleTokenF1(std::vector<std::string> predicted, std::vector<std::string> gold);
double OracleSpanIou(Span a, Span b);

struct MetricCase {
  std::vector<std::string> predicted;
  std::vector<std::string> gold;
  Span a;
  Span b;
};
std::vector<MetricCase> RandomMetricCases(int n, uint64_t seed);

std::string IdentityContextualizer(const std::string &prototype, const ArgumentSample &);

}  // namespace qaframe::testing

#endif  // QAFRAME_TESTS_SUPPORT_TEST_SUPPORT_H_
