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

#include "test_support.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "qaframe/errors.h"
#include "qaframe/text.h"

namespace qaframe::testing {

std::string DataPath(const std::string &name) {
  return std::string(QAFRAME_TEST_DATA) + "/" + name;
}

std::string FakeBackend(const std::string &mode) {
  return std::string(QAFRAME_FAKE_BACKEND) + " --mode " + mode;
}

const InflectionLexicon &Lexicon() { return InflectionLexicon::Default(); }

namespace {

std::vector<std::vector<std::string>> ReadTsv(const std::string &name) {
  std::ifstream in(DataPath(name));
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + DataPath(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    rows.push_back(cols);
  }
  return rows;
}

}  // namespace

std::vector<QuestionRow> LoadQuestions() {
  std::vector<QuestionRow> rows;
  for (auto &cols : ReadTsv("questions.tsv")) rows.push_back({cols[0], cols[1], cols[2]});
  return rows;
}

std::vector<FrameRecord> LoadFrames() {
  std::ifstream in(DataPath("frames.jsonl"));
  return ReadFrames(in, "frames.jsonl", Lexicon());
}

std::vector<GoldInstance> LoadGold() {
  std::ifstream in(DataPath("gold.jsonl"));
  return ReadGold(in, "gold.jsonl");
}

std::vector<ExpectedFill> LoadExpectedFills() {
  std::vector<ExpectedFill> out;
  for (auto &c : ReadTsv("frames_expected.tsv")) {
    out.push_back({c[0], std::stoi(c[1]), c[2], std::stoi(c[3]), c[4]});
  }
  return out;
}

Frame MakeFrame(const std::string &sentence, int predicate_index, const std::string &lemma,
                const std::vector<std::pair<std::string, std::vector<Span>>> &entries) {
  Frame f;
  f.sentence_id = "test";
  f.tokens = SplitWhitespace(sentence);
  f.predicate = {predicate_index, lemma, "01"};
  for (const auto &[q, spans] : entries) {
    f.entries.push_back({ParseSurface(q, Lexicon()), spans});
  }
  ValidateFrame(f);
  return f;
}

std::vector<SlotQuestion> ParseAll(const std::vector<std::string> &questions) {
  std::vector<SlotQuestion> out;
  for (const std::string &q : questions) out.push_back(ParseSurface(q, Lexicon()));
  return out;
}

ArrivalFixture Arrival() {
  ArrivalFixture f;
  f.request.tokens = SplitWhitespace(
      "The plane took off in Los Angeles . The tourists will arrive in Mexico at noon .");
  f.request.predicate = {11, "arrive", "01"};
  f.request.fills = {{Slot::kSubj, {8, 10}}, {Slot::kMisc, {13, 14}}};
  f.lexicon.Add({"arrive", "01", "A1", "What arrives in something?", 0.9, 50});
  f.lexicon.Add({"arrive", "01", "A4", "Where does something arrive?", 0.8, 50});
  f.lexicon.Add({"arrive", "02", "A3", "Where does something arrive from?", 0.7, 12});
  f.lexicon.Add({"*", "*", "AM-MNR", "How does something move?", 0.6, 100});
  f.lexicon.Add({"*", "*", "AM-CAU", "Why does something happen?", 0.6, 100});
  f.lexicon.Add({"*", "*", "AM-TMP", "When does something happen?", 0.7, 100});
  f.inventory.Add("arrive", "01", "A1", "entity in motion");
  f.inventory.Add("arrive", "01", "A3", "start point");
  f.inventory.Add("arrive", "01", "A4", "end point");
  f.adjuncts = {"AM-MNR", "AM-CAU", "AM-TMP"};
  f.expected = {
      {"A1", "Who will arrive in Mexico?"},
      {"A3", "Where will the tourists arrive from?"},
      {"A4", "Where will the tourists arrive?"},
      {"AM-MNR", "How will the tourists arrive?"},
      {"AM-CAU", "Why will the tourists arrive?"},
      {"AM-TMP", "When will the tourists arrive?"},
  };
  return f;
}

double OracleTokenF1(std::vector<std::string> predicted, std::vector<std::string> gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  std::sort(predicted.begin(), predicted.end());
  std::sort(gold.begin(), gold.end());
  std::vector<std::string> common;
  std::set_intersection(predicted.begin(), predicted.end(), gold.begin(), gold.end(),
                        std::back_inserter(common));
  if (common.empty()) return 0.0;
  double p = static_cast<double>(common.size()) / predicted.size();
  double r = static_cast<double>(common.size()) / gold.size();
  return 2 * p * r / (p + r);
}

double OracleSpanIou(Span a, Span b) {
  std::set<int> sa, sb, both, either;
  for (int i = a.start; i < a.end; ++i) sa.insert(i);
  for (int i = b.start; i < b.end; ++i) sb.insert(i);
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::inserter(both, both.begin()));
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(),
                 std::inserter(either, either.begin()));
  if (either.empty()) return 0.0;
  return static_cast<double>(both.size()) / either.size();
}

std::vector<MetricCase> RandomMetricCases(int n, uint64_t seed) {
  static const std::vector<std::string> kVocab = {"the", "a", "plane", "tourists", "mexico",
                                                  "noon", "in", "at", "air", "molecules"};
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto words = [&] {
    std::vector<std::string> w(uniform(0, 6));
    for (auto &t : w) t = kVocab[uniform(0, static_cast<int>(kVocab.size()) - 1)];
    return w;
  };
  auto span = [&] {
    int s = uniform(0, 12);
    return Span{s, s + uniform(1, 8)};
  };
  std::vector<MetricCase> out;
  for (int i = 0; i < n; ++i) out.push_back({words(), words(), span(), span()});
  return out;
}

std::string IdentityContextualizer(const std::string &prototype, const ArgumentSample &) {
  return prototype;
}

}  // namespace qaframe::testing
