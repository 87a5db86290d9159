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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "qaframe/corpus_io.h"
#include "qaframe/errors.h"
#include "test_support.h"

namespace qaframe {
namespace {

using nlohmann::json;
using testing::Lexicon;

std::string ErrorOf(const std::string &jsonl) {
  std::istringstream in(jsonl);
  try {
    ReadFrames(in, "frames.jsonl", Lexicon());
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

const char *kGood =
    R"({"sentence_id":"s1","tokens":["The","chef","brought","cake","."],)"
    R"("predicate":{"index":2,"lemma":"bring","sense":"01"},)"
    R"("entries":[{"slots":{"wh":"who","aux":"","subj":"","verb":"brought","verb_form":"past",)"
    R"("obj":"something","prep":null,"misc":""},"answers":[{"start":0,"end":2}]}]})";

TEST_CASE("frame records") {
  std::istringstream in(std::string(kGood) + "\n\n" + kGood + "\n");
  auto frames = ReadFrames(in, "frames.jsonl", Lexicon());
  REQUIRE(frames.size() == 2);
  CHECK(frames[0].line == 1);
  CHECK(frames[1].line == 3);
  CHECK(frames[0].frame.entries[0].question.verb_lemma == "bring");
  CHECK_FALSE(frames[0].srl);

  json round = FrameToJson(frames[0].frame, Lexicon());
  CHECK(ParseFrameRecord(round, Lexicon()).frame.entries[0].question ==
        frames[0].frame.entries[0].question);

  for (const auto &rec : testing::LoadFrames()) {
    json j = FrameToJson(rec.frame, Lexicon());
    FrameRecord again = ParseFrameRecord(j, Lexicon());
    CHECK(again.frame.tokens == rec.frame.tokens);
    REQUIRE(again.frame.entries.size() == rec.frame.entries.size());
    for (size_t i = 0; i < rec.frame.entries.size(); ++i) {
      CHECK(again.frame.entries[i].question == rec.frame.entries[i].question);
      CHECK(again.frame.entries[i].answers == rec.frame.entries[i].answers);
    }
  }
}

TEST_CASE("frame errors name the line") {
  std::string bad_span = kGood;
  bad_span.replace(bad_span.find(R"("end":2)"), 7, R"("end":9)");
  std::string bad_slot = kGood;
  bad_slot.replace(bad_slot.find("something"), 9, "somebody");
  std::string no_verb = kGood;
  no_verb.replace(no_verb.find(R"("verb":"brought")"), 16, R"("verb":"")");

  CHECK(ErrorOf(std::string(kGood) + "\n{oops\n").find("frames.jsonl:2") == 0);
  CHECK(ErrorOf(std::string(kGood) + "\n" + kGood + "\n" + bad_span).find("frames.jsonl:3") ==
        0);
  CHECK(ErrorOf(bad_slot).find("frames.jsonl:1") == 0);
  CHECK(ErrorOf(no_verb).find("frames.jsonl:1") == 0);
  CHECK(ErrorOf(R"({"sentence_id":"x","tokens":[],"predicate":{"index":0,"lemma":"a"},"entries":[]})")
            .find("frames.jsonl:1") == 0);

  std::istringstream gold(R"({"sentence_id":"g","tokens":["a","b"],"predicate":{"index":0,"lemma":"a","sense":"01"},"arguments":[{"role":"A0","start":1,"end":2}]})"
                          "\n"
                          R"({"sentence_id":"g","tokens":["a","b"],"predicate":{"index":0,"lemma":"a","sense":"01"},"arguments":[{"role":"ARGX","start":1,"end":2}]})");
  try {
    ReadGold(gold, "gold.jsonl");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("gold.jsonl:2") == 0);
  }
}

TEST_CASE("gold instances") {
  auto gold = testing::LoadGold();
  REQUIRE_FALSE(gold.empty());
  for (const auto &g : gold) {
    GoldInstance again = ParseGoldInstance(GoldToJson(g));
    CHECK(again.sentence_id == g.sentence_id);
    CHECK(again.tokens == g.tokens);
    REQUIRE(again.arguments.size() == g.arguments.size());
    for (size_t i = 0; i < g.arguments.size(); ++i) {
      CHECK(again.arguments[i].role == g.arguments[i].role);
      CHECK(again.arguments[i].span == g.arguments[i].span);
    }
  }
}

TEST_CASE("aligned output carries provenance") {
  std::istringstream in(
      R"({"sentence_id":"bump","tokens":["Air","molecules","move","a","lot","and","bump","into","things","."],)"
      R"("predicate":{"index":6,"lemma":"bump"},"extra":"kept","entries":[)"
      R"({"slots":{"wh":"what","verb":"bumps","verb_form":"present3sg","prep":"into","misc":"something"},"answers":[{"start":0,"end":2}]},)"
      R"({"slots":{"wh":"what","aux":"does","subj":"something","verb":"bump","verb_form":"stem","prep":"into"},"answers":[{"start":8,"end":9}]}]})");
  auto recs = ReadFrames(in, "mem", Lexicon());
  REQUIRE(recs.size() == 1);
  json out = AlignedToJson(recs[0], BuildFrameAligned(recs[0].frame, Lexicon()));
  CHECK(out["extra"] == "kept");
  const json &e0 = out["entries"][0];
  CHECK(e0["prototype"] == "What bumps into something?");
  CHECK(e0["contextualized"] == "What bumps into things?");
  REQUIRE(e0["fills"].size() == 1);
  CHECK(e0["fills"][0]["slot"] == "MISC");
  CHECK(e0["fills"][0]["source_entry"] == 1);
  CHECK(e0["fills"][0]["text"] == "things");
  CHECK(e0["fills"][0]["rule"] == "base");
  CHECK(e0["unfilled"] == 0);
  const json &e1 = out["entries"][1];
  CHECK(e1["contextualized"] == "What do air molecules bump into?");
  CHECK(e1["fills"][0]["text"] == "air molecules");
  CHECK(e1["agreement_fixed"] == true);
  CHECK(out["placeholder_stats"]["total"] == 2);
}

TEST_CASE("atomic writes") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("qaframe_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string path = (dir / "out.txt").string();
  WriteFileAtomic(path, "first\n");
  CHECK(ReadFile(path) == "first\n");
  WriteFileAtomic(path, "second\n");
  CHECK(ReadFile(path) == "second\n");
  int files = 0;
  for (const auto &entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 1);
  CHECK_THROWS_AS(WriteFileAtomic((dir / "missing" / "x.txt").string(), "x"), Error);
  CHECK_THROWS_AS(ReadFile((dir / "nope").string()), Error);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace qaframe
