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

#include <sstream>

#include <doctest.h>

#include "qaframe/errors.h"
#include "qaframe/inflection.h"
#include "test_support.h"

namespace qaframe {
namespace {

using testing::Lexicon;

TEST_CASE("bundled lexicon covers common verbs") {
  CHECK(Lexicon().size() >= 2900);
  InflectionResult bring = Lexicon().Inflect("bring");
  CHECK_FALSE(bring.guessed);
  CHECK(bring.forms == VerbInflections{"bring", "brings", "brought", "brought", "bringing"});
  CHECK(Lexicon().Inflect("fix").forms ==
        VerbInflections{"fix", "fixes", "fixed", "fixed", "fixing"});
  CHECK(Lexicon().Inflect("take").forms ==
        VerbInflections{"take", "takes", "took", "taken", "taking"});
}

TEST_CASE("lexicon misses fall back to regular morphology") {
  InflectionResult xerox = Lexicon().Inflect("xerox");
  CHECK(xerox.guessed);
  CHECK(xerox.forms == VerbInflections{"xerox", "xeroxes", "xeroxed", "xeroxed", "xeroxing"});
  CHECK_THROWS_AS(Lexicon().Inflect(""), Error);
}

TEST_CASE("regular morphology") {
  struct Row {
    const char *stem, *s3, *past, *ing;
  };
  const Row rows[] = {
      {"blorp", "blorps", "blorped", "blorping"},  // plain
      {"glip", "glips", "glipped", "glipping"},    // monosyllabic CVC doubles
      {"snow", "snows", "snowed", "snowing"},      // no doubling of w
      {"fax", "faxes", "faxed", "faxing"},
      {"buzz", "buzzes", "buzzed", "buzzing"},
      {"carry", "carries", "carried", "carrying"},
      {"play", "plays", "played", "playing"},
      {"bake", "bakes", "baked", "baking"},
      {"free", "frees", "freed", "freeing"},
      {"untie", "unties", "untied", "untying"},
      {"visit", "visits", "visited", "visiting"},  // two syllables, no doubling
      {"wash", "washes", "washed", "washing"},
      {"echo", "echoes", "echoed", "echoing"},
  };
  for (const Row &r : rows) {
    CAPTURE(r.stem);
    VerbInflections v = RegularInflections(r.stem);
    CHECK(v.present3sg == r.s3);
    CHECK(v.past == r.past);
    CHECK(v.past_participle == r.past);
    CHECK(v.present_participle == r.ing);
  }
}

TEST_CASE("analysis maps surface forms back to readings") {
  auto readings = Lexicon().Analyze("brought");
  REQUIRE(readings.size() == 2);
  CHECK(readings[0].lemma == "bring");
  bool past = false, pp = false;
  for (const VerbAnalysis &a : readings) {
    past |= a.form == VerbForm::kPast;
    pp |= a.form == VerbForm::kPastParticiple;
  }
  CHECK(past);
  CHECK(pp);
  CHECK(Lexicon().Analyze("zzzz").empty());
}

TEST_CASE("lexicon file format") {
  std::istringstream ok("# comment\n\nfoo\tfoos\tfooed\tfooed\tfooing\n");
  InflectionLexicon lex = InflectionLexicon::Parse(ok, "mem");
  CHECK(lex.size() == 1);
  CHECK(lex.Find("foo") != nullptr);
  CHECK(lex.Find("bar") == nullptr);

  std::istringstream short_row("foo\tfoos\tfooed\n");
  try {
    InflectionLexicon::Parse(short_row, "mem");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("mem:1") != std::string::npos);
  }
  CHECK_THROWS_AS(InflectionLexicon::Load("/nonexistent/inflections.tsv"), Error);
}

TEST_CASE("verb form names") {
  for (VerbForm f : {VerbForm::kStem, VerbForm::kPresent3sg, VerbForm::kPast,
                     VerbForm::kPastParticiple, VerbForm::kPresentParticiple}) {
    CHECK(VerbFormFromName(VerbFormName(f)) == f);
  }
  CHECK_FALSE(VerbFormFromName("gerund").has_value());
}

}  // namespace
}  // namespace qaframe
