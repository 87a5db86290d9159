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

#include <cctype>
#include <functional>

#include <doctest.h>

#include "qaframe/errors.h"
#include "qaframe/prototype.h"
#include "qaframe/qgrammar.h"
#include "qaframe/text.h"
#include "test_support.h"

namespace qaframe {
namespace {

using testing::Lexicon;

SlotQuestion Parse(const std::string &text) { return ParseSurface(text, Lexicon()); }

ErrorKind KindOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIo;
}

TEST_CASE("slot records") {
  SlotQuestion bring = ParseSlots(
      {"Who", "might", "", "bring", "stem", "something", "to", "someone"}, Lexicon());
  CHECK(bring.wh == WhWord::kWho);
  CHECK(bring.aux == "might");
  CHECK(bring.subj == Placeholder::kNone);
  CHECK(bring.verb_lemma == "bring");
  CHECK(bring.verb_form == VerbForm::kStem);
  CHECK(bring.obj == Placeholder::kSomething);
  CHECK(bring.prep == "to");
  CHECK(bring.misc == Placeholder::kSomeone);
  CHECK(Render(bring, Lexicon()) == "Who might bring something to someone?");

  SlotQuestion arrive =
      ParseSlots({"Where", "would", "someone", "arrive", "stem", "", "at", ""}, Lexicon());
  CHECK(arrive.wh == WhWord::kWhere);
  CHECK(arrive.subj == Placeholder::kSomeone);
  CHECK(arrive.obj == Placeholder::kNone);
  CHECK(arrive.prep == "at");
  CHECK(Render(arrive, Lexicon()) == "Where would someone arrive at?");

  SlotQuestion sold = Parse("What was something sold for ?");
  SlotQuestion expected{WhWord::kWhat, "was", Placeholder::kSomething, {}, "sell",
                        VerbForm::kPastParticiple, Placeholder::kNone, "for",
                        Placeholder::kNone};
  CHECK(sold == expected);
  CHECK(ToRecord(sold, Lexicon()).verb == "sold");
  CHECK(ParseSlots(ToRecord(sold, Lexicon()), Lexicon()) == sold);

  CHECK(KindOf([] {
          ParseSlots({"Who", "might", "", "", "stem", "something", "", ""}, Lexicon());
        }) == ErrorKind::kFormat);
  CHECK(KindOf([] {
          ParseSlots({"", "might", "", "bring", "stem", "", "", ""}, Lexicon());
        }) == ErrorKind::kFormat);
  CHECK(KindOf([] {
          ParseSlots({"Who", "might", "", "bring", "stem", "somebody", "", ""}, Lexicon());
        }) == ErrorKind::kVocabulary);
}

TEST_CASE("surface parsing") {
  SlotQuestion fixed = Parse("What is fixed ?");
  CHECK(fixed.aux == "is");
  CHECK(fixed.verb_lemma == "fix");
  CHECK(fixed.verb_form == VerbForm::kPastParticiple);
  CHECK(fixed.subj == Placeholder::kNone);
  CHECK(Parse("What is fixed?") == fixed);
  CHECK(Parse("what is fixed ?") == fixed);

  CHECK(KindOf([] { Parse("Blue the sold what ?"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { Parse("What is ?"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { Parse("What is fixed something something something?"); }) ==
        ErrorKind::kParse);

  SlotQuestion bump{WhWord::kWhat, "", Placeholder::kNone, {}, "bump",
                    VerbForm::kPresent3sg, Placeholder::kNone, "into", Placeholder::kSomething};
  CHECK(Render(bump, Lexicon()) == "What bumps into something?");
  CHECK(RenderTokenized(bump, Lexicon()) == "what bumps into something ?");
  CHECK(Render(Parse("Where would someone arrive at?"), Lexicon()) ==
        "Where would someone arrive at?");
}

TEST_CASE("signature decomposition") {
  TamvnSignature fixed = DecomposeTamvn(Parse("What won't be fixed?"));
  CHECK(fixed.tense == Tense::kFuture);
  CHECK(fixed.modal == "will");
  CHECK(fixed.negated);
  CHECK(fixed.voice == Voice::kPassive);
  CHECK_FALSE(fixed.perfect);

  TamvnSignature bump = DecomposeTamvn(Parse("What bumps into something?"));
  CHECK(bump.tense == Tense::kPresent);
  CHECK(bump.modal.empty());
  CHECK_FALSE(bump.negated);
  CHECK(bump.voice == Voice::kActive);

  TamvnSignature changed = DecomposeTamvn(Parse("Who might have changed something?"));
  CHECK(changed.tense == Tense::kPresent);
  CHECK(changed.modal == "might");
  CHECK(changed.perfect);
  CHECK(changed.voice == Voice::kActive);
  CHECK(changed.wh == Animacy::kAnimate);

  TamvnSignature sold = DecomposeTamvn(Parse("What was something sold for?"));
  CHECK(sold.tense == Tense::kPast);
  CHECK(sold.voice == Voice::kPassive);

  TamvnSignature progressive = DecomposeTamvn(Parse("What is being fixed?"));
  CHECK(progressive.progressive);
  CHECK(progressive.voice == Voice::kPassive);
}

TEST_CASE("signature application") {
  SlotQuestion fixed = Parse("What is fixed?");
  TamvnSignature sig = DecomposeTamvn(fixed);
  sig.tense = Tense::kFuture;
  sig.modal = "will";
  sig.negated = true;
  CHECK(Render(ApplyTamvn(fixed, sig), Lexicon()) == "What won't be fixed?");

  SlotQuestion changes = Parse("What changes something?");
  TamvnSignature might = DecomposeTamvn(changes);
  might.modal = "might";
  might.perfect = true;
  might.subj = Animacy::kAnimate;
  CHECK(Render(ApplyTamvn(changes, might), Lexicon()) == "Who might have changed something?");

  TamvnSignature contradictory = DecomposeTamvn(changes);
  contradictory.modal = "might";
  contradictory.negated = true;
  CHECK(KindOf([&] { ApplyTamvn(changes, contradictory); }) == ErrorKind::kGrammar);
}

TEST_CASE("corpus round trips") {
  auto rows = testing::LoadQuestions();
  REQUIRE(rows.size() >= 200);
  for (const auto &row : rows) {
    CAPTURE(row.question);
    SlotQuestion q = Parse(row.question);
    std::string rendered = Render(q, Lexicon());
    CHECK(rendered == row.question);
    CHECK(Parse(rendered) == q);
    CHECK(Parse(RenderTokenized(q, Lexicon())) == q);
    CHECK(ParseSlots(ToRecord(q, Lexicon()), Lexicon()) == q);

    TamvnSignature sig = DecomposeTamvn(q);
    SlotQuestion rebuilt = ApplyTamvn(ToPrototype(q), sig);
    CHECK(rebuilt == q);
    CHECK(DecomposeTamvn(rebuilt) == sig);
    CHECK(ApplyTamvn(q, sig) == q);

    int finite = 0;
    for (const RenderedWord &w : RenderWords(q, Lexicon())) {
      if (w.slot == Slot::kAux && IsAuxiliary(ToLower(w.text))) ++finite;
    }
    CHECK(finite <= 1);
    CHECK(rendered.back() == '?');
    CHECK(std::isupper(static_cast<unsigned char>(rendered.front())));
  }
}

TEST_CASE("name tables") {
  for (WhWord wh : {WhWord::kWho, WhWord::kWhat, WhWord::kWhen, WhWord::kWhere, WhWord::kWhy,
                    WhWord::kHow, WhWord::kHowMuch, WhWord::kHowLong}) {
    CHECK(WhFromName(WhName(wh)) == wh);
  }
  for (Slot s : {Slot::kWh, Slot::kAux, Slot::kSubj, Slot::kVerb, Slot::kObj, Slot::kPrep,
                 Slot::kMisc}) {
    CHECK(SlotFromName(SlotName(s)) == s);
  }
  CHECK(PlaceholderFromName("do something") == Placeholder::kDoSomething);
  CHECK_FALSE(PlaceholderFromName("somebody").has_value());
}

}  // namespace
}  // namespace qaframe
