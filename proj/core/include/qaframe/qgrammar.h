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

// Seven-slot QA-SRL questions: representation, parsing, rendering, and the
// tense/aspect/modality/voice/negation reading of the AUX and VERB slots.

#ifndef QAFRAME_QGRAMMAR_H_
#define QAFRAME_QGRAMMAR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaframe/inflection.h"

namespace qaframe {

enum class WhWord { kWho, kWhat, kWhen, kWhere, kWhy, kHow, kHowMuch, kHowLong };

// Placeholder fillers. SUBJ and OBJ only take kNone/kSomething/kSomeone;
// MISC takes all of them.
enum class Placeholder {
  kNone,
  kSomething,
  kSomeone,
  kSomewhere,
  kDoSomething,
  kDoingSomething,
};

enum class Slot { kWh, kAux, kSubj, kVerb, kObj, kPrep, kMisc };

std::string_view WhName(WhWord wh);  // "who", ..., "how much"
std::optional<WhWord> WhFromName(std::string_view name);
std::string_view PlaceholderName(Placeholder p);  // "" for kNone
std::optional<Placeholder> PlaceholderFromName(std::string_view name);
std::string_view SlotName(Slot slot);  // "WH", "AUX", "SUBJ", ...
std::optional<Slot> SlotFromName(std::string_view name);

bool IsAdverbialWh(WhWord wh);
bool IsNominalPlaceholder(Placeholder p);  // something / someone

// Closed vocabularies.
bool IsAuxiliary(std::string_view token);
bool IsPreposition(std::string_view token);
bool IsChainToken(std::string_view token);  // be, been, being, have

struct SlotQuestion {
  WhWord wh = WhWord::kWhat;
  std::string aux;  // empty when absent
  Placeholder subj = Placeholder::kNone;
  std::vector<std::string> verb_prefix;  // non-finite auxiliaries, e.g. {"have", "been"}
  std::string verb_lemma;
  VerbForm verb_form = VerbForm::kStem;
  Placeholder obj = Placeholder::kNone;
  std::string prep;  // empty when absent
  Placeholder misc = Placeholder::kNone;

  bool operator==(const SlotQuestion &) const = default;
};

// Raw slot record as found in corpus files. `verb` holds the surface verb
// chain (e.g. "be fixed"); `verb_form` tags its last token.
struct SlotRecord {
  std::string wh;
  std::string aux;
  std::string subj;
  std::string verb;
  std::string verb_form;
  std::string obj;
  std::string prep;
  std::string misc;
};

// Throws Error (kFormat / kVocabulary / kGrammar) if `q` breaks a slot
// invariant or falls outside the auxiliary-chain grammar.
void Validate(const SlotQuestion &q);

SlotQuestion ParseSlots(const SlotRecord &record,
                        const InflectionLexicon &lexicon);
SlotRecord ToRecord(const SlotQuestion &q, const InflectionLexicon &lexicon);

// Whitespace tokens; a trailing "?" may be attached or separate.
SlotQuestion ParseSurface(std::string_view text,
                          const InflectionLexicon &lexicon);

struct RenderedWord {
  std::string text;
  Slot slot;
};

// Lowercase words in slot order, without the question mark.
std::vector<RenderedWord> RenderWords(const SlotQuestion &q,
                                      const InflectionLexicon &lexicon);

// "Who might bring something to someone?"
std::string Render(const SlotQuestion &q, const InflectionLexicon &lexicon);

// Lowercase with a detached question mark: "what studies something ?"
std::string RenderTokenized(const SlotQuestion &q,
                            const InflectionLexicon &lexicon);

enum class Tense { kPresent, kPast, kFuture };
enum class Voice { kActive, kPassive };
enum class Animacy { kNotApplicable, kInanimate, kAnimate };

std::string_view TenseName(Tense t);
std::string_view VoiceName(Voice v);
std::string_view AnimacyName(Animacy a);

struct TamvnSignature {
  Tense tense = Tense::kPresent;
  std::string modal;  // base modal ("will", "might", ...); empty if none
  bool negated = false;
  bool perfect = false;
  bool progressive = false;
  Voice voice = Voice::kActive;
  // Animacy of the wh-word, and of each placeholder position. When SUBJ is
  // empty the wh-word is the subject and `subj` describes it.
  Animacy wh = Animacy::kNotApplicable;
  Animacy subj = Animacy::kNotApplicable;
  Animacy obj = Animacy::kNotApplicable;
  Animacy misc = Animacy::kNotApplicable;

  bool operator==(const TamvnSignature &) const = default;
};

std::string DescribeSignature(const TamvnSignature &sig);

TamvnSignature DecomposeTamvn(const SlotQuestion &q);

// Rewrites the AUX/VERB slots (and who/what, someone/something) of a
// prototype so that DecomposeTamvn of the result equals `sig`. Throws
// kGrammar for signatures the grammar cannot realize.
SlotQuestion ApplyTamvn(const SlotQuestion &prototype,
                        const TamvnSignature &sig);

Voice VoiceOf(const SlotQuestion &q);

}  // namespace qaframe

#endif  // QAFRAME_QGRAMMAR_H_
