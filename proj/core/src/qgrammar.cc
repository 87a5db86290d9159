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

#include "qaframe/qgrammar.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "qaframe/errors.h"
#include "qaframe/text.h"

namespace qaframe {

namespace {

constexpr std::array<std::pair<WhWord, std::string_view>, 8> kWhNames = {{
    {WhWord::kWho, "who"},
    {WhWord::kWhat, "what"},
    {WhWord::kWhen, "when"},
    {WhWord::kWhere, "where"},
    {WhWord::kWhy, "why"},
    {WhWord::kHow, "how"},
    {WhWord::kHowMuch, "how much"},
    {WhWord::kHowLong, "how long"},
}};

constexpr std::array<std::pair<Placeholder, std::string_view>, 6>
    kPlaceholderNames = {{
        {Placeholder::kNone, ""},
        {Placeholder::kSomething, "something"},
        {Placeholder::kSomeone, "someone"},
        {Placeholder::kSomewhere, "somewhere"},
        {Placeholder::kDoSomething, "do something"},
        {Placeholder::kDoingSomething, "doing something"},
    }};

constexpr std::array<std::pair<Slot, std::string_view>, 7> kSlotNames = {{
    {Slot::kWh, "WH"},
    {Slot::kAux, "AUX"},
    {Slot::kSubj, "SUBJ"},
    {Slot::kVerb, "VERB"},
    {Slot::kObj, "OBJ"},
    {Slot::kPrep, "PREP"},
    {Slot::kMisc, "MISC"},
}};

enum class AuxClass { kNone, kDo, kBe, kHave, kModal };

struct AuxInfo {
  std::string_view token;
  AuxClass cls;
  std::string_view base;
  Tense tense;
  bool negated;
  bool plural;
};

// Finite auxiliaries admitted in the AUX slot. Plural forms only arise from
// agreement correction of filled questions.
constexpr AuxInfo kAuxiliaries[] = {
    {"does", AuxClass::kDo, "do", Tense::kPresent, false, false},
    {"doesn't", AuxClass::kDo, "do", Tense::kPresent, true, false},
    {"do", AuxClass::kDo, "do", Tense::kPresent, false, true},
    {"don't", AuxClass::kDo, "do", Tense::kPresent, true, true},
    {"did", AuxClass::kDo, "do", Tense::kPast, false, false},
    {"didn't", AuxClass::kDo, "do", Tense::kPast, true, false},
    {"is", AuxClass::kBe, "be", Tense::kPresent, false, false},
    {"isn't", AuxClass::kBe, "be", Tense::kPresent, true, false},
    {"are", AuxClass::kBe, "be", Tense::kPresent, false, true},
    {"aren't", AuxClass::kBe, "be", Tense::kPresent, true, true},
    {"was", AuxClass::kBe, "be", Tense::kPast, false, false},
    {"wasn't", AuxClass::kBe, "be", Tense::kPast, true, false},
    {"were", AuxClass::kBe, "be", Tense::kPast, false, true},
    {"weren't", AuxClass::kBe, "be", Tense::kPast, true, true},
    {"has", AuxClass::kHave, "have", Tense::kPresent, false, false},
    {"hasn't", AuxClass::kHave, "have", Tense::kPresent, true, false},
    {"have", AuxClass::kHave, "have", Tense::kPresent, false, true},
    {"haven't", AuxClass::kHave, "have", Tense::kPresent, true, true},
    {"had", AuxClass::kHave, "have", Tense::kPast, false, false},
    {"hadn't", AuxClass::kHave, "have", Tense::kPast, true, false},
    {"will", AuxClass::kModal, "will", Tense::kFuture, false, false},
    {"won't", AuxClass::kModal, "will", Tense::kFuture, true, false},
    {"would", AuxClass::kModal, "would", Tense::kPresent, false, false},
    {"wouldn't", AuxClass::kModal, "would", Tense::kPresent, true, false},
    {"can", AuxClass::kModal, "can", Tense::kPresent, false, false},
    {"can't", AuxClass::kModal, "can", Tense::kPresent, true, false},
    {"could", AuxClass::kModal, "could", Tense::kPresent, false, false},
    {"couldn't", AuxClass::kModal, "could", Tense::kPresent, true, false},
    {"should", AuxClass::kModal, "should", Tense::kPresent, false, false},
    {"shouldn't", AuxClass::kModal, "should", Tense::kPresent, true, false},
    {"must", AuxClass::kModal, "must", Tense::kPresent, false, false},
    {"mustn't", AuxClass::kModal, "must", Tense::kPresent, true, false},
    {"may", AuxClass::kModal, "may", Tense::kPresent, false, false},
    {"might", AuxClass::kModal, "might", Tense::kPresent, false, false},
    {"shall", AuxClass::kModal, "shall", Tense::kPresent, false, false},
};

const AuxInfo *FindAux(std::string_view token) {
  for (const AuxInfo &info : kAuxiliaries) {
    if (info.token == token) return &info;
  }
  return nullptr;
}

// Legal (auxiliary class, non-finite chain, main verb form) combinations and
// their aspect/voice readings.
struct ChainShape {
  AuxClass aux;
  std::array<std::string_view, 3> prefix;  // unused entries are empty
  VerbForm form;
  bool perfect;
  bool progressive;
  Voice voice;
};

using VF = VerbForm;
constexpr Voice kAct = Voice::kActive;
constexpr Voice kPas = Voice::kPassive;

constexpr ChainShape kChainShapes[] = {
    {AuxClass::kNone, {}, VF::kPresent3sg, false, false, kAct},
    {AuxClass::kNone, {}, VF::kPast, false, false, kAct},
    {AuxClass::kDo, {}, VF::kStem, false, false, kAct},
    {AuxClass::kBe, {}, VF::kPresentParticiple, false, true, kAct},
    {AuxClass::kBe, {}, VF::kPastParticiple, false, false, kPas},
    {AuxClass::kBe, {"being"}, VF::kPastParticiple, false, true, kPas},
    {AuxClass::kHave, {}, VF::kPastParticiple, true, false, kAct},
    {AuxClass::kHave, {"been"}, VF::kPresentParticiple, true, true, kAct},
    {AuxClass::kHave, {"been"}, VF::kPastParticiple, true, false, kPas},
    {AuxClass::kHave, {"been", "being"}, VF::kPastParticiple, true, true, kPas},
    {AuxClass::kModal, {}, VF::kStem, false, false, kAct},
    {AuxClass::kModal, {"be"}, VF::kPresentParticiple, false, true, kAct},
    {AuxClass::kModal, {"be"}, VF::kPastParticiple, false, false, kPas},
    {AuxClass::kModal, {"be", "being"}, VF::kPastParticiple, false, true, kPas},
    {AuxClass::kModal, {"have"}, VF::kPastParticiple, true, false, kAct},
    {AuxClass::kModal, {"have", "been"}, VF::kPresentParticiple, true, true, kAct},
    {AuxClass::kModal, {"have", "been"}, VF::kPastParticiple, true, false, kPas},
    {AuxClass::kModal, {"have", "been", "being"}, VF::kPastParticiple, true, true, kPas},
};

bool PrefixMatches(const ChainShape &shape,
                   const std::vector<std::string> &prefix) {
  size_t n = 0;
  while (n < shape.prefix.size() && !shape.prefix[n].empty()) ++n;
  if (n != prefix.size()) return false;
  for (size_t i = 0; i < n; ++i) {
    if (shape.prefix[i] != prefix[i]) return false;
  }
  return true;
}

const ChainShape *FindShape(AuxClass cls, const std::vector<std::string> &prefix,
                            VerbForm form) {
  for (const ChainShape &shape : kChainShapes) {
    if (shape.aux == cls && shape.form == form && PrefixMatches(shape, prefix)) {
      return &shape;
    }
  }
  return nullptr;
}

constexpr std::string_view kPrepositions[] = {
    "about",   "above",   "across",  "after",      "against", "along",
    "among",   "around",  "as",      "at",         "away",    "back",
    "before",  "behind",  "below",   "beneath",    "beside",  "between",
    "beyond",  "by",      "down",    "during",     "except",  "for",
    "from",    "in",      "inside",  "into",       "like",    "near",
    "of",      "off",     "on",      "onto",       "out",     "outside",
    "over",    "past",    "per",     "since",      "through", "throughout",
    "to",      "toward",  "towards", "under",      "until",   "up",
    "upon",    "versus",  "via",     "with",       "within",  "without",
    "together", "apart",  "forward", "home",
};

Animacy AnimacyOf(Placeholder p) {
  if (p == Placeholder::kSomeone) return Animacy::kAnimate;
  if (p == Placeholder::kSomething) return Animacy::kInanimate;
  return Animacy::kNotApplicable;
}

Animacy AnimacyOf(WhWord wh) {
  if (wh == WhWord::kWho) return Animacy::kAnimate;
  if (wh == WhWord::kWhat) return Animacy::kInanimate;
  return Animacy::kNotApplicable;
}

Placeholder WithAnimacy(Placeholder p, Animacy a) {
  if (!IsNominalPlaceholder(p) || a == Animacy::kNotApplicable) return p;
  return a == Animacy::kAnimate ? Placeholder::kSomeone : Placeholder::kSomething;
}

std::string Quote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

std::string_view WhName(WhWord wh) {
  for (const auto &[w, name] : kWhNames) {
    if (w == wh) return name;
  }
  return "what";
}

std::optional<WhWord> WhFromName(std::string_view name) {
  for (const auto &[w, n] : kWhNames) {
    if (n == name) return w;
  }
  return std::nullopt;
}

std::string_view PlaceholderName(Placeholder p) {
  for (const auto &[ph, name] : kPlaceholderNames) {
    if (ph == p) return name;
  }
  return "";
}

std::optional<Placeholder> PlaceholderFromName(std::string_view name) {
  for (const auto &[ph, n] : kPlaceholderNames) {
    if (n == name) return ph;
  }
  return std::nullopt;
}

std::string_view SlotName(Slot slot) {
  for (const auto &[s, name] : kSlotNames) {
    if (s == slot) return name;
  }
  return "";
}

std::optional<Slot> SlotFromName(std::string_view name) {
  for (const auto &[s, n] : kSlotNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

bool IsAdverbialWh(WhWord wh) {
  return wh != WhWord::kWho && wh != WhWord::kWhat;
}

bool IsNominalPlaceholder(Placeholder p) {
  return p == Placeholder::kSomething || p == Placeholder::kSomeone;
}

bool IsAuxiliary(std::string_view token) { return FindAux(token) != nullptr; }

bool IsPreposition(std::string_view token) {
  return std::find(std::begin(kPrepositions), std::end(kPrepositions), token) !=
         std::end(kPrepositions);
}

bool IsChainToken(std::string_view token) {
  return token == "be" || token == "been" || token == "being" ||
         token == "have";
}

std::string_view TenseName(Tense t) {
  switch (t) {
    case Tense::kPresent: return "present";
    case Tense::kPast: return "past";
    case Tense::kFuture: return "future";
  }
  return "present";
}

std::string_view VoiceName(Voice v) {
  return v == Voice::kActive ? "active" : "passive";
}

std::string_view AnimacyName(Animacy a) {
  switch (a) {
    case Animacy::kNotApplicable: return "n/a";
    case Animacy::kInanimate: return "inanimate";
    case Animacy::kAnimate: return "animate";
  }
  return "n/a";
}

std::string DescribeSignature(const TamvnSignature &sig) {
  std::ostringstream out;
  out << "tense=" << TenseName(sig.tense)
      << " modal=" << (sig.modal.empty() ? "-" : sig.modal)
      << " negated=" << (sig.negated ? "yes" : "no")
      << " perfect=" << (sig.perfect ? "yes" : "no")
      << " progressive=" << (sig.progressive ? "yes" : "no")
      << " voice=" << VoiceName(sig.voice) << " wh=" << AnimacyName(sig.wh)
      << " subj=" << AnimacyName(sig.subj) << " obj=" << AnimacyName(sig.obj)
      << " misc=" << AnimacyName(sig.misc);
  return out.str();
}

namespace {

struct ChainReading {
  const AuxInfo *aux;  // null when AUX is empty
  const ChainShape *shape;
};

ChainReading ReadChain(const SlotQuestion &q) {
  const AuxInfo *aux = nullptr;
  if (!q.aux.empty()) {
    aux = FindAux(q.aux);
    if (aux == nullptr) {
      throw Error(ErrorKind::kVocabulary, "unknown auxiliary " + Quote(q.aux));
    }
  }
  const ChainShape *shape =
      FindShape(aux ? aux->cls : AuxClass::kNone, q.verb_prefix, q.verb_form);
  if (shape == nullptr) {
    std::string chain = q.aux.empty() ? "<none>" : q.aux;
    for (const auto &p : q.verb_prefix) chain += " " + p;
    throw Error(ErrorKind::kGrammar,
                "auxiliary chain '" + chain + "' cannot govern a " +
                    std::string(VerbFormName(q.verb_form)) + " verb");
  }
  return {aux, shape};
}

}  // namespace

void Validate(const SlotQuestion &q) {
  if (q.verb_lemma.empty()) throw Error(ErrorKind::kFormat, "missing VERB slot");
  for (char c : q.verb_lemma) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kFormat, "verb lemma contains whitespace");
    }
  }
  auto check_np = [](Placeholder p, std::string_view slot) {
    if (p != Placeholder::kNone && !IsNominalPlaceholder(p)) {
      throw Error(ErrorKind::kVocabulary,
                  std::string(slot) + " cannot hold " +
                      Quote(PlaceholderName(p)));
    }
  };
  check_np(q.subj, "SUBJ");
  check_np(q.obj, "OBJ");
  for (const auto &p : q.verb_prefix) {
    if (!IsChainToken(p)) {
      throw Error(ErrorKind::kVocabulary, "unknown verb-chain token " + Quote(p));
    }
  }
  if (!q.prep.empty() && !IsPreposition(q.prep)) {
    throw Error(ErrorKind::kVocabulary, "unknown preposition " + Quote(q.prep));
  }
  if (q.subj != Placeholder::kNone && q.aux.empty()) {
    throw Error(ErrorKind::kGrammar, "a question with a SUBJ needs an AUX");
  }
  if (IsNominalPlaceholder(q.misc) && q.prep.empty() &&
      q.obj == Placeholder::kNone) {
    throw Error(ErrorKind::kGrammar,
                "a bare nominal MISC requires an OBJ (write it in OBJ)");
  }
  if (!IsAdverbialWh(q.wh) && q.subj != Placeholder::kNone &&
      q.obj != Placeholder::kNone && q.misc != Placeholder::kNone) {
    throw Error(ErrorKind::kGrammar, "question leaves no gap for its wh-word");
  }
  ReadChain(q);
}

SlotQuestion ParseSlots(const SlotRecord &record,
                        const InflectionLexicon &lexicon) {
  auto norm = [](const std::string &s) { return CollapseSpaces(ToLower(s)); };
  SlotQuestion q;
  std::string wh = norm(record.wh);
  std::string verb = norm(record.verb);
  if (wh.empty()) throw Error(ErrorKind::kFormat, "missing WH slot");
  if (verb.empty()) throw Error(ErrorKind::kFormat, "missing VERB slot");
  auto wh_word = WhFromName(wh);
  if (!wh_word) throw Error(ErrorKind::kVocabulary, "unknown wh-word " + Quote(wh));
  q.wh = *wh_word;

  q.aux = norm(record.aux);
  if (!q.aux.empty() && !IsAuxiliary(q.aux)) {
    throw Error(ErrorKind::kVocabulary, "unknown auxiliary " + Quote(q.aux));
  }

  auto placeholder = [&](const std::string &raw, std::string_view slot) {
    std::string v = norm(raw);
    auto p = PlaceholderFromName(v);
    if (!p) {
      throw Error(ErrorKind::kVocabulary, "unknown " + std::string(slot) +
                                              " placeholder " + Quote(v));
    }
    return *p;
  };
  q.subj = placeholder(record.subj, "SUBJ");
  q.obj = placeholder(record.obj, "OBJ");
  q.misc = placeholder(record.misc, "MISC");

  std::string tag = norm(record.verb_form);
  if (tag.empty()) throw Error(ErrorKind::kFormat, "missing verb_form tag");
  auto form = VerbFormFromName(tag);
  if (!form) throw Error(ErrorKind::kVocabulary, "unknown verb form " + Quote(tag));
  q.verb_form = *form;

  std::vector<std::string> chain = SplitWhitespace(verb);
  std::string main = chain.back();
  chain.pop_back();
  q.verb_prefix = chain;
  for (const VerbAnalysis &a : lexicon.Analyze(main)) {
    if (a.form == *form) {
      q.verb_lemma = a.lemma;
      break;
    }
  }
  if (q.verb_lemma.empty()) {
    if (*form != VerbForm::kStem) {
      throw Error(ErrorKind::kVocabulary,
                  "verb " + Quote(main) + " is not a known " + tag + " form");
    }
    q.verb_lemma = main;
  }

  q.prep = norm(record.prep);
  if (!q.prep.empty() && !IsPreposition(q.prep)) {
    throw Error(ErrorKind::kVocabulary, "unknown preposition " + Quote(q.prep));
  }
  Validate(q);
  return q;
}

SlotRecord ToRecord(const SlotQuestion &q, const InflectionLexicon &lexicon) {
  SlotRecord r;
  r.wh = std::string(WhName(q.wh));
  r.aux = q.aux;
  r.subj = std::string(PlaceholderName(q.subj));
  for (const auto &p : q.verb_prefix) r.verb += p + " ";
  r.verb += lexicon.Inflect(q.verb_lemma).forms.Get(q.verb_form);
  r.verb_form = std::string(VerbFormName(q.verb_form));
  r.obj = std::string(PlaceholderName(q.obj));
  r.prep = q.prep;
  r.misc = std::string(PlaceholderName(q.misc));
  return r;
}

namespace {

// Parses everything after the main verb: [OBJ] [PREP] [MISC].
bool ParseTail(const std::vector<std::string> &t, size_t pos, SlotQuestion &q) {
  auto nominal = [&](size_t i) {
    return i < t.size() && (t[i] == "something" || t[i] == "someone");
  };
  if (nominal(pos)) q.obj = *PlaceholderFromName(t[pos++]);
  if (pos < t.size() && IsPreposition(t[pos])) q.prep = t[pos++];
  if (pos < t.size()) {
    if ((t[pos] == "do" || t[pos] == "doing") && pos + 1 < t.size() &&
        t[pos + 1] == "something") {
      q.misc = t[pos] == "do" ? Placeholder::kDoSomething
                              : Placeholder::kDoingSomething;
      pos += 2;
    } else if (nominal(pos) || t[pos] == "somewhere") {
      q.misc = *PlaceholderFromName(t[pos++]);
    }
  }
  return pos == t.size();
}

}  // namespace

SlotQuestion ParseSurface(std::string_view text,
                          const InflectionLexicon &lexicon) {
  std::vector<std::string> t = SplitWhitespace(ToLower(text));
  if (!t.empty() && t.back() == "?") {
    t.pop_back();
  } else if (!t.empty() && t.back().size() > 1 && t.back().back() == '?') {
    t.back().pop_back();
  }
  const std::string where = "cannot parse question " + Quote(text) + ": ";
  if (t.empty()) throw Error(ErrorKind::kParse, where + "empty");

  SlotQuestion base;
  size_t pos = 0;
  if (t[0] == "how" && t.size() > 1 && (t[1] == "much" || t[1] == "long")) {
    base.wh = t[1] == "much" ? WhWord::kHowMuch : WhWord::kHowLong;
    pos = 2;
  } else if (auto wh = WhFromName(t[0])) {
    base.wh = *wh;
    pos = 1;
  } else {
    throw Error(ErrorKind::kParse, where + "does not start with a wh-word");
  }

  bool saw_verb = false;
  std::vector<size_t> aux_options;
  if (pos < t.size() && IsAuxiliary(t[pos])) aux_options.push_back(pos + 1);
  aux_options.push_back(pos);
  for (size_t after_aux : aux_options) {
    SlotQuestion q = base;
    if (after_aux != pos) q.aux = t[pos];
    size_t p = after_aux;
    if (p < t.size() && (t[p] == "something" || t[p] == "someone")) {
      q.subj = *PlaceholderFromName(t[p++]);
    }
    size_t max_prefix = 0;
    while (p + max_prefix < t.size() && max_prefix < 3 &&
           IsChainToken(t[p + max_prefix])) {
      ++max_prefix;
    }
    for (size_t n = max_prefix + 1; n-- > 0;) {
      size_t verb_pos = p + n;
      if (verb_pos >= t.size()) continue;
      for (const VerbAnalysis &a : lexicon.Analyze(t[verb_pos])) {
        saw_verb = true;
        SlotQuestion cand = q;
        cand.verb_prefix.assign(t.begin() + p, t.begin() + verb_pos);
        cand.verb_lemma = a.lemma;
        cand.verb_form = a.form;
        if (!ParseTail(t, verb_pos + 1, cand)) continue;
        try {
          Validate(cand);
        } catch (const Error &) {
          continue;
        }
        return cand;
      }
    }
  }
  throw Error(ErrorKind::kParse,
              where + (saw_verb ? "tokens outside the slot grammar"
                                : "no verb from the lexicon"));
}

std::vector<RenderedWord> RenderWords(const SlotQuestion &q,
                                      const InflectionLexicon &lexicon) {
  Validate(q);
  std::vector<RenderedWord> words;
  auto push = [&](std::string_view text, Slot slot) {
    for (const auto &w : SplitWhitespace(text)) words.push_back({w, slot});
  };
  push(WhName(q.wh), Slot::kWh);
  push(q.aux, Slot::kAux);
  push(PlaceholderName(q.subj), Slot::kSubj);
  for (const auto &p : q.verb_prefix) push(p, Slot::kVerb);
  push(lexicon.Inflect(q.verb_lemma).forms.Get(q.verb_form), Slot::kVerb);
  push(PlaceholderName(q.obj), Slot::kObj);
  push(q.prep, Slot::kPrep);
  push(PlaceholderName(q.misc), Slot::kMisc);
  return words;
}

std::string Render(const SlotQuestion &q, const InflectionLexicon &lexicon) {
  std::string out;
  for (const auto &w : RenderWords(q, lexicon)) {
    if (!out.empty()) out += ' ';
    out += w.text;
  }
  return CapitalizeFirst(out) + "?";
}

std::string RenderTokenized(const SlotQuestion &q,
                            const InflectionLexicon &lexicon) {
  std::string out;
  for (const auto &w : RenderWords(q, lexicon)) out += w.text + " ";
  return out + "?";
}

Voice VoiceOf(const SlotQuestion &q) { return ReadChain(q).shape->voice; }

TamvnSignature DecomposeTamvn(const SlotQuestion &q) {
  Validate(q);
  ChainReading chain = ReadChain(q);
  TamvnSignature sig;
  if (chain.aux == nullptr) {
    sig.tense = q.verb_form == VerbForm::kPast ? Tense::kPast : Tense::kPresent;
  } else {
    sig.tense = chain.aux->tense;
    sig.negated = chain.aux->negated;
    if (chain.aux->cls == AuxClass::kModal) sig.modal = chain.aux->base;
  }
  sig.perfect = chain.shape->perfect;
  sig.progressive = chain.shape->progressive;
  sig.voice = chain.shape->voice;
  sig.wh = AnimacyOf(q.wh);
  sig.subj = q.subj == Placeholder::kNone ? sig.wh : AnimacyOf(q.subj);
  sig.obj = AnimacyOf(q.obj);
  sig.misc = AnimacyOf(q.misc);
  return sig;
}

SlotQuestion ApplyTamvn(const SlotQuestion &prototype,
                        const TamvnSignature &sig) {
  Validate(prototype);
  if (VoiceOf(prototype) != sig.voice) {
    throw Error(ErrorKind::kGrammar,
                "signature voice differs from the question's voice");
  }
  std::string modal = sig.modal;
  if (sig.tense == Tense::kFuture) {
    if (modal.empty()) modal = "will";
    if (modal != "will") {
      throw Error(ErrorKind::kGrammar,
                  "future tense is only expressed with 'will'");
    }
  } else if (modal == "will") {
    throw Error(ErrorKind::kGrammar, "'will' implies future tense");
  } else if (!modal.empty() && sig.tense != Tense::kPresent) {
    throw Error(ErrorKind::kGrammar, "modal " + Quote(modal) +
                                         " cannot carry past tense");
  }

  const bool has_subj = prototype.subj != Placeholder::kNone;
  AuxClass cls;
  if (!modal.empty()) {
    cls = AuxClass::kModal;
  } else if (sig.perfect) {
    cls = AuxClass::kHave;
  } else if (sig.progressive || sig.voice == Voice::kPassive) {
    cls = AuxClass::kBe;
  } else if (sig.negated || has_subj) {
    cls = AuxClass::kDo;
  } else {
    cls = AuxClass::kNone;
  }

  const ChainShape *shape = nullptr;
  for (const ChainShape &s : kChainShapes) {
    if (s.aux != cls || s.perfect != sig.perfect ||
        s.progressive != sig.progressive || s.voice != sig.voice) {
      continue;
    }
    if (cls == AuxClass::kNone &&
        s.form != (sig.tense == Tense::kPast ? VerbForm::kPast
                                             : VerbForm::kPresent3sg)) {
      continue;
    }
    shape = &s;
    break;
  }
  if (shape == nullptr) {
    throw Error(ErrorKind::kGrammar, "no auxiliary chain realizes " +
                                         DescribeSignature(sig));
  }

  SlotQuestion out = prototype;
  out.aux.clear();
  if (cls != AuxClass::kNone) {
    std::string_view base = cls == AuxClass::kModal ? std::string_view(modal)
                            : cls == AuxClass::kDo  ? "do"
                            : cls == AuxClass::kBe  ? "be"
                                                    : "have";
    Tense tense = cls == AuxClass::kModal ? Tense::kPresent : sig.tense;
    if (cls == AuxClass::kModal && modal == "will") tense = Tense::kFuture;
    for (const AuxInfo &info : kAuxiliaries) {
      if (info.cls == cls && info.base == base && info.tense == tense &&
          info.negated == sig.negated && !info.plural) {
        out.aux = std::string(info.token);
        break;
      }
    }
    if (out.aux.empty()) {
      throw Error(ErrorKind::kGrammar,
                  "no single-token auxiliary for " + DescribeSignature(sig));
    }
  }
  out.verb_prefix.clear();
  for (std::string_view p : shape->prefix) {
    if (!p.empty()) out.verb_prefix.emplace_back(p);
  }
  out.verb_form = shape->form;

  if (!IsAdverbialWh(out.wh)) {
    Animacy a = has_subj ? sig.wh : sig.subj;
    if (a == Animacy::kNotApplicable) a = sig.wh;
    if (a != Animacy::kNotApplicable) {
      out.wh = a == Animacy::kAnimate ? WhWord::kWho : WhWord::kWhat;
    }
  }
  out.subj = WithAnimacy(out.subj, sig.subj);
  out.obj = WithAnimacy(out.obj, sig.obj);
  out.misc = WithAnimacy(out.misc, sig.misc);
  return out;
}

}  // namespace qaframe
