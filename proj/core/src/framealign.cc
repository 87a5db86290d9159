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

#include "qaframe/framealign.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "qaframe/prototype.h"
#include "qaframe/text.h"

namespace qaframe {

std::string_view FillRuleName(FillRule rule) {
  switch (rule) {
    case FillRule::kBase: return "base";
    case FillRule::kObjPassiveSubj: return "obj-passive-subj";
    case FillRule::kSubjByPp: return "subj-by-pp";
    case FillRule::kLocWhere: return "loc-where";
    case FillRule::kStrippedMisc: return "stripped-misc";
  }
  return "base";
}

std::vector<Slot> FillableSlots(const SlotQuestion &q) {
  std::vector<Slot> slots;
  if (IsNominalPlaceholder(q.subj)) slots.push_back(Slot::kSubj);
  if (IsNominalPlaceholder(q.obj)) slots.push_back(Slot::kObj);
  if (IsNominalPlaceholder(q.misc) || q.misc == Placeholder::kSomewhere) {
    slots.push_back(Slot::kMisc);
  }
  return slots;
}

namespace {

std::optional<Function> SlotFunction(const DeclarativeReading &r, Slot slot) {
  switch (slot) {
    case Slot::kSubj: return r.subj_slot;
    case Slot::kObj: return r.obj_slot;
    case Slot::kMisc: return r.misc_slot;
    default: return std::nullopt;
  }
}

// Shapes named by the extra correspondences.
bool IsTransitive(const StructureKey &k) {
  return k.voice == Voice::kActive && k.has_subj && k.has_obj;
}

bool TransitiveObjShape(const StructureKey &k) {
  return IsTransitive(k) && (k.misc == ArgKind::kNone || k.misc == ArgKind::kLoc);
}

bool PassiveSubjShape(const StructureKey &k) {
  return k.voice == Voice::kPassive && k.has_subj && !k.has_obj &&
         (k.misc == ArgKind::kNone || k.misc == ArgKind::kLoc ||
          (k.misc == ArgKind::kPp && k.misc_prep == "by"));
}

bool TransitiveNoMisc(const StructureKey &k) {
  return IsTransitive(k) && k.misc == ArgKind::kNone;
}

bool PassiveByPp(const StructureKey &k) {
  return k.voice == Voice::kPassive && k.has_subj && k.misc == ArgKind::kPp &&
         k.misc_prep == "by";
}

// Rule that lets the gap of `src` fill a placeholder with function `f` in a
// clause shaped `dst`, if any. Base correspondence is checked first.
std::optional<FillRule> Correspondence(const DeclarativeReading &dst_reading,
                                       Function f,
                                       const DeclarativeReading &src, bool extras) {
  const StructureKey dst = KeyOf(dst_reading);
  const StructureKey key = KeyOf(src);
  const Function g = src.gap;

  if (dst == key && f == g) {
    if (f != Function::kPpObject || dst_reading.misc_prep == src.gap_prep) {
      return FillRule::kBase;
    }
  }
  if (!extras) return std::nullopt;
  const bool same_particle = dst.particle == key.particle;

  if (same_particle) {
    if (f == Function::kObj && TransitiveObjShape(dst) && g == Function::kSubj &&
        PassiveSubjShape(key)) {
      return FillRule::kObjPassiveSubj;
    }
    if (f == Function::kSubj && PassiveSubjShape(dst) && g == Function::kObj &&
        TransitiveObjShape(key)) {
      return FillRule::kObjPassiveSubj;
    }
    if (f == Function::kSubj && TransitiveNoMisc(dst) &&
        g == Function::kPpObject && src.gap_prep == "by" && PassiveByPp(key)) {
      return FillRule::kSubjByPp;
    }
    if (f == Function::kPpObject && PassiveByPp(dst) &&
        dst_reading.misc_prep == "by" && g == Function::kSubj &&
        TransitiveNoMisc(key)) {
      return FillRule::kSubjByPp;
    }
    if (f == Function::kLoc && IsTransitive(dst) && dst.misc == ArgKind::kLoc &&
        g == Function::kAdverbial && src.wh == WhWord::kWhere &&
        TransitiveNoMisc(key)) {
      return FillRule::kLocWhere;
    }
  }
  if ((f == Function::kSubj || f == Function::kObj) && f == g &&
      StrippedKey(dst) == StrippedKey(key)) {
    return FillRule::kStrippedMisc;
  }
  return std::nullopt;
}

bool Prefer(Span a, int a_entry, Span b, int b_entry) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.start != b.start) return a.start < b.start;
  return a_entry < b_entry;
}

}  // namespace

std::vector<std::vector<Fill>> AlignPlaceholders(
    const Frame &frame, const std::vector<DeclarativeReading> &readings,
    bool extras) {
  const int n = static_cast<int>(frame.entries.size());
  std::vector<std::vector<Fill>> out(n);
  for (int i = 0; i < n; ++i) {
    const SlotQuestion &q = frame.entries[i].question;
    for (Slot slot : FillableSlots(q)) {
      std::optional<Function> f = SlotFunction(readings[i], slot);
      if (!f) continue;
      std::optional<Fill> best;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        std::optional<FillRule> rule =
            Correspondence(readings[i], *f, readings[j], extras);
        if (!rule) continue;
        const auto &answers = frame.entries[j].answers;
        for (int a = 0; a < static_cast<int>(answers.size()); ++a) {
          Fill cand{slot, j, a, answers[a], *rule};
          if (!best) {
            best = cand;
            continue;
          }
          bool cand_base = cand.rule == FillRule::kBase;
          bool best_base = best->rule == FillRule::kBase;
          if (cand_base != best_base) {
            if (cand_base) best = cand;
            continue;
          }
          if (Prefer(cand.span, j, best->span, best->source_entry)) best = cand;
        }
      }
      if (best) out[i].push_back(*best);
    }
  }
  return out;
}

std::string Decapitalize(Span span, const std::vector<std::string> &tokens) {
  std::string text = SpanText(span, tokens);
  const bool sentence_start =
      span.start == 0 || tokens[span.start - 1] == "." ||
      tokens[span.start - 1] == "!" || tokens[span.start - 1] == "?";
  if (!sentence_start) return text;
  const std::string &first = tokens[span.start];
  auto lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
  bool first_ok = first.size() >= 2 ? lower(first[1]) : first == "A";
  bool second_ok = span.size() < 2 || lower(tokens[span.start + 1][0]);
  if (first_ok && second_ok) {
    text[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  }
  return text;
}

std::string SurfaceQuestion::Text() const {
  std::vector<std::string> w;
  for (const auto &word : words) w.push_back(word.text);
  return CapitalizeFirst(Join(w, " ")) + "?";
}

std::string SurfaceQuestion::RevertedText() const {
  std::vector<std::string> w;
  for (size_t i = 0; i < words.size(); ++i) {
    if (!filled[i]) {
      // Also undoes agreement changes.
      w.push_back(words[i].slot == Slot::kAux && !source.aux.empty() ? source.aux
                                                                    : words[i].text);
      continue;
    }
    if (i > 0 && filled[i - 1] && words[i - 1].slot == words[i].slot) continue;
    Placeholder p = words[i].slot == Slot::kSubj  ? source.subj
                    : words[i].slot == Slot::kObj ? source.obj
                                                  : source.misc;
    w.emplace_back(PlaceholderName(p));
  }
  return CapitalizeFirst(Join(w, " ")) + "?";
}

SurfaceQuestion FillQuestionText(
    const SlotQuestion &q,
    const std::vector<std::pair<Slot, std::string>> &fillers,
    const InflectionLexicon &lexicon) {
  SurfaceQuestion out;
  out.source = q;
  for (const RenderedWord &word : RenderWords(q, lexicon)) {
    auto it = std::find_if(fillers.begin(), fillers.end(),
                           [&](const auto &f) { return f.first == word.slot; });
    if (it == fillers.end()) {
      out.words.push_back(word);
      out.filled.push_back(false);
      continue;
    }
    // Replace the placeholder run once.
    if (!out.words.empty() && out.filled.back() && out.words.back().slot == word.slot) {
      continue;
    }
    for (const auto &w : SplitWhitespace(it->second)) {
      out.words.push_back({w, word.slot});
      out.filled.push_back(true);
    }
  }
  return out;
}

SurfaceQuestion FillQuestion(const SlotQuestion &q, const std::vector<Fill> &fills,
                             const std::vector<std::string> &tokens,
                             const InflectionLexicon &lexicon) {
  std::vector<std::pair<Slot, std::string>> fillers;
  for (const Fill &f : fills) fillers.emplace_back(f.slot, Decapitalize(f.span, tokens));
  return FillQuestionText(q, fillers, lexicon);
}

namespace {

const std::set<std::string> &SingularExceptions() {
  static const std::set<std::string> words = {
      "this",    "his",      "its",      "hers",    "is",       "was",
      "has",     "does",     "us",       "bus",     "gas",      "news",
      "series",  "species",  "analysis", "basis",   "crisis",   "thesis",
      "status",  "virus",    "campus",   "census",  "bonus",    "focus",
      "chaos",   "lens",     "physics",  "economics", "politics", "mathematics",
      "ethics",  "class",    "glass",    "grass",   "mass",     "pass",
      "boss",    "loss",     "process",  "success", "business", "access",
      "address", "progress", "congress", "witness", "press",    "dress",
      "kiss",    "yes",      "thus",     "plus",    "minus",    "christmas",
      "texas",   "paris",    "james",    "charles", "jones",    "united states",
      "tennis",  "diabetes", "measles",  "means",   "whereas",  "alias",
      "atlas",   "canvas",   "iris",     "axis",    "emphasis", "hypothesis",
      "genesis", "diagnosis", "prognosis", "synopsis", "apparatus", "consensus",
      "corpus",  "fungus",   "octopus",  "prospectus", "radius",  "stimulus",
      "surplus", "syllabus", "terminus", "nexus",   "sinus",    "circus",
  };
  return words;
}

const std::set<std::string> &PluralWords() {
  static const std::set<std::string> words = {"they", "we",  "people",
                                              "children", "men", "women"};
  return words;
}

struct NumberPair {
  std::string_view singular;
  std::string_view plural;
};

constexpr NumberPair kNumberPairs[] = {
    {"does", "do"}, {"doesn't", "don't"}, {"is", "are"},   {"isn't", "aren't"},
    {"was", "were"}, {"wasn't", "weren't"}, {"has", "have"}, {"hasn't", "haven't"},
};

}  // namespace

bool IsPluralFiller(std::string_view subject) {
  std::vector<std::string> words = SplitWhitespace(ToLower(subject));
  if (words.empty()) return false;
  const std::string &head = words.back();
  if (PluralWords().count(head)) return true;
  return head.size() > 1 && head.back() == 's' && !SingularExceptions().count(head);
}

AgreementChoice HeuristicAgreementChooser::Choose(const AgreementQuery &query) {
  return {IsPluralFiller(query.subject) ? query.plural : query.singular, false};
}

AgreementResult FixAgreement(SurfaceQuestion &question, AgreementChooser &chooser) {
  AgreementResult result;
  std::vector<std::string> subject;
  std::optional<size_t> aux;
  for (size_t i = 0; i < question.words.size(); ++i) {
    if (question.words[i].slot == Slot::kSubj && question.filled[i]) {
      subject.push_back(question.words[i].text);
    }
    if (question.words[i].slot == Slot::kAux && !aux) aux = i;
  }
  if (subject.empty() || !aux) return result;

  const std::string current = ToLower(question.words[*aux].text);
  const NumberPair *pair = nullptr;
  for (const NumberPair &p : kNumberPairs) {
    if (p.singular == current || p.plural == current) pair = &p;
  }
  if (pair == nullptr) return result;  // modals and "did" have no number

  SurfaceQuestion masked = question;
  masked.words[*aux].text = "[MASK]";
  AgreementQuery query{masked.Text(), Join(subject, " "), std::string(pair->singular),
                       std::string(pair->plural)};
  AgreementChoice choice = chooser.Choose(query);
  result.fallback = choice.fallback;
  if (choice.form != query.singular && choice.form != query.plural) return result;
  if (choice.form != current) {
    question.words[*aux].text = choice.form;
    result.changed = true;
  }
  return result;
}

AlignedFrame BuildFrameAligned(const Frame &frame, const InflectionLexicon &lexicon,
                               const AlignOptions &options) {
  ValidateFrame(frame);
  AlignedFrame out;
  std::vector<SlotQuestion> questions;
  for (const QaEntry &e : frame.entries) questions.push_back(e.question);
  out.resolutions = ResolveFrame(questions);
  std::vector<DeclarativeReading> readings;
  for (const Resolution &r : out.resolutions) readings.push_back(r.reading);

  auto base = AlignPlaceholders(frame, readings, false);
  auto extended = AlignPlaceholders(frame, readings, true);
  for (size_t i = 0; i < questions.size(); ++i) {
    out.stats.total += static_cast<int>(FillableSlots(questions[i]).size());
    out.stats.filled_base += static_cast<int>(base[i].size());
    out.stats.filled_with_extras += static_cast<int>(extended[i].size());
  }

  HeuristicAgreementChooser heuristic;
  AgreementChooser &chooser = options.chooser ? *options.chooser : heuristic;
  const auto &fills = options.extras ? extended : base;
  for (size_t i = 0; i < questions.size(); ++i) {
    AlignedEntry entry;
    entry.prototype = Render(ToPrototype(questions[i]), lexicon);
    entry.fills = fills[i];
    entry.unfilled =
        static_cast<int>(FillableSlots(questions[i]).size() - fills[i].size());
    SurfaceQuestion surface = FillQuestion(questions[i], fills[i], frame.tokens, lexicon);
    AgreementResult agreement = FixAgreement(surface, chooser);
    entry.agreement_fixed = agreement.changed;
    entry.agreement_fallback = agreement.fallback;
    entry.contextualized = surface.Text();
    entry.reverted = surface.RevertedText();
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string Seq2SeqInput(const std::vector<std::string> &tokens,
                         const Predicate &predicate,
                         const std::string &tokenized_prototype) {
  std::vector<std::string> words;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (static_cast<int>(i) == predicate.index) {
      words.push_back("PREDICATE-START");
      words.push_back(tokens[i]);
      words.push_back("PREDICATE-END");
    } else {
      words.push_back(tokens[i]);
    }
  }
  words.push_back("</s>");
  words.push_back(predicate.lemma);
  words.push_back("[SEP]");
  words.push_back(tokenized_prototype);
  return Join(words, " ");
}

Seq2SeqExample BuildSeq2SeqExample(const Frame &frame, size_t entry,
                                   const std::string &contextualized,
                                   const InflectionLexicon &lexicon) {
  const SlotQuestion prototype = ToPrototype(frame.entries.at(entry).question);
  return {Seq2SeqInput(frame.tokens, frame.predicate,
                       RenderTokenized(prototype, lexicon)),
          contextualized};
}

}  // namespace qaframe
