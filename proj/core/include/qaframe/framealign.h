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

// Frame-aligned QA-SRL: fills the placeholders of each question with answers
// of sibling questions that occupy the same syntactic position.

#ifndef QAFRAME_FRAMEALIGN_H_
#define QAFRAME_FRAMEALIGN_H_

#include <string>
#include <string_view>
#include <vector>

#include "qaframe/declarative.h"
#include "qaframe/frame.h"
#include "qaframe/inflection.h"
#include "qaframe/qgrammar.h"

namespace qaframe {

// How a placeholder got its filler.
enum class FillRule {
  kBase,            // same structure, same function
  kObjPassiveSubj,  // transitive obj <-> passive subj
  kSubjByPp,        // transitive subj <-> passive by-PP object
  kLocWhere,        // transitive loc <- where-adverbial
  kStrippedMisc,    // subj/obj match after dropping PREP/MISC
};

std::string_view FillRuleName(FillRule rule);

struct Fill {
  Slot slot = Slot::kSubj;  // kSubj, kObj or kMisc
  int source_entry = 0;
  int answer_index = 0;
  Span span;
  FillRule rule = FillRule::kBase;
};

struct PlaceholderStats {
  int total = 0;
  int filled_base = 0;
  int filled_with_extras = 0;

  PlaceholderStats &operator+=(const PlaceholderStats &o) {
    total += o.total;
    filled_base += o.filled_base;
    filled_with_extras += o.filled_with_extras;
    return *this;
  }
  bool operator==(const PlaceholderStats &) const = default;
};

// Placeholders of `q` that answers can fill: nominal SUBJ/OBJ/MISC and a
// "somewhere" MISC.
std::vector<Slot> FillableSlots(const SlotQuestion &q);

// For each entry, at most one fill per fillable placeholder. Base matches
// win over the extra correspondences; among equals the shortest answer span
// wins, then the earliest.
std::vector<std::vector<Fill>> AlignPlaceholders(
    const Frame &frame, const std::vector<DeclarativeReading> &readings,
    bool extras);

// Answer text, with sentence-initial capitalization undone when the first
// word's second character and the next word's first character are lowercase.
std::string Decapitalize(Span span, const std::vector<std::string> &tokens);

// Rendered question with per-word slot provenance.
struct SurfaceQuestion {
  SlotQuestion source;
  std::vector<RenderedWord> words;
  std::vector<bool> filled;  // parallel to words

  std::string Text() const;
  // Text with fills put back to placeholders and the original auxiliary.
  std::string RevertedText() const;
};

SurfaceQuestion FillQuestion(const SlotQuestion &q, const std::vector<Fill> &fills,
                             const std::vector<std::string> &tokens,
                             const InflectionLexicon &lexicon);

// Same, with filler text given directly (already decapitalized).
SurfaceQuestion FillQuestionText(
    const SlotQuestion &q,
    const std::vector<std::pair<Slot, std::string>> &fillers,
    const InflectionLexicon &lexicon);

struct AgreementQuery {
  std::string masked_text;  // question with the finite auxiliary as [MASK]
  std::string subject;
  std::string singular;
  std::string plural;
};

struct AgreementChoice {
  std::string form;
  bool fallback = false;  // backend unavailable, heuristic used instead
};

class AgreementChooser {
 public:
  virtual ~AgreementChooser() = default;
  virtual AgreementChoice Choose(const AgreementQuery &query) = 0;
};

// Plural iff the last word of the subject ends in "s" and is not a known
// singular, or is one of they/we/people/children/men/women.
bool IsPluralFiller(std::string_view subject);

class HeuristicAgreementChooser : public AgreementChooser {
 public:
  AgreementChoice Choose(const AgreementQuery &query) override;
};

struct AgreementResult {
  bool changed = false;
  bool fallback = false;
};

// Replaces the finite auxiliary of a question whose SUBJ was filled with the
// number form picked by `chooser`. Touches at most that one word.
AgreementResult FixAgreement(SurfaceQuestion &question, AgreementChooser &chooser);

struct AlignOptions {
  bool extras = true;
  AgreementChooser *chooser = nullptr;  // heuristic when null
};

struct AlignedEntry {
  std::string prototype;
  std::string contextualized;
  std::string reverted;  // contextualized with fills put back
  std::vector<Fill> fills;
  int unfilled = 0;
  bool agreement_fixed = false;
  bool agreement_fallback = false;
};

struct AlignedFrame {
  std::vector<AlignedEntry> entries;
  std::vector<Resolution> resolutions;
  PlaceholderStats stats;
};

AlignedFrame BuildFrameAligned(const Frame &frame, const InflectionLexicon &lexicon,
                               const AlignOptions &options = {});

struct Seq2SeqExample {
  std::string input;
  std::string target;
};

// "<tokens with PREDICATE-START/END markers> </s> <lemma> [SEP] <prototype ?>"
std::string Seq2SeqInput(const std::vector<std::string> &tokens,
                         const Predicate &predicate,
                         const std::string &tokenized_prototype);

Seq2SeqExample BuildSeq2SeqExample(const Frame &frame, size_t entry,
                                   const std::string &contextualized,
                                   const InflectionLexicon &lexicon);

}  // namespace qaframe

#endif  // QAFRAME_FRAMEALIGN_H_
