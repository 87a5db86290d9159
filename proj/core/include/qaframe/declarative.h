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

// Declarative clauses underlying QA-SRL questions, and resolution of their
// syntactic ambiguity within a frame.

#ifndef QAFRAME_DECLARATIVE_H_
#define QAFRAME_DECLARATIVE_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qaframe/qgrammar.h"

namespace qaframe {

// The third argument of a clause.
enum class ArgKind { kNone, kObj2, kPp, kXcomp, kLoc };

// Grammatical functions of clause positions; the gap and every placeholder
// have one.
enum class Function { kSubj, kObj, kObj2, kPpObject, kLoc, kXcomp, kAdverbial };

std::string_view ArgKindName(ArgKind kind);
std::string_view FunctionName(Function f);

struct DeclarativeReading {
  Voice voice = Voice::kActive;
  bool has_subj = false;  // SUBJ position exists (filled or gapped)
  bool has_obj = false;   // OBJ position exists (filled or gapped)
  std::string particle;   // stranded PREP read as a verb particle
  ArgKind misc = ArgKind::kNone;
  std::string misc_prep;  // preposition when misc == kPp

  Function gap = Function::kSubj;
  std::string gap_prep;  // for kPpObject
  WhWord wh = WhWord::kWhat;

  // Clause function of the question's SUBJ / OBJ / MISC placeholders, when
  // the slot holds one.
  std::optional<Function> subj_slot;
  std::optional<Function> obj_slot;
  std::optional<Function> misc_slot;

  bool operator==(const DeclarativeReading &) const = default;
};

// Canonical clause shape with tense, modality, negation and animacy removed.
struct StructureKey {
  Voice voice = Voice::kActive;
  bool has_subj = false;
  bool has_obj = false;
  std::string particle;
  ArgKind misc = ArgKind::kNone;
  std::string misc_prep;

  auto operator<=>(const StructureKey &) const = default;
  bool operator==(const StructureKey &) const = default;
};

std::string KeyString(const StructureKey &key);
std::string DescribeReading(const DeclarativeReading &r);

StructureKey KeyOf(const DeclarativeReading &r);

// Key with the PREP/MISC argument removed.
StructureKey StrippedKey(const StructureKey &key);

// All clause readings of `q`; never empty.
std::vector<DeclarativeReading> EnumerateReadings(const SlotQuestion &q);

enum class ResolutionRule {
  kUnambiguous,
  kMajority,
  kParticleHeuristic,
  kLocativeHeuristic,
  kDitransitiveHeuristic,
  kLexicographic,  // flagged: nothing else separated the readings
};

std::string_view ResolutionRuleName(ResolutionRule rule);

struct Resolution {
  DeclarativeReading reading;
  ResolutionRule rule = ResolutionRule::kUnambiguous;
  int support = 0;  // sibling questions sharing the chosen key
  bool flagged() const { return rule == ResolutionRule::kLexicographic; }
};

// Picks the reading whose structure key is shared by the most sibling
// questions (each sibling counted once, through any of its readings). Ties
// fall back to the particle, locative and ditransitive heuristics in that
// order, then to the smallest key.
Resolution ResolveReading(
    const SlotQuestion &q,
    const std::vector<std::vector<DeclarativeReading>> &sibling_readings);

// Resolves every question of a frame against all the others.
std::vector<Resolution> ResolveFrame(const std::vector<SlotQuestion> &questions);

}  // namespace qaframe

#endif  // QAFRAME_DECLARATIVE_H_
