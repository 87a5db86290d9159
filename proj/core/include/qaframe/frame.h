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

#ifndef QAFRAME_FRAME_H_
#define QAFRAME_FRAME_H_

#include <string>
#include <string_view>
#include <vector>

#include "qaframe/qgrammar.h"

namespace qaframe {

// Token interval [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool operator==(const Span &) const = default;
};

bool SpanWithin(Span span, size_t num_tokens);
std::string SpanText(Span span, const std::vector<std::string> &tokens);

struct Predicate {
  int index = 0;
  std::string lemma;
  std::string sense;  // may be empty
};

struct QaEntry {
  SlotQuestion question;
  std::vector<Span> answers;
};

// One predicate instance with its question-answer annotations.
struct Frame {
  std::string sentence_id;
  std::vector<std::string> tokens;
  Predicate predicate;
  std::vector<QaEntry> entries;
};

// Throws kFormat if the predicate or an answer span is out of bounds or the
// frame has no entries.
void ValidateFrame(const Frame &frame);

// PropBank role labels accepted by the toolkit: A0-A5 and the adjuncts
// AM-LOC, AM-TMP, AM-MNR, AM-CAU, AM-EXT, AM-GOL.
bool IsRoleLabel(std::string_view role);
bool IsAdjunctRole(std::string_view role);
// Accepts ARG0 / ARGM-LOC spellings; throws kVocabulary for other labels.
std::string NormalizeRole(std::string_view role);
const std::vector<std::string> &DefaultAdjunctRoles();

struct SrlArgument {
  std::string role;
  Span span;
};

}  // namespace qaframe

#endif  // QAFRAME_FRAME_H_
