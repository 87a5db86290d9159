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

// Answer-overlap metrics.

#ifndef QAFRAME_METRICS_H_
#define QAFRAME_METRICS_H_

#include <string>
#include <string_view>
#include <vector>

#include "qaframe/frame.h"

namespace qaframe {

// Multiset token overlap F1. Two empty lists score 1, one empty list 0.
double TokenF1(const std::vector<std::string> &predicted,
               const std::vector<std::string> &gold);

// Lowercased whitespace tokens, the comparison unit for answer strings.
std::vector<std::string> AnswerTokens(std::string_view text);

// |a ∩ b| / |a ∪ b| over token indices; 0 when both are empty.
double SpanIou(Span a, Span b);

}  // namespace qaframe

#endif  // QAFRAME_METRICS_H_
