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

#include "qaframe/metrics.h"

#include <algorithm>
#include <unordered_map>

#include "qaframe/text.h"

namespace qaframe {

double TokenF1(const std::vector<std::string> &predicted,
               const std::vector<std::string> &gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  if (predicted.empty() || gold.empty()) return 0.0;
  std::unordered_map<std::string, int> counts;
  for (const auto &t : gold) ++counts[t];
  int overlap = 0;
  for (const auto &t : predicted) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  double precision = static_cast<double>(overlap) / predicted.size();
  double recall = static_cast<double>(overlap) / gold.size();
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<std::string> AnswerTokens(std::string_view text) {
  return SplitWhitespace(ToLower(text));
}

double SpanIou(Span a, Span b) {
  int inter = std::max(0, std::min(a.end, b.end) - std::max(a.start, b.start));
  int uni = std::max(0, a.size()) + std::max(0, b.size()) - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / uni;
}

}  // namespace qaframe
