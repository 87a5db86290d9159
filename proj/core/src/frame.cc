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

#include "qaframe/frame.h"

#include <algorithm>
#include <cctype>

#include "qaframe/errors.h"
#include "qaframe/text.h"

namespace qaframe {

namespace {

const std::vector<std::string> kCoreRoles = {"A0", "A1", "A2", "A3", "A4", "A5"};

}  // namespace

bool SpanWithin(Span span, size_t num_tokens) {
  return span.start >= 0 && span.start < span.end &&
         static_cast<size_t>(span.end) <= num_tokens;
}

std::string SpanText(Span span, const std::vector<std::string> &tokens) {
  std::vector<std::string> words(tokens.begin() + span.start,
                                 tokens.begin() + span.end);
  return Join(words, " ");
}

void ValidateFrame(const Frame &frame) {
  const size_t n = frame.tokens.size();
  if (frame.predicate.index < 0 || static_cast<size_t>(frame.predicate.index) >= n) {
    throw Error(ErrorKind::kFormat, "predicate index " +
                                        std::to_string(frame.predicate.index) +
                                        " outside sentence");
  }
  if (frame.entries.empty()) {
    throw Error(ErrorKind::kFormat, "frame has no question entries");
  }
  for (const QaEntry &entry : frame.entries) {
    for (Span s : entry.answers) {
      if (!SpanWithin(s, n)) {
        throw Error(ErrorKind::kFormat,
                    "answer span [" + std::to_string(s.start) + "," +
                        std::to_string(s.end) + ") outside sentence");
      }
    }
  }
}

const std::vector<std::string> &DefaultAdjunctRoles() {
  static const std::vector<std::string> roles = {"AM-LOC", "AM-TMP", "AM-MNR",
                                                 "AM-CAU", "AM-EXT", "AM-GOL"};
  return roles;
}

bool IsAdjunctRole(std::string_view role) {
  const auto &adj = DefaultAdjunctRoles();
  return std::find(adj.begin(), adj.end(), role) != adj.end();
}

bool IsRoleLabel(std::string_view role) {
  return IsAdjunctRole(role) ||
         std::find(kCoreRoles.begin(), kCoreRoles.end(), role) != kCoreRoles.end();
}

std::string NormalizeRole(std::string_view role) {
  std::string r(role);
  for (char &c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (r.rfind("ARGM-", 0) == 0) r = "AM-" + r.substr(5);
  else if (r.rfind("ARG", 0) == 0) r = "A" + r.substr(3);
  if (!IsRoleLabel(r)) {
    throw Error(ErrorKind::kVocabulary, "unknown role label '" + std::string(role) + "'");
  }
  return r;
}

}  // namespace qaframe
