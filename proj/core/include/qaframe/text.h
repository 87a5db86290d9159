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

#ifndef QAFRAME_TEXT_H_
#define QAFRAME_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace qaframe {

std::string ToLower(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string> &words, std::string_view sep);
std::string CollapseSpaces(std::string_view s);
std::string CapitalizeFirst(std::string_view s);

}  // namespace qaframe

#endif  // QAFRAME_TEXT_H_
