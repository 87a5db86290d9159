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

#ifndef QAFRAME_ERRORS_H_
#define QAFRAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qaframe {

// Error categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  kFormat,      // malformed record or missing mandatory field
  kVocabulary,  // token outside a closed vocabulary
  kGrammar,     // slot combination outside the question grammar
  kParse,       // surface text does not fit the slot grammar
  kAlignment,   // inconsistent frame / SRL input
  kBackend,     // backend protocol or process failure
  kIo,          // file system problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qaframe

#endif  // QAFRAME_ERRORS_H_
