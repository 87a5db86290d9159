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

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 data
// error, 3 backend error.

#ifndef QAFRAME_TOOLS_CLI_CLI_H_
#define QAFRAME_TOOLS_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qaframe::cli {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kBackendFailure = 3 };

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qaframe::cli

#endif  // QAFRAME_TOOLS_CLI_CLI_H_
