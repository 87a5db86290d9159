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

// Line protocol to an external model process (QA, masked-LM choice,
// contextualizer), and adapters onto the toolkit's model interfaces.
//
// Each request is one line {"id", "type", "payload"}; the reply is one line
// {"id", "payload"} or {"id", "error"}. Requests and replies alternate.

#ifndef QAFRAME_BACKEND_H_
#define QAFRAME_BACKEND_H_

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qaframe/framealign.h"
#include "qaframe/pipeline.h"
#include "qaframe/selection.h"

namespace qaframe {

inline constexpr std::chrono::milliseconds kDefaultBackendTimeout{30000};

class BackendConnection {
 public:
  // Starts `argv` with its stdin/stdout connected to the protocol.
  static std::unique_ptr<BackendConnection> Spawn(
      const std::vector<std::string> &argv,
      std::chrono::milliseconds timeout = kDefaultBackendTimeout);
  // Runs `command` through /bin/sh.
  static std::unique_ptr<BackendConnection> SpawnShell(
      const std::string &command,
      std::chrono::milliseconds timeout = kDefaultBackendTimeout);

  ~BackendConnection();
  BackendConnection(const BackendConnection &) = delete;
  BackendConnection &operator=(const BackendConnection &) = delete;

  // Sends one request and returns the reply payload. Throws kBackend on
  // timeout, a malformed or mismatched reply, an error envelope, or a dead
  // process.
  nlohmann::json Call(std::string_view type, const nlohmann::json &payload);

  // Writes a raw line and returns the raw reply line; for protocol tests.
  std::string RoundTrip(const std::string &line);

  // True once an exchange failed in a way that desynchronized the stream.
  bool broken() const { return broken_; }

 private:
  BackendConnection(pid_t pid, int to_child, int from_child,
                    std::chrono::milliseconds timeout);

  void WriteLine(const std::string &line);
  std::string ReadLine();

  pid_t pid_;
  int to_child_;
  int from_child_;
  std::chrono::milliseconds timeout_;
  int64_t next_id_ = 1;
  bool broken_ = false;  // out of sync after a failed exchange
  std::string buffer_;
};

// Payloads:
//   qa             {"question", "passage", "gold"} -> {"answer": str | null}
//   mlm_choice     {"text", "options": [str]}      -> {"choice": str}
//   contextualize  {"input"}                       -> {"question": str}
class BackendQaOracle : public QaOracle {
 public:
  explicit BackendQaOracle(std::shared_ptr<BackendConnection> conn)
      : conn_(std::move(conn)) {}
  std::optional<std::string> Answer(const QaQuery &query) override;

 private:
  std::shared_ptr<BackendConnection> conn_;
};

// Falls back to the plural heuristic (flagged) when the backend fails.
class BackendAgreementChooser : public AgreementChooser {
 public:
  explicit BackendAgreementChooser(std::shared_ptr<BackendConnection> conn)
      : conn_(std::move(conn)) {}
  AgreementChoice Choose(const AgreementQuery &query) override;

 private:
  std::shared_ptr<BackendConnection> conn_;
  HeuristicAgreementChooser heuristic_;
};

class BackendContextualizer : public ContextualizerBackend {
 public:
  explicit BackendContextualizer(std::shared_ptr<BackendConnection> conn)
      : conn_(std::move(conn)) {}
  std::string Contextualize(const std::string &input) override;

 private:
  std::shared_ptr<BackendConnection> conn_;
};

}  // namespace qaframe

#endif  // QAFRAME_BACKEND_H_
