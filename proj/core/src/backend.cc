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

#include "qaframe/backend.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <thread>

#include "qaframe/errors.h"

namespace qaframe {

namespace {

using Clock = std::chrono::steady_clock;

Error BackendError(const std::string &what) {
  return Error(ErrorKind::kBackend, "backend: " + what);
}

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

int RemainingMs(Clock::time_point deadline) {
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
  return left.count() > 0 ? static_cast<int>(left.count()) : 0;
}

}  // namespace

std::unique_ptr<BackendConnection> BackendConnection::Spawn(
    const std::vector<std::string> &argv, std::chrono::milliseconds timeout) {
  if (argv.empty()) throw BackendError("empty command");
  IgnoreSigpipe();
  int in_pipe[2], out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw BackendError(std::strerror(errno));
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw BackendError(std::strerror(errno));
  }
  std::vector<char *> args;
  for (const std::string &a : argv) args.push_back(const_cast<char *>(a.c_str()));
  args.push_back(nullptr);

  pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw BackendError(std::strerror(errno));
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  return std::unique_ptr<BackendConnection>(
      new BackendConnection(pid, in_pipe[1], out_pipe[0], timeout));
}

std::unique_ptr<BackendConnection> BackendConnection::SpawnShell(
    const std::string &command, std::chrono::milliseconds timeout) {
  return Spawn({"/bin/sh", "-c", "exec " + command}, timeout);
}

BackendConnection::BackendConnection(pid_t pid, int to_child, int from_child,
                                     std::chrono::milliseconds timeout)
    : pid_(pid), to_child_(to_child), from_child_(from_child), timeout_(timeout) {}

BackendConnection::~BackendConnection() {
  ::close(to_child_);
  ::close(from_child_);
  auto deadline = Clock::now() + std::chrono::seconds(2);
  int status;
  while (::waitpid(pid_, &status, WNOHANG) == 0) {
    if (Clock::now() >= deadline) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &status, 0);
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
}

void BackendConnection::WriteLine(const std::string &line) {
  std::string data = line + "\n";
  auto deadline = Clock::now() + timeout_;
  size_t done = 0;
  while (done < data.size()) {
    pollfd pfd{to_child_, POLLOUT, 0};
    int ready = ::poll(&pfd, 1, RemainingMs(deadline));
    if (ready < 0 && errno == EINTR) continue;
    if (ready == 0) throw BackendError("timed out writing request");
    ssize_t n = ::write(to_child_, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      throw BackendError(std::string("write failed: ") + std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
}

std::string BackendConnection::ReadLine() {
  auto deadline = Clock::now() + timeout_;
  while (true) {
    size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    pollfd pfd{from_child_, POLLIN, 0};
    int ready = ::poll(&pfd, 1, RemainingMs(deadline));
    if (ready < 0 && errno == EINTR) continue;
    if (ready == 0) {
      throw BackendError("timed out after " + std::to_string(timeout_.count()) + " ms");
    }
    char chunk[4096];
    ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      throw BackendError(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) throw BackendError("process closed its output");
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

std::string BackendConnection::RoundTrip(const std::string &line) {
  if (broken_) throw BackendError("connection unusable after an earlier failure");
  try {
    WriteLine(line);
    return ReadLine();
  } catch (const Error &) {
    broken_ = true;
    throw;
  }
}

nlohmann::json BackendConnection::Call(std::string_view type,
                                       const nlohmann::json &payload) {
  const int64_t id = next_id_++;
  nlohmann::json request = {{"id", id}, {"type", type}, {"payload", payload}};
  std::string line = RoundTrip(request.dump());
  nlohmann::json reply = nlohmann::json::parse(line, nullptr, false);
  if (reply.is_discarded() || !reply.is_object()) {
    broken_ = true;
    throw BackendError("malformed reply: " + line.substr(0, 200));
  }
  if (!reply.contains("id") || reply["id"] != id) {
    broken_ = true;
    throw BackendError("reply id " + (reply.contains("id") ? reply["id"].dump() : "<none>") +
                       " does not match request id " + std::to_string(id));
  }
  if (reply.contains("error")) {
    const auto &err = reply["error"];
    throw BackendError("error reply: " + (err.is_string() ? err.get<std::string>() : err.dump()));
  }
  if (!reply.contains("payload") || !reply["payload"].is_object()) {
    throw BackendError("reply without payload object");
  }
  return reply["payload"];
}

std::optional<std::string> BackendQaOracle::Answer(const QaQuery &query) {
  nlohmann::json reply = conn_->Call(
      "qa", {{"question", query.question}, {"passage", query.passage}, {"gold", query.gold}});
  if (!reply.contains("answer")) throw BackendError("qa reply without \"answer\"");
  const auto &answer = reply["answer"];
  if (answer.is_null()) return std::nullopt;
  if (!answer.is_string()) throw BackendError("qa answer is not a string");
  return answer.get<std::string>();
}

AgreementChoice BackendAgreementChooser::Choose(const AgreementQuery &query) {
  try {
    nlohmann::json reply = conn_->Call(
        "mlm_choice", {{"text", query.masked_text}, {"options", {query.plural, query.singular}}});
    if (reply.contains("choice") && reply["choice"].is_string()) {
      std::string choice = reply["choice"].get<std::string>();
      if (choice == query.plural || choice == query.singular) return {choice, false};
    }
  } catch (const Error &) {
  }
  AgreementChoice fallback = heuristic_.Choose(query);
  fallback.fallback = true;
  return fallback;
}

std::string BackendContextualizer::Contextualize(const std::string &input) {
  nlohmann::json reply = conn_->Call("contextualize", {{"input", input}});
  if (!reply.contains("question") || !reply["question"].is_string()) {
    throw BackendError("contextualize reply without \"question\" string");
  }
  return reply["question"].get<std::string>();
}

}  // namespace qaframe
