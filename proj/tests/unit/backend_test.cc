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

#include <chrono>
#include <functional>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "qaframe/backend.h"
#include "qaframe/errors.h"
#include "test_support.h"

namespace qaframe {
namespace {

using nlohmann::json;
using testing::FakeBackend;

std::shared_ptr<BackendConnection> Start(const std::string &mode,
                                         std::chrono::milliseconds timeout = kDefaultBackendTimeout) {
  return BackendConnection::SpawnShell(FakeBackend(mode), timeout);
}

ErrorKind Fails(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIo;
}

TEST_CASE("request types round trip") {
  auto conn = Start("mock");
  json choice = conn->Call("mlm_choice", {{"text", "What [MASK] air molecules bump into?"},
                                          {"options", {"do", "does"}}});
  CHECK(choice["choice"] == "do");
  json qa = conn->Call(
      "qa", {{"question", "Where did it land?"}, {"passage", "It landed in Paris ."},
             {"gold", "in Paris"}});
  CHECK(qa["answer"] == "in Paris");
  json none = conn->Call("qa", {{"question", "Where is nowhere?"}, {"passage", "x"},
                                {"gold", "x"}});
  CHECK(none["answer"].is_null());
  json ctx = conn->Call("contextualize", {{"input", "a </s> b [SEP] what bs something ?"}});
  CHECK(ctx["question"] == "What bs something?");
}

TEST_CASE("mixed traffic keeps ids in step") {
  auto conn = Start("mock");
  BackendQaOracle oracle(conn);
  BackendAgreementChooser chooser(conn);
  BackendContextualizer ctx(conn);
  for (int i = 0; i < 100; ++i) {
    CAPTURE(i);
    switch (i % 3) {
      case 0:
        CHECK(oracle.Answer({"What?", "p", "gold " + std::to_string(i)}) ==
              "gold " + std::to_string(i));
        break;
      case 1: {
        AgreementChoice c =
            chooser.Choose({"What [MASK] the plane hit?", "the plane", "does", "do"});
        CHECK(c.form == "does");
        CHECK_FALSE(c.fallback);
        break;
      }
      default:
        CHECK(ctx.Contextualize("s </s> fix [SEP] what is fixed ?") == "What is fixed?");
    }
  }
}

TEST_CASE("malformed lines get an error envelope") {
  auto conn = Start("mock");
  json reply = json::parse(conn->RoundTrip("{not json"));
  CHECK(reply["id"].is_null());
  CHECK(reply.contains("error"));
  json ok = json::parse(conn->RoundTrip(R"({"id":7,"type":"qa","payload":{"question":"q","passage":"p","gold":"g"}})"));
  CHECK(ok["id"] == 7);
  CHECK(ok["payload"]["answer"] == "g");
  json unknown = json::parse(conn->RoundTrip(R"({"id":8,"type":"dance","payload":{}})"));
  CHECK(unknown["id"] == 8);
  CHECK(unknown.contains("error"));
  CHECK(conn->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "after"}})["answer"] ==
        "after");
}

TEST_CASE("protocol failures") {
  CHECK(Fails([] { Start("mismatch")->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "g"}}); }) ==
        ErrorKind::kBackend);
  CHECK(Fails([] { Start("garbage")->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "g"}}); }) ==
        ErrorKind::kBackend);
  CHECK(Fails([] { Start("error")->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "g"}}); }) ==
        ErrorKind::kBackend);
  CHECK(Fails([] { Start("exit")->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "g"}}); }) ==
        ErrorKind::kBackend);
  CHECK(Fails([] {
          BackendConnection::Spawn({"/nonexistent/backend"})->Call("qa", json::object());
        }) == ErrorKind::kBackend);

  auto start = std::chrono::steady_clock::now();
  auto silent = Start("silent", std::chrono::milliseconds(300));
  CHECK(Fails([&] { silent->Call("qa", {{"question", "q"}, {"passage", "p"}, {"gold", "g"}}); }) ==
        ErrorKind::kBackend);
  // A connection that lost sync refuses further calls.
  CHECK(Fails([&] { silent->Call("qa", json::object()); }) == ErrorKind::kBackend);
  silent.reset();
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("adapters") {
  BackendAgreementChooser dead(Start("exit"));
  AgreementChoice c = dead.Choose({"What [MASK] air molecules bump into?", "air molecules",
                                   "does", "do"});
  CHECK(c.fallback);
  CHECK(c.form == "do");

  BackendQaOracle oracle(Start("error"));
  CHECK_THROWS_AS(oracle.Answer({"q", "p", "g"}), Error);

  BackendContextualizer ctx(Start("mock"));
  CHECK(ctx.Contextualize("x </s> y [SEP] where does something arrive ?") ==
        "Where does something arrive?");
}

}  // namespace
}  // namespace qaframe
