// Copyright 2026 The schutte Authors
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

// JSON-over-HTTP API for the dice game.
//
//   GET  /api/dice-sets                       catalog
//   GET  /api/dice-sets/{name}                dice set document
//   GET  /api/dice-sets/{name}/tournaments?m=M
//   POST /api/advise    {"set", "opponents": [...], "m"}
//   POST /api/simulate  {"set", "a", "b", "r", "trials", "seed"}
//
// Errors come back as {"error": code, "message": text} with 404 for unknown
// sets or labels, 422 for invalid bodies and 409 when no die beats every
// opponent (the body then also carries the odds matrices).
//
// DiceService::handle is pure over the loaded catalog, so it can be tested
// without sockets; HttpServer only adapts it to cpp-httplib.
#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "schutte/dice.hpp"
#include "schutte/io.hpp"

namespace httplib {
class Server;
}

namespace schutte::service {

using io::json;

inline constexpr const char* kFixtureEnv = "SCHUTTE_FIXTURES";
inline constexpr std::uint64_t kMaxTrials = 10'000'000;

struct Response {
  int status = 200;
  json body;
};

class DiceService {
 public:
  explicit DiceService(std::vector<DiceSet> catalog);

  // Loads every *.json under dir/dice (or dir itself if it has no dice/
  // subdirectory), sorted by set name.
  static DiceService from_directory(const std::filesystem::path& dir);

  // $SCHUTTE_FIXTURES when set, otherwise `fallback`.
  static std::filesystem::path fixture_dir(const std::filesystem::path& fallback);

  // target is the request path, optionally with a query string.
  Response handle(const std::string& method, const std::string& target,
                  const std::string& body) const;

  const std::vector<DiceSet>& catalog() const { return catalog_; }

 private:
  const DiceSet* find(const std::string& name) const;
  Response catalog_response() const;
  Response tournaments(const DiceSet& ds, const std::string& query) const;
  Response advise(const json& req) const;
  Response simulate(const json& req) const;

  std::vector<DiceSet> catalog_;
};

class HttpServer {
 public:
  explicit HttpServer(const DiceService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();

 private:
  const DiceService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace schutte::service
