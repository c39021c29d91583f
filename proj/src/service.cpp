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

#include "schutte/service.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "httplib.h"

namespace schutte::service {

namespace {

Response Error(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", code}, {"message", message}}};
}

// Thrown inside request handlers and turned into an error response.
struct HttpFailure {
  Response response;
};

[[noreturn]] void Fail(int status, const std::string& code, const std::string& message) {
  throw HttpFailure{Error(status, code, message)};
}

std::vector<std::string> Segments(const std::string& path) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < path.size()) {
    std::size_t next = path.find('/', pos);
    if (next == std::string::npos) next = path.size();
    if (next > pos) out.push_back(path.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::optional<std::string> QueryParam(const std::string& query, const std::string& key) {
  std::size_t pos = 0;
  while (pos <= query.size()) {
    std::size_t next = query.find('&', pos);
    if (next == std::string::npos) next = query.size();
    const std::string part = query.substr(pos, next - pos);
    const auto eq = part.find('=');
    if (part.substr(0, eq) == key) {
      return eq == std::string::npos ? std::string() : part.substr(eq + 1);
    }
    pos = next + 1;
  }
  return std::nullopt;
}

std::string RequireString(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || !it->is_string()) {
    Fail(422, "InvalidBody", std::string("field \"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

std::int64_t IntField(const json& req, const char* key, std::int64_t lo, std::int64_t hi,
                      std::optional<std::int64_t> fallback) {
  auto it = req.find(key);
  if (it == req.end()) {
    if (fallback) return *fallback;
    Fail(422, "InvalidBody", std::string("missing field \"") + key + "\"");
  }
  if (!it->is_number_integer()) {
    Fail(422, "InvalidBody", std::string("field \"") + key + "\" must be an integer");
  }
  const auto v = it->get<std::int64_t>();
  if (v < lo || v > hi) {
    Fail(422, "InvalidBody", std::string("field \"") + key + "\" must lie in " +
                                 std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

int LabelIndex(const DiceSet& ds, const std::string& label) {
  auto idx = ds.index_of(label);
  if (!idx) Fail(404, "UnknownLabel", "no die '" + label + "' in set '" + ds.name() + "'");
  return *idx;
}

json MatrixJson(const OddsMatrix& om) {
  json rows = json::array();
  for (const auto& row : om.odds) {
    json r = json::array();
    for (const auto& o : row) r.push_back(io::to_json(o));
    rows.push_back(std::move(r));
  }
  return {{"r", om.r}, {"odds", std::move(rows)}};
}

json Labels(const DiceSet& ds) {
  json labels = json::array();
  for (const auto& d : ds.dice()) labels.push_back(d.label);
  return labels;
}

}  // namespace

DiceService::DiceService(std::vector<DiceSet> catalog) : catalog_(std::move(catalog)) {
  std::sort(catalog_.begin(), catalog_.end(),
            [](const DiceSet& a, const DiceSet& b) { return a.name() < b.name(); });
}

DiceService DiceService::from_directory(const std::filesystem::path& dir) {
  std::filesystem::path root = dir;
  if (std::filesystem::is_directory(dir / "dice")) root = dir / "dice";
  if (!std::filesystem::is_directory(root)) {
    throw io::ParseError("fixture directory " + root.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<DiceSet> sets;
  for (const auto& f : files) {
    try {
      sets.push_back(io::read_dice_set(io::slurp(f)));
    } catch (const std::exception& e) {
      throw io::ParseError(f.string() + ": " + e.what());
    }
  }
  return DiceService(std::move(sets));
}

std::filesystem::path DiceService::fixture_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv(kFixtureEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return fallback;
}

const DiceSet* DiceService::find(const std::string& name) const {
  for (const auto& ds : catalog_) {
    if (ds.name() == name) return &ds;
  }
  return nullptr;
}

Response DiceService::handle(const std::string& method, const std::string& target,
                             const std::string& body) const {
  const auto qpos = target.find('?');
  const std::string path = target.substr(0, qpos);
  const std::string query = qpos == std::string::npos ? "" : target.substr(qpos + 1);
  const auto seg = Segments(path);
  try {
    if (seg.size() < 2 || seg[0] != "api") Fail(404, "NotFound", "no route " + path);
    if (method == "GET" && seg[1] == "dice-sets") {
      if (seg.size() == 2) return catalog_response();
      const DiceSet* ds = find(seg[2]);
      if (ds == nullptr) Fail(404, "UnknownSet", "no dice set '" + seg[2] + "'");
      if (seg.size() == 3) return {200, io::to_json(*ds)};
      if (seg.size() == 4 && seg[3] == "tournaments") return tournaments(*ds, query);
    }
    if (method == "POST" && seg.size() == 2 &&
        (seg[1] == "advise" || seg[1] == "simulate")) {
      json req;
      try {
        req = json::parse(body);
      } catch (const json::parse_error& e) {
        Fail(422, "InvalidBody", std::string("malformed JSON: ") + e.what());
      }
      if (!req.is_object()) Fail(422, "InvalidBody", "body must be a JSON object");
      return seg[1] == "advise" ? advise(req) : simulate(req);
    }
    Fail(404, "NotFound", "no route " + method + " " + path);
  } catch (const HttpFailure& f) {
    return f.response;
  }
}

Response DiceService::catalog_response() const {
  json sets = json::array();
  for (const auto& ds : catalog_) {
    sets.push_back({{"name", ds.name()}, {"dice", ds.size()}, {"labels", Labels(ds)}});
  }
  return {200, {{"dice_sets", std::move(sets)}}};
}

Response DiceService::tournaments(const DiceSet& ds, const std::string& query) const {
  int m = ds.size();
  if (auto raw = QueryParam(query, "m")) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), v);
    if (ec != std::errc{} || ptr != raw->data() + raw->size() || v < 1 || v > kMaxRolls) {
      Fail(422, "InvalidQuery", "m must be an integer in 1.." + std::to_string(kMaxRolls));
    }
    m = v;
  }
  if (ds.size() < 2) Fail(409, "TooFewDice", "a tournament needs at least two dice");
  json members = json::array();
  std::vector<Tournament> ts;
  for (int r = 1; r <= m; ++r) {
    std::optional<Tournament> t;
    try {
      t = tournament_at(ds, r);
    } catch (const DiceError& e) {
      Response resp = Error(409, e.code() == DiceErrc::kTiedPair ? "TiedPair" : "MarginViolation",
                            e.what());
      resp.body["pair"] = {ds[e.i()].label, ds[e.j()].label};
      resp.body["r"] = e.r();
      throw HttpFailure{resp};
    }
    json edges = json::array();
    for (const auto& [i, j] : t->edges()) edges.push_back({i, j});
    json entry = MatrixJson(odds_matrix(ds, r));
    entry["edges"] = std::move(edges);
    members.push_back(std::move(entry));
    ts.push_back(std::move(*t));
  }
  // Largest k with the set S_k (k = 0 always holds for a nonempty set).
  const TournamentSet tau(std::move(ts));
  int sk = 0;
  while (sk + 1 < ds.size() && is_sk(tau, sk + 1)) ++sk;
  return {200,
          {{"set", ds.name()},
           {"m", m},
           {"labels", Labels(ds)},
           {"tournaments", std::move(members)},
           {"schutte_k", sk}}};
}

Response DiceService::advise(const json& req) const {
  const std::string name = RequireString(req, "set");
  const DiceSet* ds = find(name);
  if (ds == nullptr) Fail(404, "UnknownSet", "no dice set '" + name + "'");
  auto it = req.find("opponents");
  if (it == req.end() || !it->is_array()) {
    Fail(422, "InvalidBody", "field \"opponents\" must be an array of labels");
  }
  std::vector<std::string> opponents;
  for (const auto& o : *it) {
    if (!o.is_string()) Fail(422, "InvalidBody", "opponent labels must be strings");
    opponents.push_back(o.get<std::string>());
    LabelIndex(*ds, opponents.back());
  }
  const int m = static_cast<int>(IntField(req, "m", 1, kMaxRolls, ds->size()));
  try {
    const Advice a = schutte::advise(*ds, opponents, m);
    json odds = json::array();
    for (std::size_t i = 0; i < opponents.size(); ++i) {
      json o = io::to_json(a.odds[i]);
      o["opponent"] = opponents[i];
      odds.push_back(std::move(o));
    }
    return {200, {{"die", a.label}, {"index", a.die}, {"rolls", a.rolls}, {"odds", odds}}};
  } catch (const NoDominatingChoice& e) {
    Response resp = Error(409, "NoDominatingChoice", e.what());
    resp.body["labels"] = Labels(*ds);
    resp.body["matrices"] = json::array();
    for (const auto& om : e.matrices()) resp.body["matrices"].push_back(MatrixJson(om));
    return resp;
  } catch (const DiceError& e) {
    return Error(422, "InvalidBody", e.what());
  }
}

Response DiceService::simulate(const json& req) const {
  const std::string name = RequireString(req, "set");
  const DiceSet* ds = find(name);
  if (ds == nullptr) Fail(404, "UnknownSet", "no dice set '" + name + "'");
  const std::string a = RequireString(req, "a");
  const std::string b = RequireString(req, "b");
  const int ia = LabelIndex(*ds, a);
  const int ib = LabelIndex(*ds, b);
  const int r = static_cast<int>(IntField(req, "r", 1, kMaxRolls, 1));
  const auto trials = static_cast<std::uint64_t>(
      IntField(req, "trials", 1, static_cast<std::int64_t>(kMaxTrials), std::nullopt));
  std::uint64_t seed = 0;
  if (auto s = req.find("seed"); s != req.end()) {
    if (!s->is_number_unsigned() && !(s->is_number_integer() && s->get<std::int64_t>() >= 0)) {
      Fail(422, "InvalidBody", "field \"seed\" must be a nonnegative integer");
    }
    seed = s->get<std::uint64_t>();
  }
  const Tally t = schutte::simulate((*ds)[ia], (*ds)[ib], r, trials, seed);
  return {200,
          {{"a", a},
           {"b", b},
           {"r", r},
           {"trials", trials},
           {"seed", seed},
           {"wins", t.wins},
           {"ties", t.ties},
           {"losses", t.losses},
           {"exact", io::to_json(win_odds((*ds)[ia], (*ds)[ib], r))}}};
}

HttpServer::HttpServer(const DiceService& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const Response out = service_.handle(req.method, req.target, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server_->Get(".*", route);
  server_->Post(".*", route);
  // The browser client may be served from another origin during development.
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server_->Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

}  // namespace schutte::service
