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

#include "schutte/io.hpp"

#include <fstream>
#include <sstream>

namespace schutte::io {

namespace {

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  }
  return *it;
}

int AsInt(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const TournamentSet& tau) {
  json doc;
  doc["n"] = tau.order();
  doc["tournaments"] = json::array();
  for (const auto& t : tau.members()) {
    json edges = json::array();
    for (const auto& [i, j] : t.edges()) edges.push_back({i, j});
    doc["tournaments"].push_back({{"edges", std::move(edges)}});
  }
  return doc;
}

TournamentSet tournament_set_from_json(const json& doc) {
  const int n = AsInt(Field(doc, "n", "tournament set"), "field \"n\"");
  const json& list = Field(doc, "tournaments", "tournament set");
  if (!list.is_array() || list.empty()) {
    throw ParseError("field \"tournaments\": expected a nonempty array");
  }
  std::vector<Tournament> members;
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string where = "tournaments[" + std::to_string(t) + "]";
    const json& edges = Field(list[t], "edges", where.c_str());
    if (!edges.is_array()) throw ParseError(where + ".edges: expected an array");
    std::vector<Tournament::Edge> beats;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(where + ".edges: each edge must be a pair [i, j]");
      }
      beats.emplace_back(AsInt(e[0], where + ".edges"), AsInt(e[1], where + ".edges"));
    }
    try {
      members.push_back(Tournament::from_edges(n, beats));
    } catch (const TournamentError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    return TournamentSet(std::move(members));
  } catch (const TournamentError& e) {
    throw ParseError(e.what());
  }
}

std::string write_tournament_set(const TournamentSet& tau) {
  std::ostringstream os;
  os << "{\n  \"n\": " << tau.order() << ",\n  \"tournaments\": [\n";
  for (int t = 0; t < tau.size(); ++t) {
    json edges = json::array();
    for (const auto& [i, j] : tau[t].edges()) edges.push_back({i, j});
    os << "    {\"edges\": " << edges.dump() << "}"
       << (t + 1 < tau.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

TournamentSet read_tournament_set(std::string_view text) {
  return tournament_set_from_json(Parse(text));
}

json to_json(const DiceSet& ds) {
  json doc;
  doc["name"] = ds.name();
  doc["dice"] = json::array();
  for (const auto& d : ds.dice()) {
    doc["dice"].push_back({{"label", d.label}, {"faces", d.faces}});
  }
  return doc;
}

DiceSet dice_set_from_json(const json& doc) {
  const json& name = Field(doc, "name", "dice set");
  if (!name.is_string()) throw ParseError("field \"name\": expected a string");
  const json& list = Field(doc, "dice", "dice set");
  if (!list.is_array()) throw ParseError("field \"dice\": expected an array");
  std::vector<Die> dice;
  for (std::size_t d = 0; d < list.size(); ++d) {
    const std::string where = "dice[" + std::to_string(d) + "]";
    const json& label = Field(list[d], "label", where.c_str());
    const json& faces = Field(list[d], "faces", where.c_str());
    if (!label.is_string()) throw ParseError(where + ".label: expected a string");
    if (!faces.is_array()) throw ParseError(where + ".faces: expected an array");
    std::vector<std::int64_t> values;
    for (const auto& f : faces) {
      if (!f.is_number_integer()) throw ParseError(where + ".faces: expected integers");
      values.push_back(f.get<std::int64_t>());
    }
    try {
      dice.emplace_back(label.get<std::string>(), std::move(values));
    } catch (const DiceError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    return DiceSet(name.get<std::string>(), std::move(dice));
  } catch (const DiceError& e) {
    throw ParseError(e.what());
  }
}

std::string write_dice_set(const DiceSet& ds) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(ds.name()).dump() << ",\n  \"dice\": [\n";
  for (int d = 0; d < ds.size(); ++d) {
    os << "    {\"label\": " << json(ds[d].label).dump()
       << ", \"faces\": " << json(ds[d].faces).dump() << "}"
       << (d + 1 < ds.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

DiceSet read_dice_set(std::string_view text) { return dice_set_from_json(Parse(text)); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const mpq_class& q) {
  return {{"num", q.get_num().get_str()},
          {"den", q.get_den().get_str()},
          {"value", q.get_d()}};
}

json to_json(const WinOdds& o) {
  return {{"win", to_json(o.win)}, {"tie", to_json(o.tie)}, {"loss", to_json(o.loss)}};
}

mpq_class rational_from_json(const json& j) {
  try {
    mpq_class q(mpz_class(j.at("num").get<std::string>()),
                mpz_class(j.at("den").get<std::string>()));
    if (q.get_den() == 0) throw ParseError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

std::string export_dot(const TournamentSet& tau) {
  std::ostringstream os;
  for (int t = 0; t < tau.size(); ++t) {
    os << "digraph T" << t + 1 << " {\n";
    for (int v = 0; v < tau.order(); ++v) os << "  " << v << ";\n";
    for (const auto& [i, j] : tau[t].edges()) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace schutte::io
