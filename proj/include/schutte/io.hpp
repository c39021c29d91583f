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

// JSON file formats and DOT export.
//
// Tournament sets:  {"n": 3, "tournaments": [{"edges": [[0,1],[1,2],[2,0]]}]}
// Dice sets:        {"name": "x", "dice": [{"label": "A", "faces": [1,2,3]}]}
//
// Writers are canonical (sorted edges, sorted faces, fixed layout), so
// write(read(write(x))) == write(x) byte for byte.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "schutte/dice.hpp"
#include "schutte/tournament.hpp"

namespace schutte::io {

using json = nlohmann::json;

// Malformed JSON or a document that does not match the schema.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const TournamentSet& tau);
TournamentSet tournament_set_from_json(const json& doc);
std::string write_tournament_set(const TournamentSet& tau);
TournamentSet read_tournament_set(std::string_view text);

json to_json(const DiceSet& ds);
DiceSet dice_set_from_json(const json& doc);
std::string write_dice_set(const DiceSet& ds);
DiceSet read_dice_set(std::string_view text);

// Whole-file helpers; throw ParseError when the file cannot be read.
std::string slurp(const std::filesystem::path& path);

// {"num": "41", "den": "81", "value": 0.506...}; the float is display only.
json to_json(const mpq_class& q);
json to_json(const WinOdds& o);
mpq_class rational_from_json(const json& j);

// One "digraph T<t>" block per member, nodes 0..n-1 then edges in sorted
// order.
std::string export_dot(const TournamentSet& tau);

}  // namespace schutte::io
