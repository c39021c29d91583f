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

// Bounded search for dice realizing given tournaments.
//
// Faces are assigned die by die in nondecreasing order, so each canonical
// (sorted) dice tuple is visited at most once. Single-roll relations prune
// partial dice through best/worst completions of the unassigned faces;
// multi-roll relations are checked when a die is complete. Whatever the
// search returns has been re-verified by the exact dice engine.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "schutte/dice.hpp"
#include "schutte/tournament.hpp"

namespace schutte {

struct SearchSpace {
  int faces_per_die = 3;
  std::int64_t max_face = 9;  // faces range over 0..max_face
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class DiceSearchStatus { kFound, kExhausted, kUnknown };

std::string to_string(DiceSearchStatus s);

struct DiceSearchResult {
  DiceSearchStatus status = DiceSearchStatus::kUnknown;
  std::optional<DiceSet> dice;
  std::uint64_t nodes = 0;
};

// Dice whose single-roll tournament equals target.
DiceSearchResult search_realization(const Tournament& target,
                                    const SearchSpace& space);

// Dice whose r-roll tournament equals member r - 1 of targets for every r.
DiceSearchResult search_multiroll(const TournamentSet& targets,
                                  const SearchSpace& space);

}  // namespace schutte
