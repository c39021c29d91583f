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

// Explicit S_k set constructions: padding with extra members, the rotational
// (k+1)-set on k+1 vertices, and the block combine of two sets.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "schutte/tournament.hpp"

namespace schutte {

// How to orient edges a construction leaves free.
class FillPolicy {
 public:
  enum class Kind { kLowBeatsHigh, kSeededRandom };

  static FillPolicy low_beats_high() { return FillPolicy(Kind::kLowBeatsHigh, 0); }
  static FillPolicy seeded(std::uint64_t seed) {
    return FillPolicy(Kind::kSeededRandom, seed);
  }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  // Stateful orientation source. Each construction call starts a fresh one,
  // so a seeded policy reproduces the same output.
  class Source {
   public:
    explicit Source(const FillPolicy& p) : kind_(p.kind_), rng_(p.seed_) {}
    // Orientation for a free pair i < j; true means i beats j.
    bool lower_wins(int i, int j);

   private:
    Kind kind_;
    std::mt19937_64 rng_;
  };

 private:
  FillPolicy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Appends members until there are m_target. Throws ConstructionError
// (TargetTooSmall) when m_target is below the current size.
TournamentSet pad_set(const TournamentSet& tau, int m_target, FillPolicy fill);

// k+1 tournaments on k+1 vertices where vertex i beats every other vertex in
// member i. An S_k set.
TournamentSet rotational_set(int k, FillPolicy fill);

// Disjoint-union block construction. tau1 keeps labels 0..n1-1 and tau2 is
// shifted to n1..n1+n2-1. In the first m1 members the tau1 block beats the
// tau2 block; in the last m2 members the reverse. An S_{k1} set combined with
// an S_{k2} set is S_{k1+k2+1}.
TournamentSet combine(const TournamentSet& tau1, const TournamentSet& tau2,
                      FillPolicy fill);

}  // namespace schutte
