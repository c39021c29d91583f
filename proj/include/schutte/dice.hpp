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

// Exact multi-roll dice comparisons.
//
// A die is a multiset of integer faces, each equally likely. Rolling it r
// times and summing gives a SumDistribution with integer outcome counts
// totalling |faces|^r. Every probability that feeds a decision is an exact
// rational; doubles appear only when formatting for people.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schutte/tournament.hpp"

namespace schutte {

inline constexpr int kMaxRolls = 64;

enum class DiceErrc {
  kEmptyDie,
  kDuplicateLabel,
  kTooFewDice,
  kBadRollCount,
  kTiedPair,
  kMarginViolation,
  kUnknownLabel,
  kBadOpponents,
  kNoDominatingChoice,
};

class DiceError : public std::runtime_error {
 public:
  DiceError(DiceErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  DiceError(DiceErrc code, const std::string& what, int i, int j, int r)
      : std::runtime_error(what), code_(code), i_(i), j_(j), r_(r) {}
  DiceErrc code() const { return code_; }
  // Offending pair and roll count for kTiedPair / kMarginViolation.
  int i() const { return i_; }
  int j() const { return j_; }
  int r() const { return r_; }

 private:
  DiceErrc code_;
  int i_ = -1;
  int j_ = -1;
  int r_ = -1;
};

struct Die {
  std::string label;
  std::vector<std::int64_t> faces;  // ascending

  // Sorts faces. Throws kEmptyDie.
  Die(std::string label, std::vector<std::int64_t> faces);
  friend bool operator==(const Die&, const Die&) = default;
};

class DiceSet {
 public:
  // Throws kDuplicateLabel.
  DiceSet(std::string name, std::vector<Die> dice);

  const std::string& name() const { return name_; }
  const std::vector<Die>& dice() const { return dice_; }
  int size() const { return static_cast<int>(dice_.size()); }
  const Die& operator[](int i) const { return dice_[i]; }
  std::optional<int> index_of(const std::string& label) const;

 private:
  std::string name_;
  std::vector<Die> dice_;
};

struct SumDistribution {
  int r = 0;
  std::map<std::int64_t, mpz_class> counts;  // sum -> number of outcomes
  mpz_class total;                           // |faces|^r
};

struct WinOdds {
  mpq_class win;
  mpq_class tie;
  mpq_class loss;

  // Swaps win and loss.
  WinOdds reversed() const { return {loss, tie, win}; }
  friend bool operator==(const WinOdds& a, const WinOdds& b) {
    return a.win == b.win && a.tie == b.tie && a.loss == b.loss;
  }
};

// Throws kBadRollCount outside 1..kMaxRolls.
SumDistribution sum_distribution(const Die& d, int r);

WinOdds win_odds(const SumDistribution& a, const SumDistribution& b);
WinOdds win_odds(const Die& a, const Die& b, int r);

// Tournament on the dice at r rolls: i beats j iff i is more likely to roll
// higher, by more than 2 * margin (win - loss > 2 * margin). Without ties
// this is win > 1/2 + margin. Throws kTiedPair when win == loss and
// kMarginViolation when |win - loss| <= 2 * margin.
Tournament tournament_at(const DiceSet& ds, int r, const mpq_class& margin = 0);

// Member t (0-based) is tournament_at(ds, t + 1, margin).
TournamentSet realized_set(const DiceSet& ds, int m, const mpq_class& margin = 0);

// Pairwise odds at r rolls: odds[i][j] is die i against die j (diagonal is a
// certain tie).
struct OddsMatrix {
  int r = 0;
  std::vector<std::vector<WinOdds>> odds;
};
OddsMatrix odds_matrix(const DiceSet& ds, int r);

struct WeakestEdge {
  int r = 0;
  int winner = 0;
  int loser = 0;
  mpq_class probability;
};
// Smallest winning probability over every edge of realized_set(ds, m).
WeakestEdge weakest_edge(const DiceSet& ds, int m, const mpq_class& margin = 0);

struct Advice {
  std::string label;
  int die = 0;
  int rolls = 0;
  std::vector<WinOdds> odds;  // against each opponent, in the given order
};

class NoDominatingChoice : public DiceError {
 public:
  NoDominatingChoice(const std::string& what, std::vector<OddsMatrix> matrices)
      : DiceError(DiceErrc::kNoDominatingChoice, what),
        matrices_(std::move(matrices)) {}
  const std::vector<OddsMatrix>& matrices() const { return matrices_; }

 private:
  std::vector<OddsMatrix> matrices_;
};

// Least (rolls, die index) whose die beats every opponent with probability
// > 1/2 at that roll count, for rolls in 1..m. Throws kUnknownLabel,
// kBadOpponents or NoDominatingChoice.
Advice advise(const DiceSet& ds, const std::vector<std::string>& opponents, int m);

struct Tally {
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses = 0;
  friend bool operator==(const Tally&, const Tally&) = default;
};

// Seeded Monte Carlo roll-off of a against b with r rolls each.
Tally simulate(const Die& a, const Die& b, int r, std::uint64_t trials,
               std::uint64_t seed);

// "num/den" (den omitted when 1).
std::string to_string(const mpq_class& q);

}  // namespace schutte
