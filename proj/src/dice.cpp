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

#include "schutte/dice.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace schutte {

Die::Die(std::string label_in, std::vector<std::int64_t> faces_in)
    : label(std::move(label_in)), faces(std::move(faces_in)) {
  if (faces.empty()) {
    throw DiceError(DiceErrc::kEmptyDie, "die '" + label + "' has no faces");
  }
  std::sort(faces.begin(), faces.end());
}

DiceSet::DiceSet(std::string name, std::vector<Die> dice)
    : name_(std::move(name)), dice_(std::move(dice)) {
  std::set<std::string> seen;
  for (const auto& d : dice_) {
    if (!seen.insert(d.label).second) {
      throw DiceError(DiceErrc::kDuplicateLabel,
                      "duplicate die label '" + d.label + "'");
    }
  }
}

std::optional<int> DiceSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (dice_[i].label == label) return i;
  }
  return std::nullopt;
}

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

void CheckRolls(int r) {
  if (r < 1 || r > kMaxRolls) {
    throw DiceError(DiceErrc::kBadRollCount,
                    "roll count " + std::to_string(r) + " outside 1.." +
                        std::to_string(kMaxRolls));
  }
}

std::string PairName(const DiceSet& ds, int i, int j) {
  return "'" + ds[i].label + "' vs '" + ds[j].label + "'";
}

}  // namespace

SumDistribution sum_distribution(const Die& d, int r) {
  CheckRolls(r);
  std::map<std::int64_t, mpz_class> face_hist;
  for (auto f : d.faces) face_hist[f] += 1;

  SumDistribution out;
  out.r = r;
  out.counts = face_hist;
  for (int step = 1; step < r; ++step) {
    std::map<std::int64_t, mpz_class> next;
    for (const auto& [s, c] : out.counts) {
      for (const auto& [f, fc] : face_hist) next[s + f] += c * fc;
    }
    out.counts = std::move(next);
  }
  mpz_ui_pow_ui(out.total.get_mpz_t(), d.faces.size(),
                static_cast<unsigned long>(r));
  return out;
}

WinOdds win_odds(const SumDistribution& a, const SumDistribution& b) {
  // Sweep a's sums in ascending order while accumulating b's mass strictly
  // below the current sum.
  mpz_class win = 0;
  mpz_class tie = 0;
  mpz_class below = 0;
  auto bit = b.counts.begin();
  for (const auto& [s, ca] : a.counts) {
    while (bit != b.counts.end() && bit->first < s) {
      below += bit->second;
      ++bit;
    }
    win += ca * below;
    if (bit != b.counts.end() && bit->first == s) tie += ca * bit->second;
  }
  const mpz_class total = a.total * b.total;
  WinOdds o;
  o.win = mpq_class(win, total);
  o.tie = mpq_class(tie, total);
  o.loss = mpq_class(total - win - tie, total);
  o.win.canonicalize();
  o.tie.canonicalize();
  o.loss.canonicalize();
  return o;
}

WinOdds win_odds(const Die& a, const Die& b, int r) {
  return win_odds(sum_distribution(a, r), sum_distribution(b, r));
}

OddsMatrix odds_matrix(const DiceSet& ds, int r) {
  CheckRolls(r);
  std::vector<SumDistribution> dist;
  dist.reserve(ds.size());
  for (const auto& d : ds.dice()) dist.push_back(sum_distribution(d, r));
  OddsMatrix m;
  m.r = r;
  m.odds.assign(ds.size(), std::vector<WinOdds>(ds.size(), WinOdds{0, 1, 0}));
  for (int i = 0; i < ds.size(); ++i) {
    for (int j = i + 1; j < ds.size(); ++j) {
      m.odds[i][j] = win_odds(dist[i], dist[j]);
      m.odds[j][i] = m.odds[i][j].reversed();
    }
  }
  return m;
}

Tournament tournament_at(const DiceSet& ds, int r, const mpq_class& margin) {
  const OddsMatrix m = odds_matrix(ds, r);
  const mpq_class gap = 2 * margin;
  // Classify every pair before building so errors name the first bad pair.
  for (int i = 0; i < ds.size(); ++i) {
    for (int j = i + 1; j < ds.size(); ++j) {
      const WinOdds& o = m.odds[i][j];
      if (o.win == o.loss) {
        throw DiceError(DiceErrc::kTiedPair,
                        "TiedPair: " + PairName(ds, i, j) + " at r=" +
                            std::to_string(r) + " (win = loss = " +
                            to_string(o.win) + ")",
                        i, j, r);
      }
      const mpq_class diff = o.win - o.loss;
      if (abs(diff) <= gap) {
        throw DiceError(DiceErrc::kMarginViolation,
                        "MarginViolation: " + PairName(ds, i, j) + " at r=" +
                            std::to_string(r) + " (win " + to_string(o.win) +
                            ", loss " + to_string(o.loss) + ", margin " +
                            to_string(margin) + ")",
                        i, j, r);
      }
    }
  }
  return Tournament::from_relation(
      ds.size(), [&](int i, int j) { return m.odds[i][j].win > m.odds[i][j].loss; });
}

TournamentSet realized_set(const DiceSet& ds, int m, const mpq_class& margin) {
  CheckRolls(m);
  std::vector<Tournament> members;
  members.reserve(m);
  for (int r = 1; r <= m; ++r) members.push_back(tournament_at(ds, r, margin));
  return TournamentSet(std::move(members));
}

WeakestEdge weakest_edge(const DiceSet& ds, int m, const mpq_class& margin) {
  CheckRolls(m);
  std::optional<WeakestEdge> best;
  for (int r = 1; r <= m; ++r) {
    const Tournament t = tournament_at(ds, r, margin);
    const OddsMatrix om = odds_matrix(ds, r);
    for (int i = 0; i < ds.size(); ++i) {
      for (int j = 0; j < ds.size(); ++j) {
        if (!t.beats(i, j)) continue;
        if (!best || om.odds[i][j].win < best->probability) {
          best = WeakestEdge{r, i, j, om.odds[i][j].win};
        }
      }
    }
  }
  if (!best) {
    throw DiceError(DiceErrc::kTooFewDice, "a single die has no edges");
  }
  return *best;
}

Advice advise(const DiceSet& ds, const std::vector<std::string>& opponents,
              int m) {
  CheckRolls(m);
  std::vector<int> opp;
  for (const auto& label : opponents) {
    auto idx = ds.index_of(label);
    if (!idx) {
      throw DiceError(DiceErrc::kUnknownLabel,
                      "UnknownLabel: no die '" + label + "' in set '" +
                          ds.name() + "'");
    }
    if (std::find(opp.begin(), opp.end(), *idx) != opp.end()) {
      throw DiceError(DiceErrc::kBadOpponents,
                      "opponent die '" + label + "' chosen twice");
    }
    opp.push_back(*idx);
  }
  if (static_cast<int>(opp.size()) > ds.size() - 1) {
    throw DiceError(DiceErrc::kBadOpponents,
                    "opponents must leave at least one die to choose");
  }
  const mpq_class half(1, 2);
  std::vector<OddsMatrix> matrices;
  for (int r = 1; r <= m; ++r) {
    OddsMatrix om = odds_matrix(ds, r);
    for (int d = 0; d < ds.size(); ++d) {
      if (std::find(opp.begin(), opp.end(), d) != opp.end()) continue;
      bool beats_all = true;
      for (int o : opp) beats_all = beats_all && om.odds[d][o].win > half;
      if (!beats_all) continue;
      Advice a;
      a.label = ds[d].label;
      a.die = d;
      a.rolls = r;
      for (int o : opp) a.odds.push_back(om.odds[d][o]);
      return a;
    }
    matrices.push_back(std::move(om));
  }
  throw NoDominatingChoice("NoDominatingChoice: no die beats every opponent "
                           "within " + std::to_string(m) + " roll count(s)",
                           std::move(matrices));
}

Tally simulate(const Die& a, const Die& b, int r, std::uint64_t trials,
               std::uint64_t seed) {
  CheckRolls(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_a(0, a.faces.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_b(0, b.faces.size() - 1);
  Tally t;
  for (std::uint64_t n = 0; n < trials; ++n) {
    std::int64_t sa = 0;
    std::int64_t sb = 0;
    for (int k = 0; k < r; ++k) sa += a.faces[pick_a(rng)];
    for (int k = 0; k < r; ++k) sb += b.faces[pick_b(rng)];
    if (sa > sb) {
      ++t.wins;
    } else if (sa == sb) {
      ++t.ties;
    } else {
      ++t.losses;
    }
  }
  return t;
}

}  // namespace schutte
