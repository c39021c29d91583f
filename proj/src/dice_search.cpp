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

#include "schutte/dice_search.hpp"

#include <stdexcept>
#include <vector>

namespace schutte {

std::string to_string(DiceSearchStatus s) {
  switch (s) {
    case DiceSearchStatus::kFound: return "found";
    case DiceSearchStatus::kExhausted: return "exhausted";
    case DiceSearchStatus::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

using u128 = unsigned __int128;

// Dense outcome counts of an r-roll sum; index s holds sum s (faces >= 0).
using Dense = std::vector<u128>;

Dense DenseDistribution(const std::vector<std::int64_t>& faces, int r) {
  std::int64_t max_face = 0;
  for (auto f : faces) max_face = std::max(max_face, f);
  Dense cur(1, 1);
  for (int step = 0; step < r; ++step) {
    Dense next(cur.size() + max_face, 0);
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s] == 0) continue;
      for (auto f : faces) next[s + f] += cur[s];
    }
    cur = std::move(next);
  }
  return cur;
}

// Sign of P(a wins) - P(b wins).
int Compare(const Dense& a, const Dense& b) {
  u128 win = 0;
  u128 loss = 0;
  u128 below = 0;
  u128 b_total = 0;
  for (auto c : b) b_total += c;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (s > 0 && s - 1 < b.size()) below += b[s - 1];
    if (a[s] == 0) continue;
    const u128 at = s < b.size() ? b[s] : 0;
    win += a[s] * below;
    loss += a[s] * (b_total - below - at);
  }
  if (win == loss) return 0;
  return win > loss ? 1 : -1;
}

class Searcher {
 public:
  Searcher(const TournamentSet& targets, const SearchSpace& space)
      : targets_(targets),
        space_(space),
        dice_(targets.order()),
        faces_(space.faces_per_die),
        rolls_(targets.size()),
        start_(std::chrono::steady_clock::now()) {
    if (faces_ < 1 || space.max_face < 0) {
      throw std::invalid_argument("search space needs faces_per_die >= 1 and max_face >= 0");
    }
    // Exact 128-bit counts need faces^(2r) < 2^126.
    long double bound = 1;
    for (int k = 0; k < 2 * rolls_; ++k) bound *= faces_;
    wide_ok_ = bound < 8.5e37L;
    faces_of_.assign(dice_, std::vector<std::int64_t>(faces_, 0));
    dense_.assign(dice_, std::vector<Dense>(rolls_ + 1));
    lt_.assign(dice_, std::vector<int>(space.max_face + 1, 0));
    gt_.assign(dice_, std::vector<int>(space.max_face + 1, 0));
    win_.assign(dice_, std::vector<int>(dice_, 0));
    loss_.assign(dice_, std::vector<int>(dice_, 0));
  }

  DiceSearchResult Run() {
    DiceSearchResult out;
    if (dice_ == 0) {
      out.status = DiceSearchStatus::kExhausted;
      return out;
    }
    const int rc = Place(0, 0, 0);
    out.nodes = nodes_;
    if (rc > 0) {
      out.status = DiceSearchStatus::kFound;
      out.dice = Verified();
    } else {
      out.status = rc == 0 ? DiceSearchStatus::kExhausted : DiceSearchStatus::kUnknown;
    }
    return out;
  }

 private:
  // 1 = found, 0 = subtree exhausted, -1 = budget hit.
  int Place(int die, int face, std::int64_t min_value) {
    if (die == dice_) return 1;
    for (std::int64_t v = min_value; v <= space_.max_face; ++v) {
      if (++nodes_ > space_.max_nodes) return -1;
      if (space_.time_limit && (nodes_ & 4095) == 0 &&
          std::chrono::steady_clock::now() - start_ >= *space_.time_limit) {
        return -1;
      }
      faces_of_[die][face] = v;
      for (int i = 0; i < die; ++i) {
        win_[die][i] += lt_[i][v];
        loss_[die][i] += gt_[i][v];
      }
      int rc = 0;
      if (Feasible(die, face + 1, v)) {
        if (face + 1 < faces_) {
          rc = Place(die, face + 1, v);
        } else if (CompleteDie(die)) {
          rc = Place(die + 1, 0, 0);
        }
      }
      for (int i = 0; i < die; ++i) {
        win_[die][i] -= lt_[i][v];
        loss_[die][i] -= gt_[i][v];
      }
      if (rc != 0) return rc;
    }
    return 0;
  }

  // Single-roll bound check for die `die` with `placed` faces, last one v.
  bool Feasible(int die, int placed, std::int64_t v) const {
    // Remaining faces lie in [v, max_face]; the margin win - loss is best
    // for this die at max_face and worst at v.
    const int remaining = faces_ - placed;
    const Tournament& t1 = targets_[0];
    for (int i = 0; i < die; ++i) {
      const int margin = win_[die][i] - loss_[die][i];
      if (t1.beats(die, i)) {
        if (margin + remaining * lt_[i][space_.max_face] <= 0) return false;
      } else {
        if (margin + remaining * (lt_[i][v] - gt_[i][v]) >= 0) return false;
      }
    }
    return true;
  }

  // Exact checks for a finished die against all earlier ones, then caches
  // its tables for later dice.
  bool CompleteDie(int die) {
    for (int i = 0; i < die; ++i) {
      const int w = win_[die][i];
      const int l = loss_[die][i];
      if (w == l || (w > l) != targets_[0].beats(die, i)) return false;
    }
    for (int r = 2; r <= rolls_; ++r) {
      dense_[die][r] = wide_ok_ ? DenseDistribution(faces_of_[die], r) : Dense{};
      for (int i = 0; i < die; ++i) {
        const bool want = targets_[r - 1].beats(die, i);
        int cmp;
        if (wide_ok_) {
          cmp = Compare(dense_[die][r], dense_[i][r]);
        } else {
          cmp = ExactCompare(die, i, r);
        }
        if (cmp != (want ? 1 : -1)) return false;
      }
    }
    auto& lt = lt_[die];
    auto& gt = gt_[die];
    for (std::int64_t v = 0; v <= space_.max_face; ++v) {
      int below = 0;
      int above = 0;
      for (auto f : faces_of_[die]) {
        below += f < v;
        above += f > v;
      }
      lt[v] = below;
      gt[v] = above;
    }
    return true;
  }

  int ExactCompare(int a, int b, int r) const {
    const WinOdds o = win_odds(Die("a", faces_of_[a]), Die("b", faces_of_[b]), r);
    if (o.win == o.loss) return 0;
    return o.win > o.loss ? 1 : -1;
  }

  DiceSet Verified() const {
    std::vector<Die> dice;
    for (int d = 0; d < dice_; ++d) {
      dice.emplace_back("D" + std::to_string(d), faces_of_[d]);
    }
    DiceSet ds("search", std::move(dice));
    if (dice_ >= 2 && !(realized_set(ds, rolls_, 0) == targets_)) {
      throw std::logic_error("dice search produced an unverified candidate");
    }
    return ds;
  }

  const TournamentSet& targets_;
  SearchSpace space_;
  int dice_;
  int faces_;
  int rolls_;
  bool wide_ok_ = true;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;

  std::vector<std::vector<std::int64_t>> faces_of_;
  std::vector<std::vector<Dense>> dense_;
  std::vector<std::vector<int>> lt_;    // [die][v]: faces below v
  std::vector<std::vector<int>> gt_;    // [die][v]: faces above v
  std::vector<std::vector<int>> win_;   // [die][earlier]: single-roll wins so far
  std::vector<std::vector<int>> loss_;  // [die][earlier]: single-roll losses so far
};

}  // namespace

DiceSearchResult search_realization(const Tournament& target,
                                    const SearchSpace& space) {
  return search_multiroll(TournamentSet(target), space);
}

DiceSearchResult search_multiroll(const TournamentSet& targets,
                                  const SearchSpace& space) {
  Searcher s(targets, space);
  return s.Run();
}

}  // namespace schutte
