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

// Deliberately naive reference implementations used as test oracles. None of
// them share code paths with the library beyond Tournament::beats.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "schutte/tournament.hpp"

namespace oracle {

inline schutte::Tournament RandomTournament(int n, std::mt19937_64& rng) {
  return schutte::Tournament::from_relation(n, [&](int, int) { return (rng() & 1) != 0; });
}

inline schutte::TournamentSet RandomSet(int m, int n, std::mt19937_64& rng) {
  std::vector<schutte::Tournament> ts;
  for (int t = 0; t < m; ++t) ts.push_back(RandomTournament(n, rng));
  return schutte::TournamentSet(std::move(ts));
}

// Calls fn on every k-subset of 0..n-1 in lexicographic order; stops when fn
// returns false.
inline void ForEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> s(k);
  std::function<bool(int, int)> rec = [&](int pos, int start) {
    if (pos == k) return fn(s);
    for (int v = start; v <= n - (k - pos); ++v) {
      s[pos] = v;
      if (!rec(pos + 1, v + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
}

inline bool Dominated(const schutte::TournamentSet& tau, const std::vector<int>& u) {
  for (int t = 0; t < tau.size(); ++t) {
    for (int v = 0; v < tau.order(); ++v) {
      bool in_u = false;
      bool all = true;
      for (int x : u) {
        if (x == v) in_u = true;
        else if (!tau[t].beats(v, x)) all = false;
      }
      if (!in_u && all) return true;
    }
  }
  return false;
}

inline bool IsSk(const schutte::TournamentSet& tau, int k) {
  if (k >= tau.order()) return false;
  bool ok = true;
  ForEachSubset(tau.order(), k, [&](const std::vector<int>& u) {
    ok = Dominated(tau, u);
    return ok;
  });
  return ok;
}

inline std::vector<int> FirstUndominated(const schutte::TournamentSet& tau, int k) {
  std::vector<int> found;
  ForEachSubset(tau.order(), k, [&](const std::vector<int>& u) {
    if (Dominated(tau, u)) return true;
    found = u;
    return false;
  });
  return found;
}

inline bool IsQuadraticResidue(int x, int p) {
  for (int y = 1; y < p; ++y) {
    if ((y * y) % p == x % p) return true;
  }
  return false;
}

// Exact (win, tie, loss) counts by enumerating every ordered roll sequence.
struct Counts {
  mpz_class win, tie, loss;
};
inline Counts EnumerateRolls(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b, int r) {
  auto sums = [](const std::vector<std::int64_t>& faces, int rolls) {
    std::vector<std::int64_t> out{0};
    for (int i = 0; i < rolls; ++i) {
      std::vector<std::int64_t> next;
      for (auto s : out) {
        for (auto f : faces) next.push_back(s + f);
      }
      out = std::move(next);
    }
    return out;
  };
  Counts c;
  const auto sa = sums(a, r);
  const auto sb = sums(b, r);
  for (auto x : sa) {
    for (auto y : sb) {
      if (x > y) c.win += 1;
      else if (x == y) c.tie += 1;
      else c.loss += 1;
    }
  }
  return c;
}

inline mpz_class Binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace oracle
