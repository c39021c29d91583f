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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "schutte/bounds.hpp"
#include "schutte/constructions.hpp"

using namespace schutte;

namespace {

const TournamentSet kSingle(Tournament::from_edges(1, {}));

// Upper bounds from the reference table of best known values, k = 0..8 rows, m = 1..5
// columns; 0 marks a blank cell.
constexpr std::int64_t kKnownTable[9][5] = {
    {1, 0, 0, 0, 0},        {3, 2, 0, 0, 0},      {7, 4, 3, 0, 0},
    {19, 6, 5, 4, 0},       {67, 10, 7, 6, 5},    {331, 14, 9, 8, 7},
    {1163, 26, 13, 10, 9},  {0, 38, 17, 12, 11},  {0, 86, 21, 16, 13},
};

// min{n >= k : 2^k C(n,k) (2^k - 1)^(n-k) < 2^(k(n-k))}, plain loop.
std::int64_t ErdosOracle(int k) {
  for (int n = k;; ++n) {
    mpz_class lhs = oracle::Binomial(n, k);
    lhs <<= k;
    mpz_class base = (mpz_class(1) << k) - 1;
    mpz_class pow;
    mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), n - k);
    lhs *= pow;
    const mpz_class rhs = mpz_class(1) << (static_cast<unsigned long>(k) * (n - k));
    if (lhs < rhs) return n;
  }
}

}  // namespace

TEST_CASE("pad_set") {
  const TournamentSet p7(paley(7));
  CHECK(pad_set(p7, 1, FillPolicy::low_beats_high()) == p7);
  const TournamentSet padded = pad_set(p7, 2, FillPolicy::low_beats_high());
  CHECK(padded.size() == 2);
  CHECK(padded[0] == p7[0]);
  CHECK(is_sk(padded, 2));
  CHECK_THROWS_AS(pad_set(padded, 1, FillPolicy::low_beats_high()), ConstructionError);
  CHECK(pad_set(p7, 4, FillPolicy::seeded(3)) == pad_set(p7, 4, FillPolicy::seeded(3)));
}

TEST_CASE("rotational sets are S_k for every fill") {
  const TournamentSet r0 = rotational_set(0, FillPolicy::low_beats_high());
  CHECK(r0.size() == 1);
  CHECK(r0.order() == 1);
  CHECK(is_sk(r0, 0));
  for (int k = 0; k <= 8; ++k) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const TournamentSet r = rotational_set(k, FillPolicy::seeded(seed));
      CHECK(r.size() == k + 1);
      CHECK(r.order() == k + 1);
      for (int i = 0; i <= k; ++i) CHECK(r[i].out_degree(i) == k);
      CHECK(is_sk(r, k));
    }
    CHECK(is_sk(rotational_set(k, FillPolicy::low_beats_high()), k));
  }
  CHECK(oracle::IsSk(rotational_set(4, FillPolicy::low_beats_high()), 4));
}

TEST_CASE("combine examples") {
  const TournamentSet c3(paley(3));
  const TournamentSet f22 = combine(c3, kSingle, FillPolicy::low_beats_high());
  CHECK(f22.order() == 4);
  CHECK(f22.size() == 2);
  CHECK(is_sk(f22, 2));

  const TournamentSet six = combine(c3, c3, FillPolicy::low_beats_high());
  const TournamentSet nine = combine(six, c3, FillPolicy::low_beats_high());
  CHECK(nine.order() == 9);
  CHECK(nine.size() == 3);
  CHECK(is_sk(nine, 5));
  CHECK(oracle::IsSk(nine, 5));
}

TEST_CASE("combine block structure and randomized S_k property") {
  // Seeds: (set, k) pairs whose S_k property is known.
  std::vector<std::pair<TournamentSet, int>> pool = {
      {kSingle, 0},
      {TournamentSet(paley(3)), 1},
      {TournamentSet(paley(7)), 2},
      {rotational_set(1, FillPolicy::low_beats_high()), 1},
      {rotational_set(2, FillPolicy::seeded(1)), 2},
      {rotational_set(3, FillPolicy::seeded(2)), 3},
  };
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [a, ka] = pool[rng() % pool.size()];
    const auto& [b, kb] = pool[rng() % pool.size()];
    const TournamentSet c = combine(a, b, FillPolicy::seeded(rng()));
    const int n1 = a.order();
    REQUIRE(c.order() == a.order() + b.order());
    REQUIRE(c.size() == a.size() + b.size());
    for (int t = 0; t < c.size(); ++t) {
      const bool first = t < a.size();
      for (int u = 0; u < n1; ++u) {
        for (int v = n1; v < c.order(); ++v) CHECK(c[t].beats(u, v) == first);
      }
      if (first) {
        for (int i = 0; i < n1; ++i) {
          for (int j = 0; j < n1; ++j) {
            if (i != j) CHECK(c[t].beats(i, j) == a[t].beats(i, j));
          }
        }
      } else {
        for (int i = 0; i < b.order(); ++i) {
          for (int j = 0; j < b.order(); ++j) {
            if (i != j) CHECK(c[t].beats(n1 + i, n1 + j) == b[t - a.size()].beats(i, j));
          }
        }
      }
    }
    CHECK(is_sk(c, ka + kb + 1));
  }
}

TEST_CASE("known base values") {
  const std::int64_t expect[] = {1, 3, 7, 19, 67, 331, 1163};
  for (int k = 0; k <= 6; ++k) CHECK(KnownFBase::at(k) == expect[k]);
  for (int k = 1; k <= 6; ++k) CHECK(KnownFBase::at(k) > KnownFBase::at(k - 1));
  CHECK_THROWS_AS(KnownFBase::at(7), BoundError);
}

TEST_CASE("erdos and szekeres bounds") {
  CHECK(erdos_upper(1) == 5);
  for (int k = 1; k <= 7; ++k) {
    INFO("k=" << k);
    CHECK(erdos_upper(k) == ErdosOracle(k));
  }
  for (int k = 1; k <= 10; ++k) CHECK(erdos_upper(k) >= erdos_lower(k));
  CHECK(erdos_lower(2) == 7);
  CHECK(erdos_lower(1) == 3);
  CHECK(szekeres_lower(3) == 19);
  CHECK(szekeres_lower(5) == 111);
  for (int k = 3; k <= 10; ++k) CHECK(erdos_upper(k) >= szekeres_lower(k));
  try {
    szekeres_lower(2);
    FAIL("expected kKOutOfRange");
  } catch (const BoundError& e) {
    CHECK(e.code() == BoundErrc::kKOutOfRange);
  }
}

TEST_CASE("closed form") {
  CHECK(closed_form_upper(2, 5) == 14);
  CHECK(closed_form_upper(3, 6) == 13);
  for (int k = 0; k <= 6; ++k) CHECK(closed_form_upper(1, k) == KnownFBase::at(k));
  for (int m = 1; m <= 5; ++m) {
    for (int k = m - 1; k <= 8; ++k) {
      // Direct evaluation with 1 <= b <= m.
      int a = 0;
      int b = 0;
      for (int aa = 0; aa <= k + 1; ++aa) {
        const int bb = k + 1 - aa * m;
        if (bb >= 1 && bb <= m) {
          a = aa;
          b = bb;
        }
      }
      if (a > KnownFBase::kMaxK) continue;
      std::int64_t expect = b * KnownFBase::at(a);
      if (m - b > 0) expect += (m - b) * KnownFBase::at(a - 1);
      CHECK(closed_form_upper(m, k) == expect);
    }
  }
  try {
    closed_form_upper(1, 7);
    FAIL("expected kBaseTableExhausted");
  } catch (const BoundError& e) {
    CHECK(e.code() == BoundErrc::kBaseTableExhausted);
  }
}

TEST_CASE("split DP") {
  CHECK(*split_dp_upper(5, 4).upper == 5);
  CHECK(*split_dp_upper(2, 8).upper == 86);
  for (int m = 1; m <= 5; ++m) {
    for (int k = 0; k <= 8; ++k) {
      if (m > k + 1) continue;
      std::optional<std::int64_t> dp;
      try {
        dp = split_dp_upper(m, k).upper;
      } catch (const BoundError&) {
      }
      if (!dp) continue;
      std::optional<std::int64_t> cf;
      try {
        cf = closed_form_upper(m, k);
      } catch (const BoundError&) {
      }
      if (cf) CHECK(*dp == *cf);
    }
  }
}

TEST_CASE("coarse bound dominates the closed form") {
  CHECK(coarse_upper(2, 5) == 14);
  for (int k = 0; k <= 6; ++k) CHECK(coarse_upper(1, k) == KnownFBase::at(k));
  for (int m = 1; m <= 5; ++m) {
    for (int k = m - 1; k <= 8; ++k) {
      std::int64_t coarse = 0;
      std::int64_t cf = 0;
      try {
        coarse = coarse_upper(m, k);
        cf = closed_form_upper(m, k);
      } catch (const BoundError&) {
        continue;
      }
      CHECK(coarse >= cf);
    }
  }
}

TEST_CASE("bounds table matches the reference values") {
  const auto grid = bounds_table(5, 8);
  REQUIRE(grid.size() == 9);
  int populated = 0;
  for (int k = 0; k <= 8; ++k) {
    REQUIRE(grid[k].size() == 5);
    for (int m = 1; m <= 5; ++m) {
      const auto& e = grid[k][m - 1];
      CHECK(e.m == m);
      CHECK(e.k == k);
      const bool blank = kKnownTable[k][m - 1] == 0;
      const bool shown = e.upper && !e.redundant;
      INFO("m=" << m << " k=" << k);
      CHECK(shown == !blank);
      if (shown) {
        ++populated;
        CHECK(*e.upper == kKnownTable[k][m - 1]);
      }
      if (e.upper) CHECK(*e.upper >= k + 1);
      if (m == k + 1) CHECK(*e.upper == k + 1);
      if (m == 1 && k <= 6) CHECK(*e.upper == KnownFBase::at(k));
    }
  }
  CHECK(populated == 33);

  // Nonincreasing in m, nondecreasing in k, over populated cells.
  for (int k = 0; k <= 8; ++k) {
    for (int m = 2; m <= 5; ++m) {
      const auto& a = grid[k][m - 2];
      const auto& b = grid[k][m - 1];
      if (a.upper && b.upper) CHECK(*b.upper <= *a.upper);
    }
  }
  for (int k = 1; k <= 8; ++k) {
    for (int m = 1; m <= 5; ++m) {
      const auto& a = grid[k - 1][m - 1];
      const auto& b = grid[k][m - 1];
      if (a.upper && b.upper) CHECK(*b.upper >= *a.upper);
    }
  }
}
