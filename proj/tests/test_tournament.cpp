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
#include "schutte/constructions.hpp"
#include "schutte/tournament.hpp"

using namespace schutte;

namespace {

Tournament Cycle3() { return Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

TournamentErrc CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const TournamentError& e) {
    return e.code();
  }
  FAIL("expected a TournamentError");
  return TournamentErrc::kEmptySet;
}

}  // namespace

TEST_CASE("construction from edge lists") {
  const Tournament one = Tournament::from_edges(1, {});
  CHECK(one.order() == 1);
  CHECK(one.edges().empty());

  const Tournament c = Cycle3();
  CHECK(c.beats(0, 1));
  CHECK(c.beats(1, 2));
  CHECK(c.beats(2, 0));
  CHECK_FALSE(c.beats(1, 0));
  for (int v = 0; v < 3; ++v) CHECK(c.out_degree(v) == 1);

  CHECK(CodeOf([] { Tournament::from_edges(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}); }) ==
        TournamentErrc::kDuplicatePair);
  CHECK(CodeOf([] { Tournament::from_edges(3, {{0, 1}, {1, 2}}); }) ==
        TournamentErrc::kMissingPair);
  CHECK(CodeOf([] { Tournament::from_edges(2, {{0, 1}, {1, 1}}); }) == TournamentErrc::kSelfEdge);
  CHECK(CodeOf([] { Tournament::from_edges(2, {{0, 2}}); }) ==
        TournamentErrc::kVertexOutOfRange);
}

TEST_CASE("edges are sorted and round-trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Tournament t = oracle::RandomTournament(n, rng);
    const auto e = t.edges();
    CHECK(e.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(Tournament::from_edges(n, e) == t);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) CHECK(t.beats(i, j) != t.beats(j, i));
      }
    }
  }
}

TEST_CASE("dominates") {
  const Tournament c = Cycle3();
  CHECK(dominates(c, 0, VertexSubset(3, {1})));
  CHECK_FALSE(dominates(c, 0, VertexSubset(3, {1, 2})));
  for (int v = 0; v < 3; ++v) CHECK(dominates(c, v, VertexSubset(3)));
  CHECK(CodeOf([&] { dominates(c, 1, VertexSubset(3, {1})); }) ==
        TournamentErrc::kVertexInSubset);
}

TEST_CASE("find_dominator returns the lexicographic minimum") {
  const TournamentSet tau(Cycle3());
  CHECK(find_dominator(tau, VertexSubset(3, {1})) == Dominator{0, 0});
  CHECK_FALSE(find_dominator(tau, VertexSubset(3, {0, 1, 2})).has_value());

  const TournamentSet rot = rotational_set(2, FillPolicy::low_beats_high());
  CHECK(find_dominator(rot, VertexSubset(3, {1, 2})) == Dominator{0, 0});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const TournamentSet s = oracle::RandomSet(1 + static_cast<int>(rng() % 3), n, rng);
    VertexSubset u(n);
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) u.insert(v);
    }
    std::optional<Dominator> expect;
    for (int t = 0; t < s.size() && !expect; ++t) {
      for (int v = 0; v < n && !expect; ++v) {
        if (u.contains(v)) continue;
        bool all = true;
        for (int x : u.members()) all = all && s[t].beats(v, x);
        if (all) expect = Dominator{t, v};
      }
    }
    CHECK(find_dominator(s, u) == expect);
  }
}

TEST_CASE("is_sk conventions") {
  const TournamentSet one(Tournament::from_edges(1, {}));
  CHECK(is_sk(one, 0));
  CHECK_FALSE(is_sk(one, 1));
  const TournamentSet c(Cycle3());
  CHECK(is_sk(c, 0));
  CHECK(is_sk(c, 1));
  CHECK_FALSE(is_sk(c, 2));
  CHECK_FALSE(is_sk(c, 3));
  CHECK_FALSE(is_sk(c, 4));
}

TEST_CASE("is_sk and the witness agree with the naive oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int m = 1 + static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 5);
    const TournamentSet tau = oracle::RandomSet(m, n, rng);
    INFO("n=" << n << " m=" << m << " k=" << k);
    CHECK(is_sk(tau, k) == oracle::IsSk(tau, k));
    if (k < n) {
      const auto w = undominated_witness(tau, k);
      CHECK(w.has_value() == !is_sk(tau, k));
      if (w) CHECK(w->members() == oracle::FirstUndominated(tau, k));
    }
  }
}

TEST_CASE("monotonicity in k and padding invariance") {
  std::mt19937_64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % 4);
    const TournamentSet tau = oracle::RandomSet(m, n, rng);
    for (int k = 0; k < n; ++k) {
      if (!is_sk(tau, k)) continue;
      ++positives;
      for (int kp = 0; kp <= k; ++kp) CHECK(is_sk(tau, kp));
      std::vector<Tournament> more = tau.members();
      more.push_back(oracle::RandomTournament(n, rng));
      CHECK(is_sk(TournamentSet(more), k));
    }
  }
  CHECK(positives > 200);
}

TEST_CASE("witness examples") {
  const TournamentSet c(Cycle3());
  REQUIRE(undominated_witness(c, 2).has_value());
  CHECK(undominated_witness(c, 2)->members() == std::vector<int>{0, 1});
  CHECK_FALSE(undominated_witness(TournamentSet(paley(7)), 2).has_value());
  CHECK(undominated_witness(TournamentSet(paley(19)), 4).has_value());
}

TEST_CASE("paley tournaments") {
  CHECK(paley(3) == Cycle3());
  const Tournament p7 = paley(7);
  std::vector<int> out0;
  for (int v = 1; v < 7; ++v) {
    if (p7.beats(0, v)) out0.push_back(v);
  }
  CHECK(out0 == std::vector<int>{1, 2, 4});

  for (int p : {3, 7, 11, 19, 23, 31, 43, 67}) {
    const Tournament t = paley(p);
    for (int v = 0; v < p; ++v) CHECK(t.out_degree(v) == (p - 1) / 2);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if (i != j) CHECK(t.beats(i, j) == oracle::IsQuadraticResidue(((j - i) % p + p) % p, p));
      }
    }
  }
  CHECK(CodeOf([] { paley(5); }) == TournamentErrc::kBadResidueClass);
  CHECK(CodeOf([] { paley(9); }) == TournamentErrc::kNotPrime);
  CHECK(CodeOf([] { paley(15); }) == TournamentErrc::kNotPrime);
}

TEST_CASE("paley golden facts") {
  CHECK(is_sk(TournamentSet(paley(3)), 1));
  CHECK(is_sk(TournamentSet(paley(7)), 2));
  CHECK(is_sk(TournamentSet(paley(19)), 3));
  CHECK_FALSE(is_sk(TournamentSet(paley(3)), 2));
  CHECK_FALSE(is_sk(TournamentSet(paley(7)), 3));
  CHECK_FALSE(is_sk(TournamentSet(paley(19)), 4));
  // Cross-check the smaller ones with the naive oracle.
  CHECK(oracle::IsSk(TournamentSet(paley(7)), 2));
  CHECK_FALSE(oracle::IsSk(TournamentSet(paley(7)), 3));
}

TEST_CASE("tournament sets") {
  CHECK_THROWS_AS(TournamentSet(std::vector<Tournament>{}), TournamentError);
  CHECK_THROWS_AS(TournamentSet(std::vector<Tournament>{paley(3), paley(7)}), TournamentError);
}

TEST_CASE("vertex subsets beyond one word") {
  VertexSubset s(130, {0, 64, 129});
  CHECK(s.size() == 3);
  CHECK(s.contains(129));
  s.erase(64);
  CHECK(s.members() == std::vector<int>{0, 129});
  CHECK_THROWS_AS(VertexSubset(5, {5}), TournamentError);
  // The oracle agrees on a large Paley tournament.
  const Tournament t = paley(131);
  VertexSubset u(131, {1, 70, 130});
  bool expect = false;
  for (int v = 0; v < 131 && !expect; ++v) {
    if (!u.contains(v)) expect = t.beats(v, 1) && t.beats(v, 70) && t.beats(v, 130);
  }
  CHECK(find_dominator(TournamentSet(t), u).has_value() == expect);
}
