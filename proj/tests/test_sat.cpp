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
#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "schutte/cnf.hpp"
#include "schutte/sat_search.hpp"
#include "schutte/solver.hpp"

using namespace schutte;

namespace {

std::multiset<std::vector<int>> ClauseMultiset(const CnfFormula& f) {
  std::multiset<std::vector<int>> out;
  for (auto c : f.clauses) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

// Truth-table satisfiability for tiny formulas.
bool TruthTableSat(const CnfFormula& f) {
  for (std::uint32_t a = 0; a < (1U << f.var_count); ++a) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (int lit : c) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1U;
        any = any || (lit > 0 ? val : !val);
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("encoding sizes") {
  const Encoding e = encode(1, 1, 3, SymmetryOptions::none());
  CHECK(e.formula.var_count == 12);
  CHECK(e.formula.clauses.size() == 15);
  CHECK(e.vars.e_count() == 6);
  CHECK(e.vars.d_count() == 6);
  CHECK_THROWS_AS(encode(1, 2, 2), EncodeError);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % n);
    const Encoding enc = encode(m, k, n, SymmetryOptions::none());
    const mpz_class subsets = oracle::Binomial(n, k);
    const long e_vars = static_cast<long>(m) * n * (n - 1);
    const long d_vars = static_cast<long>(m) * subsets.get_si() * (n - k);
    CHECK(enc.formula.var_count == e_vars + d_vars);
    const long pair_clauses = static_cast<long>(m) * n * (n - 1);  // two per unordered pair
    const long dominance = d_vars * k;
    const long covering = subsets.get_si();
    CHECK(static_cast<long>(enc.formula.clauses.size()) == pair_clauses + dominance + covering);
  }
}

TEST_CASE("variable map is a bijection") {
  const VarMap vm(2, 2, 5);
  std::set<int> seen;
  for (int t = 0; t < 2; ++t) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        const int v = vm.e_index(t, i, j);
        CHECK(seen.insert(v).second);
        const auto d = vm.decode(v);
        CHECK(d.kind == VarMap::Decoded::Kind::kEdge);
        CHECK(d.t == t);
        CHECK(d.i == i);
        CHECK(d.j == j);
      }
    }
  }
  for (int t = 0; t < 2; ++t) {
    for (int rank = 0; rank < static_cast<int>(vm.subsets().size()); ++rank) {
      const auto& a = vm.subsets()[rank];
      CHECK(vm.subset_rank(a) == rank);
      for (int i = 0; i < 5; ++i) {
        if (std::find(a.begin(), a.end(), i) != a.end()) continue;
        const int v = vm.d_index(t, i, rank);
        CHECK(seen.insert(v).second);
        const auto d = vm.decode(v);
        CHECK(d.kind == VarMap::Decoded::Kind::kDominance);
        CHECK(d.t == t);
        CHECK(d.i == i);
        CHECK(d.subset == rank);
      }
    }
  }
  CHECK(*seen.begin() == 1);
  CHECK(*seen.rbegin() == vm.e_count() + vm.d_count());
  CHECK(static_cast<int>(seen.size()) == vm.e_count() + vm.d_count());
}

TEST_CASE("DIMACS") {
  CHECK(to_dimacs(CnfFormula{}) == "p cnf 0 0\n");
  CnfFormula f;
  f.var_count = 2;
  f.add_clause({1, -2});
  CHECK(to_dimacs(f) == "p cnf 2 1\n1 -2 0\n");
  CHECK_THROWS_AS(f.add_clause({}), CnfError);
  CHECK_THROWS_AS(f.add_clause({3}), CnfError);

  for (auto sym : {SymmetryOptions::none(), SymmetryOptions{}}) {
    const Encoding e = encode(2, 2, 5, sym);
    const std::string text = to_dimacs(e.formula);
    const CnfFormula back = parse_dimacs(text);
    CHECK(back.var_count == e.formula.var_count);
    CHECK(ClauseMultiset(back) == ClauseMultiset(e.formula));
    CHECK(to_dimacs(back) == text);
  }
  const CnfFormula spaced = parse_dimacs("c hello\np cnf 3 2\n1 2\n 0 -3\n0\n");
  CHECK(spaced.clauses.size() == 2);
  CHECK(spaced.clauses[0] == Clause{1, 2});
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 5 0\n"), CnfError);
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), CnfError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), CnfError);
}

TEST_CASE("solver basics") {
  CnfFormula contradiction;
  contradiction.var_count = 1;
  contradiction.add_clause({1});
  contradiction.add_clause({-1});
  CHECK(solve(contradiction).status == SatStatus::kUnsat);

  CnfFormula easy;
  easy.var_count = 2;
  easy.add_clause({1, 2});
  const auto r = solve(easy);
  CHECK(r.status == SatStatus::kSat);
  CHECK(satisfies(easy, r.model));

  CHECK(solve(CnfFormula{}).status == SatStatus::kSat);
}

TEST_CASE("solver agrees with truth tables on random formulas") {
  std::mt19937_64 rng(31337);
  for (const auto branching :
       {SolverOptions::Branching::kActivity, SolverOptions::Branching::kIndexOrder}) {
    SolverOptions opt;
    opt.branching = branching;
    for (int trial = 0; trial < 400; ++trial) {
      CnfFormula f;
      f.var_count = 3 + static_cast<int>(rng() % 10);
      const int clauses = static_cast<int>(f.var_count * (3 + rng() % 3));
      for (int c = 0; c < clauses; ++c) {
        Clause cl;
        const int width = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < width; ++l) {
          const int v = 1 + static_cast<int>(rng() % f.var_count);
          cl.push_back((rng() & 1) ? v : -v);
        }
        f.add_clause(cl);
      }
      const auto r = solve(f, {}, opt);
      REQUIRE(r.status != SatStatus::kUnknown);
      CHECK((r.status == SatStatus::kSat) == TruthTableSat(f));
      if (r.status == SatStatus::kSat) CHECK(satisfies(f, r.model));
    }
  }
}

TEST_CASE("solver is deterministic and honours budgets") {
  const Encoding e = encode(2, 3, 6);
  const auto a = solve(e.formula);
  const auto b = solve(e.formula);
  CHECK(a.status == SatStatus::kSat);
  CHECK(a.model == b.model);
  CHECK(a.stats.conflicts == b.stats.conflicts);

  Budget tiny;
  tiny.max_conflicts = 5;
  CHECK(solve(encode(2, 4, 9).formula, tiny).status == SatStatus::kUnknown);
  Budget decisions;
  decisions.max_decisions = 3;
  CHECK(solve(encode(2, 4, 9).formula, decisions).status == SatStatus::kUnknown);
  Budget instant;
  instant.time_limit = std::chrono::milliseconds(0);
  CHECK(solve(encode(2, 4, 9).formula, instant).status == SatStatus::kUnknown);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_exists(1, 1, 3));
  CHECK_FALSE(brute_force_exists(1, 1, 2));
  CHECK(brute_force_exists(2, 2, 4));
  CHECK_FALSE(brute_force_exists(2, 2, 3));
  CHECK(brute_force_exists(3, 0, 1));
  CHECK_FALSE(brute_force_exists(1, 2, 2));
  CHECK_THROWS_AS(brute_force_exists(1, 2, 8), CapExceeded);
  CHECK_THROWS_AS(brute_force_exists(3, 1, 5), CapExceeded);
}

TEST_CASE("search agrees with brute force under every symmetry option") {
  const SymmetryOptions options[] = {
      SymmetryOptions::none(), SymmetryOptions{true, false}, SymmetryOptions{false, true},
      SymmetryOptions{}};
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    const int m_max = pairs == 0 ? 3 : std::min(4, 22 / pairs);
    for (int m = 1; m <= m_max; ++m) {
      for (int k = 0; k < n; ++k) {
        if (m * pairs > 12 && k > 0 && k < n - 1) continue;  // the acceptance run covers these
        const bool expect = brute_force_exists(m, k, n);
        for (const auto& sym : options) {
          SearchConfig cfg;
          cfg.symmetry = sym;
          const SearchVerdict v = search_sk_set(m, k, n, cfg);
          INFO("m=" << m << " k=" << k << " n=" << n);
          CHECK((v.status == SatStatus::kSat) == expect);
          CHECK(v.status != SatStatus::kUnknown);
          if (v.certificate) {
            CHECK(oracle::IsSk(*v.certificate, k));
            CHECK(v.certificate->size() == m);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("decode") {
  const Encoding e = encode(1, 1, 3);
  const auto r = solve(e.formula);
  REQUIRE(r.status == SatStatus::kSat);
  const TournamentSet tau = decode(r.model, e.vars);
  CHECK(is_sk(tau, 1));
  for (int v = 0; v < 3; ++v) CHECK(tau[0].out_degree(v) == 1);  // a 3-cycle

  auto broken = r.model;
  const int ij = e.vars.e_index(0, 0, 1);
  const int ji = e.vars.e_index(0, 1, 0);
  broken[ij] = true;
  broken[ji] = true;
  CHECK_THROWS_WITH_AS(decode(broken, e.vars), doctest::Contains("InconsistentEdges"),
                       DecodeError);
  broken[ij] = false;
  broken[ji] = false;
  CHECK_THROWS_AS(decode(broken, e.vars), DecodeError);
  CHECK_THROWS_AS(decode(std::vector<bool>(3, false), e.vars), DecodeError);
}

TEST_CASE("f_exact on small cells") {
  CHECK(f_exact(3, 2, 8).value == 3);
  CHECK(f_exact(2, 2, 8).value == 4);
  CHECK(f_exact(2, 3, 8).value == 6);
  CHECK(f_exact(2, 1, 8).value == 2);
  for (int k = 0; k <= 4; ++k) CHECK(f_exact(k + 1, k, k + 3).value == k + 1);
  const FExactReport rep = f_exact(2, 3, 8);
  REQUIRE(rep.certificate.has_value());
  CHECK(is_sk(*rep.certificate, 3));
  REQUIRE(rep.steps.size() == 3);  // n = 4, 5 refuted; n = 6 satisfiable
  CHECK(rep.steps[0].verdict.status == SatStatus::kUnsat);
  CHECK_FALSE(rep.steps[0].verdict.attestation.empty());

  // Budget-limited walk reports a bracket instead of a value.
  SearchConfig tight;
  tight.budget.max_conflicts = 1;
  const FExactReport partial = f_exact(2, 4, 10, tight);
  CHECK_FALSE(partial.value.has_value());
  CHECK(partial.lower <= 10);
}

TEST_CASE("external models are re-verified") {
  const SymmetryOptions sym;
  const Encoding e = encode(2, 2, 4, sym);
  const auto r = solve(e.formula);
  REQUIRE(r.status == SatStatus::kSat);
  std::ostringstream out;
  out << "c external\ns SATISFIABLE\nv";
  for (int v = 1; v <= e.formula.var_count; ++v) out << ' ' << (r.model[v] ? v : -v);
  out << " 0\n";
  const ExternalCheck ok = verify_external_model(out.str(), 2, 2, 4, sym);
  CHECK(ok.accepted);
  REQUIRE(ok.certificate.has_value());
  CHECK(is_sk(*ok.certificate, 2));

  // A transitive first member cannot be part of this certificate.
  std::ostringstream bad;
  for (int t = 0; t < 2; ++t) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) bad << (i < j ? e.vars.e_index(t, i, j) : -e.vars.e_index(t, i, j)) << ' ';
      }
    }
  }
  bad << "0\n";
  const ExternalCheck rejected = verify_external_model(bad.str(), 2, 2, 4, sym);
  CHECK_FALSE(rejected.accepted);

  const ExternalCheck claim = verify_external_model("s UNSATISFIABLE\n", 2, 2, 3, sym);
  CHECK_FALSE(claim.accepted);
  CHECK(claim.detail.find("external claim") != std::string::npos);
}
