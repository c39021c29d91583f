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

#include "schutte/sat_search.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace schutte {

TournamentSet decode(const std::vector<bool>& assignment, const VarMap& vm) {
  const int n = vm.n();
  if (static_cast<int>(assignment.size()) <= vm.e_count()) {
    throw DecodeError("assignment does not cover the edge variables");
  }
  std::vector<Tournament> members;
  members.reserve(vm.m());
  for (int t = 0; t < vm.m(); ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool ij = assignment[vm.e_index(t, i, j)];
        const bool ji = assignment[vm.e_index(t, j, i)];
        if (ij == ji) {
          throw DecodeError("InconsistentEdges: member " + std::to_string(t) +
                            ", pair {" + std::to_string(i) + "," +
                            std::to_string(j) + "} has " +
                            (ij ? "both" : "neither") + " orientation(s)");
        }
      }
    }
    members.push_back(Tournament::from_relation(
        n, [&](int i, int j) { return assignment[vm.e_index(t, i, j)]; }));
  }
  return TournamentSet(std::move(members));
}

namespace {

std::uint64_t Fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Attestation(const CnfFormula& f, const SolverOptions& opt) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(Fnv1a(to_dimacs(f))));
  return opt.fingerprint() + "#cnf:" + buf;
}

}  // namespace

SearchVerdict search_sk_set(int m, int k, int n, const SearchConfig& config) {
  Encoding enc = encode(m, k, n, config.symmetry);
  SolveResult r = solve(enc.formula, config.budget, config.solver);
  SearchVerdict v;
  v.status = r.status;
  v.stats = r.stats;
  v.attestation = Attestation(enc.formula, config.solver);
  if (r.status == SatStatus::kSat) {
    TournamentSet cert = decode(r.model, enc.vars);
    if (!is_sk(cert, k)) {
      throw std::logic_error("solver model decoded to a set that is not S_" +
                             std::to_string(k));
    }
    v.certificate = std::move(cert);
  }
  return v;
}

FExactReport f_exact(int m, int k, int n_max, const SearchConfig& config) {
  if (m < 1 || k < 0) throw EncodeError("f_exact needs m >= 1 and k >= 0");
  FExactReport rep;
  rep.m = m;
  rep.k = k;
  rep.lower = k + 1;
  bool refuted_so_far = true;
  for (int n = k + 1; n <= n_max; ++n) {
    SearchVerdict v = search_sk_set(m, k, n, config);
    const SatStatus status = v.status;
    if (status == SatStatus::kSat) {
      rep.upper = n;
      rep.certificate = v.certificate;
      if (refuted_so_far) rep.value = n;
    }
    rep.steps.push_back({n, std::move(v)});
    if (status == SatStatus::kSat) break;
    if (status == SatStatus::kUnsat && refuted_so_far) rep.lower = n + 1;
    if (status == SatStatus::kUnknown) refuted_so_far = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Brute force. Deliberately independent of Tournament, is_sk, the encoder
// and the solver: orientations are raw bit codes over the pairs i < j.

bool brute_force_exists(int m, int k, int n) {
  if (m < 1 || k < 0 || n < 0) throw CapExceeded("brute force needs m >= 1, k >= 0, n >= 0");
  const int pairs = n * (n - 1) / 2;
  if (static_cast<long long>(m) * pairs > kBruteForceCap) {
    throw CapExceeded("m * C(n,2) = " + std::to_string(m * pairs) +
                      " exceeds the enumeration cap of " +
                      std::to_string(kBruteForceCap));
  }
  if (k >= n) return false;  // no vertex outside a k-set can exist

  std::vector<std::pair<int, int>> pair_list;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
  }
  std::vector<unsigned> subsets;  // vertex bitmasks of all k-subsets
  for (unsigned s = 0; s < (1U << n); ++s) {
    if (__builtin_popcount(s) == k) subsets.push_back(s);
  }
  const std::uint64_t full =
      subsets.size() == 64 ? ~0ULL : ((1ULL << subsets.size()) - 1);
  const unsigned all_vertices = (1U << n) - 1;

  // covered[code]: which k-subsets some vertex dominates in that orientation.
  const std::uint32_t codes = 1U << pairs;
  std::vector<std::uint64_t> covered(codes, 0);
  std::vector<unsigned> beaten_by(n);
  for (std::uint32_t code = 0; code < codes; ++code) {
    std::fill(beaten_by.begin(), beaten_by.end(), 0U);
    for (int p = 0; p < pairs; ++p) {
      const auto [i, j] = pair_list[p];
      if ((code >> p) & 1U) {
        beaten_by[j] |= 1U << i;
      } else {
        beaten_by[i] |= 1U << j;
      }
    }
    std::uint64_t mask = 0;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      unsigned dominators = all_vertices;
      for (int v = 0; v < n; ++v) {
        if ((subsets[s] >> v) & 1U) dominators &= beaten_by[v];
      }
      if (dominators != 0) mask |= 1ULL << s;
    }
    covered[code] = mask;
  }

  // All ordered m-tuples of codes.
  std::vector<std::uint32_t> idx(m, 0);
  std::vector<std::uint64_t> acc(m + 1, 0);
  int depth = 0;
  idx[0] = 0;
  for (;;) {
    acc[depth + 1] = acc[depth] | covered[idx[depth]];
    if (acc[depth + 1] == full) return true;
    if (depth + 1 < m) {
      ++depth;
      idx[depth] = 0;
      continue;
    }
    while (depth >= 0 && ++idx[depth] == codes) --depth;
    if (depth < 0) return false;
  }
}

// ---------------------------------------------------------------------------

ExternalCheck verify_external_model(std::string_view out, int m, int k, int n,
                                    const SymmetryOptions& symmetry) {
  ExternalCheck check;
  Encoding enc = encode(m, k, n, symmetry);
  std::vector<bool> model(enc.formula.var_count + 1, false);
  std::vector<bool> given(enc.formula.var_count + 1, false);
  bool claimed_unsat = false;
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::size_t end = out.find('\n', pos);
    if (end == std::string_view::npos) end = out.size();
    std::string_view line = out.substr(pos, end - pos);
    pos = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == 'c') continue;
    if (line.front() == 's') {
      if (line.find("UNSAT") != std::string_view::npos) claimed_unsat = true;
      continue;
    }
    if (line.front() == 'v') line.remove_prefix(1);
    const char* p = line.data();
    const char* stop = p + line.size();
    while (p < stop) {
      while (p < stop && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p >= stop) break;
      int lit = 0;
      auto [next, ec] = std::from_chars(p, stop, lit);
      if (ec != std::errc{}) {
        check.detail = "unparseable token in model";
        return check;
      }
      p = next;
      const int v = std::abs(lit);
      if (lit == 0) continue;
      if (v > enc.formula.var_count) {
        check.detail = "literal " + std::to_string(lit) + " beyond var count";
        return check;
      }
      model[v] = lit > 0;
      given[v] = true;
    }
  }
  if (claimed_unsat) {
    check.detail = "external claim: UNSAT (not an internal attestation)";
    return check;
  }
  for (int v = 1; v <= enc.vars.e_count(); ++v) {
    if (!given[v]) {
      check.detail = "model leaves edge variable " + std::to_string(v) + " unset";
      return check;
    }
  }
  try {
    TournamentSet cert = decode(model, enc.vars);
    if (!is_sk(cert, k)) {
      check.detail = "decoded set is not S_" + std::to_string(k);
      return check;
    }
    check.accepted = true;
    check.detail = satisfies(enc.formula, model)
                       ? "verified: decoded set is S_" + std::to_string(k)
                       : "verified: decoded set is S_" + std::to_string(k) +
                             " (model does not satisfy every auxiliary clause)";
    check.certificate = std::move(cert);
  } catch (const DecodeError& e) {
    check.detail = e.what();
  }
  return check;
}

}  // namespace schutte
