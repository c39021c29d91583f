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

// Exact search for S_k sets of tournaments through the CNF encoding, plus a
// brute-force enumerator that shares no code with the encoder or solver.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schutte/cnf.hpp"
#include "schutte/solver.hpp"
#include "schutte/tournament.hpp"

namespace schutte {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads tournaments from the e-variables. Throws DecodeError
// (InconsistentEdges) unless exactly one orientation per pair is true.
TournamentSet decode(const std::vector<bool>& assignment, const VarMap& vm);

struct SearchVerdict {
  SatStatus status = SatStatus::kUnknown;
  // Present iff status is kSat; always passed is_sk before being stored.
  std::optional<TournamentSet> certificate;
  SolverStats stats;
  // Solver configuration digest plus formula digest, for UNSAT attestations.
  std::string attestation;
};

struct SearchConfig {
  SymmetryOptions symmetry;
  SolverOptions solver;
  Budget budget;
};

// Does an S_k set of m tournaments on n vertices exist?
SearchVerdict search_sk_set(int m, int k, int n, const SearchConfig& config = {});

struct FExactStep {
  int n = 0;
  SearchVerdict verdict;
};

struct FExactReport {
  int m = 0;
  int k = 0;
  // Set when every n below it was refuted and it was satisfiable.
  std::optional<int> value;
  // Least n not refuted and the least satisfiable n seen (if any); equal to
  // value when value is set.
  int lower = 0;
  std::optional<int> upper;
  std::optional<TournamentSet> certificate;
  std::vector<FExactStep> steps;
};

// Walks n = k+1, k+2, ..., n_max. The budget applies to each step.
FExactReport f_exact(int m, int k, int n_max, const SearchConfig& config = {});

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kBruteForceCap = 22;

// Exhaustive enumeration over all orientations of all m members. Requires
// m * C(n,2) <= kBruteForceCap; throws CapExceeded otherwise.
bool brute_force_exists(int m, int k, int n);

// Result of checking a model produced by an external solver.
struct ExternalCheck {
  bool accepted = false;
  std::string detail;
  std::optional<TournamentSet> certificate;
};

// Parses "v ..." lines (SAT competition output) or a bare list of signed
// literals, decodes, and re-verifies is_sk. A claimed UNSAT is never an
// attestation here; callers record it as an external claim.
ExternalCheck verify_external_model(std::string_view solver_output, int m,
                                    int k, int n,
                                    const SymmetryOptions& symmetry = {});

}  // namespace schutte
