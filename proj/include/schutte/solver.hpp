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

// A complete CDCL solver: two-watched-literal unit propagation, first-UIP
// clause learning with non-chronological backjumping, activity-based or
// static index-order branching, Luby restarts and learnt clause reduction.
// Single-threaded; one call owns all of its state.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schutte/cnf.hpp"

namespace schutte {

enum class SatStatus { kSat, kUnsat, kUnknown };

std::string to_string(SatStatus s);

struct Budget {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> max_decisions;
  std::optional<std::uint64_t> max_conflicts;

  static Budget unlimited() { return {}; }
};

struct SolverOptions {
  enum class Branching {
    // VSIDS; ties broken by lower index, so e-variables go first initially.
    kActivity,
    // Lowest-index unassigned variable.
    kIndexOrder,
  };
  Branching branching = Branching::kActivity;
  bool restarts = true;
  double var_decay = 0.95;
  int luby_unit = 100;

  // Stable digest of the configuration, recorded with UNSAT attestations.
  std::string fingerprint() const;
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learnt_clauses = 0;
  std::uint64_t restarts = 0;
  double seconds = 0;
};

struct SolveResult {
  SatStatus status = SatStatus::kUnknown;
  // Indexed by variable 1..var_count when status is kSat; model[0] unused.
  std::vector<bool> model;
  SolverStats stats;
};

SolveResult solve(const CnfFormula& f, const Budget& budget = {},
                  const SolverOptions& options = {});

// True iff every clause has a literal made true by `model`.
bool satisfies(const CnfFormula& f, const std::vector<bool>& model);

}  // namespace schutte
