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

// CNF formulas, DIMACS text, and the encoding of "an S_k set of m
// tournaments on n vertices exists".
//
// Variables (all 1-based, e before D before auxiliaries):
//   e(t,i,j)   i beats j in member t, one variable per ordered pair i != j;
//   D(t,i,A)   i dominates the k-subset A in member t, for i not in A.
// Clauses:
//   (e(t,i,j) | e(t,j,i)) and (-e(t,i,j) | -e(t,j,i))  per t, i < j;
//   (-D(t,i,A) | e(t,i,j))                             per t, A, i, j in A;
//   OR over t and i not in A of D(t,i,A)               per A.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schutte {

using Literal = int;
using Clause = std::vector<Literal>;

class CnfError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CnfFormula {
  int var_count = 0;
  std::vector<Clause> clauses;

  int new_var() { return ++var_count; }
  // Rejects the empty clause and literals beyond var_count.
  void add_clause(Clause c);
};

// Standard DIMACS: "p cnf V C" header, one zero-terminated clause per line.
std::string to_dimacs(const CnfFormula& f);
void write_dimacs(std::ostream& os, const CnfFormula& f);
// Accepts comment lines and clauses spanning lines. Throws CnfError.
CnfFormula parse_dimacs(std::string_view text);

struct SymmetryOptions {
  // Unit clause e(0,0,1): any model can swap labels 0 and 1.
  bool fix_first_edge = true;
  // Edge vectors of consecutive members ordered lexicographically
  // non-increasing; members of a set are unordered.
  bool lex_order_members = true;

  static SymmetryOptions none() { return {false, false}; }
};

class VarMap {
 public:
  VarMap(int m, int k, int n);

  int m() const { return m_; }
  int k() const { return k_; }
  int n() const { return n_; }

  int e_count() const { return m_ * n_ * (n_ - 1); }
  int d_count() const {
    return m_ * static_cast<int>(subsets_.size()) * (n_ - k_);
  }
  // 0-based t, i != j.
  int e_index(int t, int i, int j) const;
  // subset by lexicographic rank, i not in the subset.
  int d_index(int t, int i, int subset_rank) const;
  int subset_rank(const std::vector<int>& subset) const;
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }

  struct Decoded {
    enum class Kind { kEdge, kDominance, kAuxiliary } kind;
    int t = -1;
    int i = -1;
    int j = -1;      // kEdge
    int subset = -1;  // kDominance: lexicographic rank
  };
  // Inverse of e_index/d_index. Indices past e_count + d_count decode as
  // auxiliary (symmetry-breaking) variables.
  Decoded decode(int var) const;

 private:
  int m_, k_, n_;
  std::vector<std::vector<int>> subsets_;
  std::vector<int> position_in_complement_;  // [rank * n + i]
};

class EncodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Encoding {
  CnfFormula formula;
  VarMap vars;
};

// Throws EncodeError (TooSmall) when n <= k, or on m < 1.
Encoding encode(int m, int k, int n, SymmetryOptions sym = {});

}  // namespace schutte
