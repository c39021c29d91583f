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

#include "schutte/cnf.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace schutte {

void CnfFormula::add_clause(Clause c) {
  if (c.empty()) throw CnfError("empty clause");
  for (Literal l : c) {
    if (l == 0 || std::abs(l) > var_count) {
      throw CnfError("literal " + std::to_string(l) + " outside 1.." +
                     std::to_string(var_count));
    }
  }
  clauses.push_back(std::move(c));
}

void write_dimacs(std::ostream& os, const CnfFormula& f) {
  os << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) os << l << ' ';
    os << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  write_dimacs(os, f);
  return os.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  Clause current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == 'c' || line.front() == '%') continue;
    if (line.front() == 'p') {
      if (header) throw CnfError("duplicate DIMACS header");
      std::istringstream hs{std::string(line)};
      std::string p, kind;
      int vars = -1;
      hs >> p >> kind >> vars >> declared;
      if (!hs || kind != "cnf" || vars < 0 || declared < 0) {
        throw CnfError("malformed DIMACS header: " + std::string(line));
      }
      f.var_count = vars;
      header = true;
      continue;
    }
    if (!header) throw CnfError("clause before DIMACS header");
    const char* p = line.data();
    const char* stop = line.data() + line.size();
    while (p < stop) {
      while (p < stop && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p >= stop) break;
      int lit = 0;
      auto [next, ec] = std::from_chars(p, stop, lit);
      if (ec != std::errc{}) {
        throw CnfError("bad literal in line: " + std::string(line));
      }
      p = next;
      if (lit == 0) {
        f.add_clause(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw CnfError("unterminated final clause");
  if (!header) throw CnfError("missing DIMACS header");
  if (static_cast<long>(f.clauses.size()) != declared) {
    throw CnfError("header declares " + std::to_string(declared) +
                   " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// VarMap

namespace {

void LexSubsets(int n, int k, std::vector<int>& cur, int start,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    LexSubsets(n, k, cur, v + 1, out);
    cur.pop_back();
  }
}

long long Binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

VarMap::VarMap(int m, int k, int n) : m_(m), k_(k), n_(n) {
  std::vector<int> cur;
  LexSubsets(n, k, cur, 0, subsets_);
  position_in_complement_.assign(subsets_.size() * n, -1);
  for (std::size_t r = 0; r < subsets_.size(); ++r) {
    std::vector<bool> in(n, false);
    for (int v : subsets_[r]) in[v] = true;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      if (!in[i]) position_in_complement_[r * n + i] = pos++;
    }
  }
}

int VarMap::e_index(int t, int i, int j) const {
  return 1 + t * n_ * (n_ - 1) + i * (n_ - 1) + (j < i ? j : j - 1);
}

int VarMap::d_index(int t, int i, int subset_rank) const {
  const int pos = position_in_complement_[subset_rank * n_ + i];
  return 1 + e_count() +
         (t * static_cast<int>(subsets_.size()) + subset_rank) * (n_ - k_) + pos;
}

int VarMap::subset_rank(const std::vector<int>& subset) const {
  long long rank = 0;
  int prev = -1;
  for (int idx = 0; idx < k_; ++idx) {
    for (int v = prev + 1; v < subset[idx]; ++v) {
      rank += Binom(n_ - 1 - v, k_ - 1 - idx);
    }
    prev = subset[idx];
  }
  return static_cast<int>(rank);
}

VarMap::Decoded VarMap::decode(int var) const {
  Decoded d{Decoded::Kind::kAuxiliary};
  int x = var - 1;
  if (x < e_count()) {
    d.kind = Decoded::Kind::kEdge;
    d.t = x / (n_ * (n_ - 1));
    x %= n_ * (n_ - 1);
    d.i = x / (n_ - 1);
    const int r = x % (n_ - 1);
    d.j = r < d.i ? r : r + 1;
    return d;
  }
  x -= e_count();
  if (x < d_count()) {
    d.kind = Decoded::Kind::kDominance;
    const int per_subset = n_ - k_;
    const int block = x / per_subset;
    const int pos = x % per_subset;
    d.t = block / static_cast<int>(subsets_.size());
    d.subset = block % static_cast<int>(subsets_.size());
    for (int i = 0; i < n_; ++i) {
      if (position_in_complement_[d.subset * n_ + i] == pos) {
        d.i = i;
        break;
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Encoding

Encoding encode(int m, int k, int n, SymmetryOptions sym) {
  if (m < 1) throw EncodeError("encode needs m >= 1");
  if (k < 0) throw EncodeError("encode needs k >= 0");
  if (n <= k) {
    throw EncodeError("TooSmall: n = " + std::to_string(n) +
                      " cannot carry S_" + std::to_string(k));
  }
  Encoding enc{CnfFormula{}, VarMap(m, k, n)};
  CnfFormula& f = enc.formula;
  const VarMap& vm = enc.vars;
  f.var_count = vm.e_count() + vm.d_count();

  for (int t = 0; t < m; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        f.add_clause({vm.e_index(t, i, j), vm.e_index(t, j, i)});
        f.add_clause({-vm.e_index(t, i, j), -vm.e_index(t, j, i)});
      }
    }
  }

  const auto& subsets = vm.subsets();
  for (int t = 0; t < m; ++t) {
    for (int r = 0; r < static_cast<int>(subsets.size()); ++r) {
      std::vector<bool> in(n, false);
      for (int v : subsets[r]) in[v] = true;
      for (int i = 0; i < n; ++i) {
        if (in[i]) continue;
        for (int j : subsets[r]) {
          f.add_clause({-vm.d_index(t, i, r), vm.e_index(t, i, j)});
        }
      }
    }
  }

  for (int r = 0; r < static_cast<int>(subsets.size()); ++r) {
    std::vector<bool> in(n, false);
    for (int v : subsets[r]) in[v] = true;
    Clause cover;
    for (int t = 0; t < m; ++t) {
      for (int i = 0; i < n; ++i) {
        if (!in[i]) cover.push_back(vm.d_index(t, i, r));
      }
    }
    f.add_clause(std::move(cover));
  }

  if (sym.fix_first_edge && n >= 2) {
    f.add_clause({vm.e_index(0, 0, 1)});
  }
  if (sym.lex_order_members && m >= 2 && n >= 2) {
    // x >=lex y over the upper-triangle edge vectors, most significant pair
    // (0,1) first. eq_p means x and y agree on positions < p.
    for (int t = 0; t + 1 < m; ++t) {
      std::vector<std::pair<int, int>> pos;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          pos.emplace_back(vm.e_index(t, i, j), vm.e_index(t + 1, i, j));
        }
      }
      int eq = 0;  // 0 stands for "true" at p = 0
      for (std::size_t p = 0; p < pos.size(); ++p) {
        const auto [x, y] = pos[p];
        Clause ge{x, -y};
        if (eq != 0) ge.push_back(-eq);
        f.add_clause(std::move(ge));
        if (p + 1 == pos.size()) break;
        const int next = f.new_var();
        Clause both_true{-x, -y, next};
        Clause both_false{x, y, next};
        if (eq != 0) {
          both_true.push_back(-eq);
          both_false.push_back(-eq);
        }
        f.add_clause(std::move(both_true));
        f.add_clause(std::move(both_false));
        eq = next;
      }
    }
  }
  return enc;
}

}  // namespace schutte
