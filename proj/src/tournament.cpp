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

#include "schutte/tournament.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace schutte {

namespace {

constexpr std::size_t WordsFor(int n) {
  return (static_cast<std::size_t>(n) + 63) / 64;
}

void SetBit(std::uint64_t* row, int v) { row[v >> 6] |= std::uint64_t{1} << (v & 63); }

bool TestBit(const std::uint64_t* row, int v) {
  return (row[v >> 6] >> (v & 63)) & 1U;
}

void CheckVertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw TournamentError(TournamentErrc::kVertexOutOfRange,
                          "vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(n - 1));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSubset

VertexSubset::VertexSubset(int universe)
    : universe_(universe), words_(WordsFor(universe), 0) {}

VertexSubset::VertexSubset(int universe, std::initializer_list<int> members)
    : VertexSubset(universe,
                   std::span<const int>(members.begin(), members.size())) {}

VertexSubset::VertexSubset(int universe, std::span<const int> members)
    : VertexSubset(universe) {
  for (int v : members) insert(v);
}

bool VertexSubset::contains(int v) const {
  return v >= 0 && v < universe_ && TestBit(words_.data(), v);
}

void VertexSubset::insert(int v) {
  CheckVertex(universe_, v);
  SetBit(words_.data(), v);
}

void VertexSubset::erase(int v) {
  CheckVertex(universe_, v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSubset::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
    }
  }
  return out;
}

std::string VertexSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Tournament

Tournament::Tournament(int n)
    : n_(n),
      words_(WordsFor(n)),
      out_(static_cast<std::size_t>(n) * WordsFor(n), 0),
      in_(static_cast<std::size_t>(n) * WordsFor(n), 0) {}

void Tournament::set_edge(int i, int j) {
  SetBit(out_.data() + static_cast<std::size_t>(i) * words_, j);
  SetBit(in_.data() + static_cast<std::size_t>(j) * words_, i);
}

Tournament Tournament::from_edges(int n, std::span<const Edge> beats) {
  if (n < 0) {
    throw TournamentError(TournamentErrc::kVertexOutOfRange,
                          "negative vertex count");
  }
  Tournament t(n);
  for (const auto& [i, j] : beats) {
    CheckVertex(n, i);
    CheckVertex(n, j);
    if (i == j) {
      throw TournamentError(TournamentErrc::kSelfEdge,
                            "self edge at vertex " + std::to_string(i));
    }
    if (t.beats(i, j) || t.beats(j, i)) {
      throw TournamentError(TournamentErrc::kDuplicatePair,
                            "pair {" + std::to_string(std::min(i, j)) + "," +
                                std::to_string(std::max(i, j)) +
                                "} oriented more than once");
    }
    t.set_edge(i, j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!t.beats(i, j) && !t.beats(j, i)) {
        throw TournamentError(TournamentErrc::kMissingPair,
                              "pair {" + std::to_string(i) + "," +
                                  std::to_string(j) + "} has no orientation");
      }
    }
  }
  return t;
}

Tournament Tournament::from_relation(
    int n, const std::function<bool(int, int)>& i_beats_j) {
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i_beats_j(i, j)) {
        t.set_edge(i, j);
      } else {
        t.set_edge(j, i);
      }
    }
  }
  return t;
}

bool Tournament::beats(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) return false;
  return TestBit(out_.data() + static_cast<std::size_t>(i) * words_, j);
}

int Tournament::out_degree(int v) const {
  int c = 0;
  for (auto w : out_row(v)) c += std::popcount(w);
  return c;
}

std::vector<Tournament::Edge> Tournament::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      out.emplace_back(beats(i, j) ? Edge{i, j} : Edge{j, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TournamentSet

TournamentSet::TournamentSet(std::vector<Tournament> members)
    : n_(0), members_(std::move(members)) {
  if (members_.empty()) {
    throw TournamentError(TournamentErrc::kEmptySet,
                          "a tournament set needs at least one member");
  }
  n_ = members_.front().order();
  for (const auto& t : members_) {
    if (t.order() != n_) {
      throw TournamentError(TournamentErrc::kSizeMismatch,
                            "members of a tournament set must share one "
                            "vertex set");
    }
  }
}

// ---------------------------------------------------------------------------
// Domination

bool dominates(const Tournament& t, int v, const VertexSubset& u) {
  CheckVertex(t.order(), v);
  if (u.contains(v)) {
    throw TournamentError(TournamentErrc::kVertexInSubset,
                          "vertex " + std::to_string(v) +
                              " cannot dominate a set containing it");
  }
  auto row = t.out_row(v);
  auto sub = u.words();
  for (std::size_t w = 0; w < sub.size() && w < row.size(); ++w) {
    if ((sub[w] & ~row[w]) != 0) return false;
  }
  for (std::size_t w = row.size(); w < sub.size(); ++w) {
    if (sub[w] != 0) return false;
  }
  return true;
}

std::optional<Dominator> find_dominator(const TournamentSet& tau,
                                        const VertexSubset& u) {
  const int n = tau.order();
  auto members = u.members();
  for (int v : members) CheckVertex(n, v);
  const std::size_t words = WordsFor(n);
  std::vector<std::uint64_t> acc(words);
  for (int t = 0; t < tau.size(); ++t) {
    std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
    if (n % 64 != 0 && words > 0) acc.back() = (std::uint64_t{1} << (n % 64)) - 1;
    for (int v : members) {
      auto in = tau[t].in_row(v);
      for (std::size_t w = 0; w < words; ++w) acc[w] &= in[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (acc[w] != 0) {
        return Dominator{t, static_cast<int>(w * 64) + std::countr_zero(acc[w])};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Depth-first walk of k-subsets in lexicographic order carrying, per member
// tournament, the running intersection of in-rows (the candidate
// dominators). Returns the first subset whose candidates are empty in every
// tournament.
std::optional<std::vector<int>> FirstUndominated(const TournamentSet& tau,
                                                 int k) {
  const int n = tau.order();
  const int m = tau.size();
  const std::size_t words = WordsFor(n);
  const std::size_t layer = static_cast<std::size_t>(m) * words;

  // acc[d] holds m rows: intersections over the first d chosen vertices.
  std::vector<std::uint64_t> acc(layer * (k + 1), 0);
  for (int t = 0; t < m; ++t) {
    std::uint64_t* row = acc.data() + t * words;
    std::fill(row, row + words, ~std::uint64_t{0});
    if (n % 64 != 0) row[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
  }

  std::vector<int> chosen(k, -1);
  int depth = 0;
  chosen[0] = -1;
  while (depth >= 0) {
    int next = ++chosen[depth];
    if (next > n - k + depth) {
      --depth;
      continue;
    }
    const std::uint64_t* prev = acc.data() + layer * depth;
    std::uint64_t* cur = acc.data() + layer * (depth + 1);
    bool any = false;
    for (int t = 0; t < m; ++t) {
      auto in = tau[t].in_row(next);
      for (std::size_t w = 0; w < words; ++w) {
        cur[t * words + w] = prev[t * words + w] & in[w];
        any |= cur[t * words + w] != 0;
      }
    }
    if (!any) {
      // Every extension is undominated; the least one packs the remaining
      // slots consecutively.
      std::vector<int> out(chosen.begin(), chosen.begin() + depth + 1);
      for (int d = depth + 1; d < k; ++d) out.push_back(out.back() + 1);
      return out;
    }
    if (depth + 1 == k) continue;
    ++depth;
    chosen[depth] = next;
  }
  return std::nullopt;
}

}  // namespace

bool is_sk(const TournamentSet& tau, int k) {
  if (k < 0) return false;
  const int n = tau.order();
  if (k == 0) return n >= 1;
  if (k >= n) return false;
  return !FirstUndominated(tau, k).has_value();
}

std::optional<VertexSubset> undominated_witness(const TournamentSet& tau,
                                                int k) {
  const int n = tau.order();
  if (k < 0 || k > n) return std::nullopt;
  if (k == 0) {
    if (n >= 1) return std::nullopt;
    return VertexSubset(n);
  }
  if (k == n) {
    VertexSubset all(n);
    for (int v = 0; v < n; ++v) all.insert(v);
    return all;
  }
  auto found = FirstUndominated(tau, k);
  if (!found) return std::nullopt;
  return VertexSubset(n, std::span<const int>(*found));
}

// ---------------------------------------------------------------------------
// Paley

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Tournament paley(int p) {
  if (!is_prime(p)) {
    throw TournamentError(TournamentErrc::kNotPrime,
                          std::to_string(p) + " is not prime");
  }
  if (p % 4 != 3) {
    throw TournamentError(TournamentErrc::kBadResidueClass,
                          "Paley tournaments need p = 3 (mod 4); got " +
                              std::to_string(p));
  }
  std::vector<bool> residue(p, false);
  for (long long x = 1; x < p; ++x) residue[(x * x) % p] = true;
  return Tournament::from_relation(
      p, [&](int i, int j) { return residue[((j - i) % p + p) % p]; });
}

}  // namespace schutte
