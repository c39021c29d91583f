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

// Tournaments, sets of tournaments on a shared vertex set, and the Schutte
// domination predicates S_k over both.
//
// Vertices are labeled 0..n-1. Edge(i, j) means "i beats j". Adjacency is
// kept as packed bit rows in both directions: out-rows answer "does v beat
// every member of U" and in-rows give the dominators of U as the
// intersection of the in-rows of its members.
#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schutte {

enum class TournamentErrc {
  kMissingPair,
  kDuplicatePair,
  kSelfEdge,
  kVertexOutOfRange,
  kVertexInSubset,
  kSizeMismatch,
  kEmptySet,
  kNotPrime,
  kBadResidueClass,
};

class TournamentError : public std::invalid_argument {
 public:
  TournamentError(TournamentErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  TournamentErrc code() const { return code_; }

 private:
  TournamentErrc code_;
};

// Dynamic bitset over a fixed universe 0..n-1.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(int universe);
  VertexSubset(int universe, std::initializer_list<int> members);
  VertexSubset(int universe, std::span<const int> members);

  int universe() const { return universe_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const;
  bool empty() const { return size() == 0; }
  // Ascending member list.
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  // Lexicographic order on the ascending member lists.
  friend bool operator<(const VertexSubset& a, const VertexSubset& b) {
    return a.members() < b.members();
  }
  friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::string to_string() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Tournament {
 public:
  using Edge = std::pair<int, int>;

  // Validates that `beats` orients every unordered pair of 0..n-1 exactly
  // once. Throws TournamentError.
  static Tournament from_edges(int n, std::span<const Edge> beats);
  static Tournament from_edges(int n, std::initializer_list<Edge> beats) {
    return from_edges(n, std::span<const Edge>(beats.begin(), beats.size()));
  }
  // Builds from a predicate queried once per pair i < j; true means i beats j.
  static Tournament from_relation(int n,
                                  const std::function<bool(int, int)>& i_beats_j);

  int order() const { return n_; }
  bool beats(int i, int j) const;
  int out_degree(int v) const;
  // Edges sorted lexicographically, one per unordered pair.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> out_row(int v) const {
    return {out_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const std::uint64_t> in_row(int v) const {
    return {in_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  int words_per_row() const { return static_cast<int>(words_); }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  explicit Tournament(int n);
  void set_edge(int i, int j);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// m >= 1 tournaments on one vertex set. Immutable once built.
class TournamentSet {
 public:
  explicit TournamentSet(std::vector<Tournament> members);
  explicit TournamentSet(Tournament single)
      : TournamentSet(std::vector<Tournament>{std::move(single)}) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Tournament& operator[](int t) const { return members_[t]; }
  const std::vector<Tournament>& members() const { return members_; }

  friend bool operator==(const TournamentSet&, const TournamentSet&) = default;

 private:
  int n_;
  std::vector<Tournament> members_;
};

struct Dominator {
  int tournament;
  int vertex;
  friend bool operator==(const Dominator&, const Dominator&) = default;
};

// True iff v beats every member of U. Throws kVertexInSubset if v is in U.
bool dominates(const Tournament& t, int v, const VertexSubset& u);

// Lexicographically least (tournament index, vertex) dominating U.
std::optional<Dominator> find_dominator(const TournamentSet& tau,
                                        const VertexSubset& u);

// Schutte property S_k. S_0 holds for every nonempty vertex set; k >= n never
// holds. k-subsets are scanned in lexicographic order.
bool is_sk(const TournamentSet& tau, int k);

// Lexicographically least k-subset with no dominator, if any. For k >= n
// every k-subset (if one exists) is undominated, so the least one is returned.
std::optional<VertexSubset> undominated_witness(const TournamentSet& tau,
                                                int k);

// Paley tournament on p vertices: i beats j iff j - i is a nonzero quadratic
// residue mod p. Requires p prime with p = 3 (mod 4).
Tournament paley(int p);

bool is_prime(long long p);

}  // namespace schutte
