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

// Bounds on f(k), the least order of an S_k tournament, and f(m, k), the
// least order of an S_k set of m tournaments.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schutte {

enum class BoundErrc { kBaseTableExhausted, kKOutOfRange, kOutOfDomain };

class BoundError : public std::domain_error {
 public:
  BoundError(BoundErrc code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  BoundErrc code() const { return code_; }

 private:
  BoundErrc code_;
};

// Best known upper bounds for f(k): exact for k <= 3, smallest S_k Paley
// tournaments for k = 4, 5, 6.
struct KnownFBase {
  static constexpr int kMaxK = 6;
  static constexpr std::int64_t kValues[kMaxK + 1] = {1, 3, 7, 19, 67, 331, 1163};

  static bool covers(int k) { return k >= 0 && k <= kMaxK; }
  static bool is_exact(int k) { return k >= 0 && k <= 3; }
  // Throws kBaseTableExhausted outside 0..kMaxK.
  static std::int64_t at(int k);
};

enum class Provenance { kBase, kTrivial, kClosedForm, kSplitDp };

std::string to_string(Provenance p);

struct BoundsTableEntry {
  int m = 0;
  int k = 0;
  // Empty when no bound is computable from the known f(k) values.
  std::optional<std::int64_t> upper;
  Provenance provenance = Provenance::kBase;
  // m > k + 1: the value equals the m = k + 1 cell and the table leaves it
  // blank.
  bool redundant = false;
  // For kSplitDp: the split that realized the bound (m1, k1) with
  // m2 = m - m1, k2 = k - 1 - k1. m1 = 0 marks a padding step from m - 1.
  int split_m1 = 0;
  int split_k1 = 0;
};

// min{ n >= k : 2^k C(n,k) (1 - 2^-k)^(n-k) < 1 }, decided in exact integer
// arithmetic.
std::int64_t erdos_upper(int k);
// 2^(k+1) - 1.
std::int64_t erdos_lower(int k);
// (k + 2) 2^(k-1) - 1, valid for k > 2; kKOutOfRange otherwise.
std::int64_t szekeres_lower(int k);

// With k + 1 = a m + b and 1 <= b <= m: b f(a) + (m - b) f(a - 1).
// kOutOfDomain when m > k + 1 (f(-1) would carry a nonzero coefficient).
std::int64_t closed_form_upper(int m, int k);

// Minimum over recursive binary splits m1 + m2 = m, k1 + k2 = k - 1, with
// best(1, k) = f(k), best(m, k) = k + 1 for m >= k + 1 and padding
// best(m, k) <= best(m - 1, k).
BoundsTableEntry split_dp_upper(int m, int k);

// m f(ceil((k - m + 1) / m)). Requires k >= m - 1.
std::int64_t coarse_upper(int m, int k);

// Row-major grid indexed [k][m - 1] for 0 <= k <= k_max, 1 <= m <= m_max.
std::vector<std::vector<BoundsTableEntry>> bounds_table(int m_max, int k_max);

}  // namespace schutte
