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

#include "schutte/bounds.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace schutte {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void RequireBase(int k) {
  if (!KnownFBase::covers(k)) {
    throw BoundError(BoundErrc::kBaseTableExhausted,
                     "no known bound for f(" + std::to_string(k) + ")");
  }
}

// 2^k C(n,k) (2^k - 1)^(n-k) < 2^(k(n-k)), i.e. the Erdos expression is
// below 1.
bool ErdosHolds(int k, std::int64_t n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  mpz_class base = (mpz_class(1) << k) - 1;
  mpz_class lhs;
  mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(n - k));
  lhs *= binom;
  lhs <<= k;
  mpz_class rhs = mpz_class(1) << static_cast<mp_bitcnt_t>(k * (n - k));
  return lhs < rhs;
}

double ErdosLog(int k, std::int64_t n) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return kk * std::log(2.0) + std::lgamma(nn + 1) - std::lgamma(kk + 1) -
         std::lgamma(nn - kk + 1) + (nn - kk) * std::log1p(-std::ldexp(1.0, -k));
}

}  // namespace

std::int64_t KnownFBase::at(int k) {
  RequireBase(k);
  return kValues[k];
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kBase: return "base f(k)";
    case Provenance::kTrivial: return "trivial k+1";
    case Provenance::kClosedForm: return "closed-form";
    case Provenance::kSplitDp: return "split-dp";
  }
  return "?";
}

std::int64_t erdos_upper(int k) {
  if (k < 1 || k > 30) {
    throw BoundError(BoundErrc::kKOutOfRange, "erdos_upper needs 1 <= k <= 30");
  }
  // The ratio g(n+1)/g(n) = (n+1)/(n+1-k) (1 - 2^-k) decreases in n and
  // g(k) = 2^k > 1, so { n : g(n) < 1 } is a suffix of the integers >= k.
  // A floating-point scan locates the boundary; exact checks settle it.
  std::int64_t n = k;
  while (ErdosLog(k, n) >= 0.0) ++n;
  while (!ErdosHolds(k, n)) ++n;
  while (n > k && ErdosHolds(k, n - 1)) --n;
  return n;
}

std::int64_t erdos_lower(int k) {
  if (k < 1 || k > 60) {
    throw BoundError(BoundErrc::kKOutOfRange, "erdos_lower needs 1 <= k <= 60");
  }
  return (std::int64_t{1} << (k + 1)) - 1;
}

std::int64_t szekeres_lower(int k) {
  if (k <= 2 || k > 58) {
    throw BoundError(BoundErrc::kKOutOfRange,
                     "szekeres_lower needs 2 < k <= 58");
  }
  return (k + 2) * (std::int64_t{1} << (k - 1)) - 1;
}

std::int64_t closed_form_upper(int m, int k) {
  if (m < 1 || k < 0) {
    throw BoundError(BoundErrc::kOutOfDomain, "closed_form_upper needs m >= 1, k >= 0");
  }
  // k + 1 = a m + b with 1 <= b <= m; a remainder of 0 becomes b = m.
  int a = (k + 1) / m;
  int b = (k + 1) % m;
  if (b == 0) {
    b = m;
    a -= 1;
  }
  std::int64_t total = 0;
  if (b > 0) total += b * KnownFBase::at(a);
  if (m - b > 0) {
    if (a - 1 < 0) {
      throw BoundError(BoundErrc::kOutOfDomain,
                       "closed form undefined for m > k + 1");
    }
    total += (m - b) * KnownFBase::at(a - 1);
  }
  return total;
}

std::int64_t coarse_upper(int m, int k) {
  if (m < 1 || k < m - 1) {
    throw BoundError(BoundErrc::kOutOfDomain, "coarse_upper needs m >= 1, k >= m - 1");
  }
  const int num = k - m + 1;
  const int arg = (num + m - 1) / m;  // num >= 0
  return m * KnownFBase::at(arg);
}

namespace {

struct Cell {
  std::int64_t value = kInf;
  Provenance provenance = Provenance::kBase;
  int m1 = 0;
  int k1 = 0;
};

// best[m][k] for 1 <= m <= m_max, 0 <= k <= k_max.
std::vector<std::vector<Cell>> SplitDp(int m_max, int k_max) {
  std::vector<std::vector<Cell>> best(m_max + 1, std::vector<Cell>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    for (int m = 1; m <= m_max; ++m) {
      Cell& c = best[m][k];
      if (m == 1) {
        if (KnownFBase::covers(k)) c = {KnownFBase::at(k), Provenance::kBase};
        continue;
      }
      if (m >= k + 1) {
        c = {k + 1, Provenance::kTrivial};
        continue;
      }
      for (int m1 = 1; m1 < m; ++m1) {
        for (int k1 = 0; k1 <= k - 1; ++k1) {
          const auto& lhs = best[m1][k1];
          const auto& rhs = best[m - m1][k - 1 - k1];
          if (lhs.value >= kInf || rhs.value >= kInf) continue;
          if (lhs.value + rhs.value < c.value) {
            c = {lhs.value + rhs.value, Provenance::kSplitDp, m1, k1};
          }
        }
      }
      if (best[m - 1][k].value < c.value) {
        c = {best[m - 1][k].value, Provenance::kSplitDp, 0, k};
      }
    }
  }
  return best;
}

}  // namespace

BoundsTableEntry split_dp_upper(int m, int k) {
  if (m < 1 || k < 0) {
    throw BoundError(BoundErrc::kOutOfDomain, "split_dp_upper needs m >= 1, k >= 0");
  }
  auto best = SplitDp(m, k);
  const Cell& c = best[m][k];
  if (c.value >= kInf) {
    throw BoundError(BoundErrc::kBaseTableExhausted,
                     "no split reaches known f values for (m=" +
                         std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  BoundsTableEntry e;
  e.m = m;
  e.k = k;
  e.upper = c.value;
  e.provenance = c.provenance;
  e.split_m1 = c.m1;
  e.split_k1 = c.k1;
  e.redundant = m > k + 1;
  return e;
}

std::vector<std::vector<BoundsTableEntry>> bounds_table(int m_max, int k_max) {
  if (m_max < 1 || k_max < 0) {
    throw BoundError(BoundErrc::kOutOfDomain, "bounds_table needs m_max >= 1, k_max >= 0");
  }
  auto best = SplitDp(m_max, k_max);
  std::vector<std::vector<BoundsTableEntry>> grid(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    for (int m = 1; m <= m_max; ++m) {
      BoundsTableEntry e;
      e.m = m;
      e.k = k;
      e.redundant = m > k + 1;
      const Cell& c = best[m][k];
      if (c.value < kInf) {
        e.upper = c.value;
        e.provenance = c.provenance;
        e.split_m1 = c.m1;
        e.split_k1 = c.k1;
      }
      if (m > 1 && m <= k + 1) {
        try {
          const auto cf = closed_form_upper(m, k);
          // Ties go to the closed form: it is the named bound.
          if (!e.upper || cf <= *e.upper) {
            e.upper = cf;
            e.provenance = Provenance::kClosedForm;
          }
        } catch (const BoundError&) {
          // a beyond the known base; the split DP value (if any) stands.
        }
      }
      if (m >= k + 1) {
        e.upper = k + 1;
        e.provenance = m == 1 ? Provenance::kBase : Provenance::kTrivial;
      }
      grid[k].push_back(e);
    }
  }
  return grid;
}

}  // namespace schutte
