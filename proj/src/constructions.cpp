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

#include "schutte/constructions.hpp"

#include <string>
#include <vector>

namespace schutte {

bool FillPolicy::Source::lower_wins(int, int) {
  if (kind_ == Kind::kLowBeatsHigh) return true;
  // Top bit of the raw engine output; std distributions are not portable.
  return (rng_() >> 63) != 0;
}

TournamentSet pad_set(const TournamentSet& tau, int m_target, FillPolicy fill) {
  if (m_target < tau.size()) {
    throw ConstructionError("TargetTooSmall: cannot pad a " +
                            std::to_string(tau.size()) + "-set down to " +
                            std::to_string(m_target));
  }
  std::vector<Tournament> members = tau.members();
  FillPolicy::Source src(fill);
  while (static_cast<int>(members.size()) < m_target) {
    members.push_back(Tournament::from_relation(
        tau.order(), [&](int i, int j) { return src.lower_wins(i, j); }));
  }
  return TournamentSet(std::move(members));
}

TournamentSet rotational_set(int k, FillPolicy fill) {
  if (k < 0) throw ConstructionError("rotational_set needs k >= 0");
  const int n = k + 1;
  FillPolicy::Source src(fill);
  std::vector<Tournament> members;
  members.reserve(n);
  for (int hub = 0; hub < n; ++hub) {
    members.push_back(Tournament::from_relation(n, [&](int i, int j) {
      if (i == hub) return true;
      if (j == hub) return false;
      return src.lower_wins(i, j);
    }));
  }
  return TournamentSet(std::move(members));
}

TournamentSet combine(const TournamentSet& tau1, const TournamentSet& tau2,
                      FillPolicy fill) {
  const int n1 = tau1.order();
  const int n2 = tau2.order();
  FillPolicy::Source src(fill);
  std::vector<Tournament> members;
  members.reserve(tau1.size() + tau2.size());

  for (const auto& t1 : tau1.members()) {
    members.push_back(Tournament::from_relation(n1 + n2, [&](int i, int j) {
      if (j < n1) return t1.beats(i, j);  // both in V1
      if (i < n1) return true;            // V1 beats V2
      return src.lower_wins(i, j);        // free V2-internal edge
    }));
  }
  for (const auto& t2 : tau2.members()) {
    members.push_back(Tournament::from_relation(n1 + n2, [&](int i, int j) {
      if (i >= n1) return t2.beats(i - n1, j - n1);  // both in V2
      if (j >= n1) return false;                     // V2 beats V1
      return src.lower_wins(i, j);                   // free V1-internal edge
    }));
  }
  return TournamentSet(std::move(members));
}

}  // namespace schutte
