// Copyright 2026 The ceei Authors
//
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ceei/errors.hpp"
#include "ceei/market.hpp"

namespace ceei::detail {

// (buyers + 1)^items, saturating at UINT64_MAX.
inline std::uint64_t assignment_states(int buyers, int items) {
  std::uint64_t states = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(buyers) + 1;
  for (int j = 0; j < items; ++j) {
    if (states > UINT64_MAX / base) return UINT64_MAX;
    states *= base;
  }
  return states;
}

inline void require_state_cap(int buyers, int items, const SearchLimits& limits) {
  const std::uint64_t states = assignment_states(buyers, items);
  if (states > limits.max_states) {
    throw LimitExceeded("assignment search needs (n+1)^m = " +
                        (states == UINT64_MAX ? std::string("overflow") : std::to_string(states)) +
                        " states, cap is " + std::to_string(limits.max_states));
  }
}

inline void require_bundle_cap(int items, const SearchLimits& limits) {
  if (items > limits.max_bundle_items) {
    throw LimitExceeded("bundle enumeration over " + std::to_string(items) +
                        " items exceeds cap of " + std::to_string(limits.max_bundle_items));
  }
}

// Owner vector (buyer index, or `buyers` for unsold) to bundles.
inline Allocation allocation_from_owners(int buyers, const std::vector<int>& owner) {
  Allocation x{std::vector<Bundle>(buyers)};
  for (int j = 0; j < static_cast<int>(owner.size()); ++j) {
    if (owner[j] < buyers) x[owner[j]].push_back(j);
  }
  return x;
}

inline bool contains_all(const Bundle& big, const Bundle& small) {
  // Both ascending.
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Bundle sorted(Bundle b) {
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace ceei::detail

namespace ceei::detail {

// Depth-first walk over item -> {buyer 0..n-1, then unsold when priced
// zero}, item 0 most significant. Prefixes where some buyer already spends
// more than 1 are cut, which never skips a leaf that could satisfy the
// budget condition. Returns the first complete assignment accepted by
// `accept`, so the witness is the first one in enumeration order.
template <ExactField Scalar, class Accept>
std::optional<Allocation> first_budget_feasible_assignment(int buyers,
                                                          const VectorX<Scalar>& prices,
                                                          Accept&& accept) {
  const int items = static_cast<int>(prices.size());
  const Scalar zero(0), one(1);
  std::vector<int> owner(items, buyers);
  std::vector<Scalar> spend(buyers, zero);
  std::optional<Allocation> found;

  auto visit = [&](auto&& self, int j) -> bool {
    if (j == items) {
      for (const Scalar& s : spend) {
        if (s != one) return false;
      }
      Allocation x = allocation_from_owners(buyers, owner);
      if (!accept(x)) return false;
      found = std::move(x);
      return true;
    }
    for (int o = 0; o <= buyers; ++o) {
      if (o == buyers) {
        if (prices(j) != zero) break;
      } else {
        spend[o] += prices(j);
        if (one < spend[o]) {
          spend[o] -= prices(j);
          continue;
        }
      }
      owner[j] = o;
      const bool done = self(self, j + 1);
      if (o < buyers) spend[o] -= prices(j);
      if (done) return true;
    }
    owner[j] = buyers;
    return false;
  };
  visit(visit, 0);
  return found;
}

}  // namespace ceei::detail
