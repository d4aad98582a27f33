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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceei/market.hpp"
#include "ceei/report.hpp"
#include "ceei/utility.hpp"

namespace ceei {

template <ExactField Scalar>
Scalar price_of(const VectorX<Scalar>& prices, const Bundle& bundle) {
  Scalar total(0);
  for (int j : bundle) total += prices(j);
  return total;
}

// Throws std::invalid_argument unless `prices` has one nonnegative entry per item.
template <ExactField Scalar>
void require_valid_prices(const BasicMarket<Scalar>& market, const VectorX<Scalar>& prices) {
  if (prices.size() != market.items()) {
    throw std::invalid_argument("price vector has " + std::to_string(prices.size()) +
                                " entries, market has " + std::to_string(market.items()) +
                                " items");
  }
  for (int j = 0; j < market.items(); ++j) {
    if (prices(j) < Scalar(0)) {
      throw std::invalid_argument("negative price for item " + std::to_string(j + 1));
    }
  }
}

template <ExactField Scalar>
std::optional<Violation<Scalar>> check_feasibility(const BasicMarket<Scalar>& market,
                                                   const Allocation& x) {
  using Kind = InfeasibleAllocation::Kind;
  if (x.buyers() != market.buyers()) return InfeasibleAllocation{Kind::kWrongBuyerCount};
  std::vector<char> seen(market.items(), 0);
  for (int i = 0; i < x.buyers(); ++i) {
    for (int j : x[i]) {
      if (j < 0 || j >= market.items()) return InfeasibleAllocation{Kind::kItemOutOfRange, i, j};
      if (seen[j]) return InfeasibleAllocation{Kind::kItemRepeated, i, j};
      seen[j] = 1;
    }
  }
  return std::nullopt;
}

inline bool is_feasible_for(int buyers, int items, const Allocation& x) {
  if (x.buyers() != buyers) return false;
  std::vector<char> seen(items, 0);
  for (const Bundle& b : x.bundles) {
    for (int j : b) {
      if (j < 0 || j >= items || seen[j]) return false;
      seen[j] = 1;
    }
  }
  return true;
}

// Every item is allocated or priced zero. Precondition: x feasible.
template <ExactField Scalar>
std::optional<Violation<Scalar>> check_clearing(const BasicMarket<Scalar>& market,
                                                const Allocation& x,
                                                const VectorX<Scalar>& prices) {
  std::vector<char> sold(market.items(), 0);
  for (const Bundle& b : x.bundles) {
    for (int j : b) sold[j] = 1;
  }
  for (int j = 0; j < market.items(); ++j) {
    if (!sold[j] && prices(j) != Scalar(0)) return UnsoldPricedItem{j};
  }
  return std::nullopt;
}

// Every buyer spends exactly its unit budget. Precondition: x feasible.
template <ExactField Scalar>
std::optional<Violation<Scalar>> check_budgets(const BasicMarket<Scalar>& market,
                                               const Allocation& x,
                                               const VectorX<Scalar>& prices) {
  for (int i = 0; i < market.buyers(); ++i) {
    Scalar spend = price_of(prices, x[i]);
    if (spend != Scalar(1)) return BudgetNotExhausted<Scalar>{i, spend};
  }
  return std::nullopt;
}

// Sum of utilities under the market's class. Throws on an infeasible allocation.
template <ExactField Scalar>
Scalar social_welfare(const BasicMarket<Scalar>& market, const Allocation& x) {
  if (check_feasibility(market, x)) {
    throw std::invalid_argument("social welfare of an infeasible allocation");
  }
  Scalar total(0);
  for (int i = 0; i < market.buyers(); ++i) total += utility(market, i, x[i]);
  return total;
}

// No buyer strictly prefers a bundle it could afford from someone else.
template <ExactField Scalar>
bool is_envy_free(const BasicMarket<Scalar>& market, const Allocation& x,
                  const VectorX<Scalar>& prices) {
  for (int i = 0; i < market.buyers(); ++i) {
    const Scalar own = utility(market, i, x[i]);
    for (int k = 0; k < market.buyers(); ++k) {
      if (k == i || Scalar(1) < price_of(prices, x[k])) continue;
      if (own < utility(market, i, x[k])) return false;
    }
  }
  return true;
}

}  // namespace ceei
