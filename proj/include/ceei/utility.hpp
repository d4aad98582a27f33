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

#include <stdexcept>
#include <vector>

#include "ceei/market.hpp"

namespace ceei {

namespace leontief {

// Items the buyer values strictly positively, ascending.
template <ExactField Scalar>
Bundle demand_set(const BasicMarket<Scalar>& market, int buyer) {
  Bundle items;
  const Scalar zero(0);
  for (int j = 0; j < market.items(); ++j) {
    if (zero < market.value(buyer, j)) items.push_back(j);
  }
  return items;
}

// min over the demand set of 1/v when the bundle covers the demand set, else 0.
template <ExactField Scalar>
Scalar utility(const BasicMarket<Scalar>& market, int buyer, const Bundle& bundle) {
  std::vector<char> held(market.items(), 0);
  for (int j : bundle) {
    if (j >= 0 && j < market.items()) held[j] = 1;
  }
  Scalar best(0);
  bool first = true;
  const Scalar zero(0);
  for (int j = 0; j < market.items(); ++j) {
    if (!(zero < market.value(buyer, j))) continue;
    if (!held[j]) return Scalar(0);
    Scalar u = Scalar(1) / market.value(buyer, j);
    if (first || u < best) best = u;
    first = false;
  }
  return best;
}

}  // namespace leontief

namespace additive {

template <ExactField Scalar>
Scalar utility(const BasicMarket<Scalar>& market, int buyer, const Bundle& bundle) {
  Scalar total(0);
  for (int j : bundle) total += market.value(buyer, j);
  return total;
}

}  // namespace additive

// Utility under the market's own valuation class.
template <ExactField Scalar>
Scalar utility(const BasicMarket<Scalar>& market, int buyer, const Bundle& bundle) {
  return market.is_leontief() ? leontief::utility(market, buyer, bundle)
                              : additive::utility(market, buyer, bundle);
}

}  // namespace ceei
