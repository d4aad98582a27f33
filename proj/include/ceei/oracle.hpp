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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ceei/errors.hpp"
#include "ceei/lp.hpp"
#include "ceei/market.hpp"

// Brute-force ground truth. Nothing here calls into the leontief or additive
// solvers: enumeration, utilities and LP assembly are all local, and only
// the exact LP solver is shared.
namespace ceei::oracle {

// Every assignment of items to a buyer or to "unsold", exactly once. The
// order is lexicographic in (owner of item 1, owner of item 2, ...) with
// buyers ascending and unsold last.
class AllocationStream {
 public:
  AllocationStream(int buyers, int items, const SearchLimits& limits = {})
      : buyers_(buyers), items_(items), owner_(items, 0) {
    if (buyers < 1 || items < 0) throw std::invalid_argument("bad stream dimensions");
    total_ = 1;
    for (int j = 0; j < items; ++j) {
      if (total_ > limits.max_states / (static_cast<std::uint64_t>(buyers) + 1)) {
        throw LimitExceeded("allocation enumeration exceeds the state cap");
      }
      total_ *= static_cast<std::uint64_t>(buyers) + 1;
    }
    if (total_ > limits.max_states) throw LimitExceeded("allocation enumeration exceeds the state cap");
  }

  std::uint64_t size() const { return total_; }

  std::optional<Allocation> next() {
    if (emitted_ == total_) return std::nullopt;
    if (emitted_ > 0) {
      int j = items_ - 1;
      while (owner_[j] == buyers_) owner_[j--] = 0;
      ++owner_[j];
    }
    ++emitted_;
    Allocation x{std::vector<Bundle>(buyers_)};
    for (int j = 0; j < items_; ++j) {
      if (owner_[j] < buyers_) x[owner_[j]].push_back(j);
    }
    return x;
  }

 private:
  int buyers_;
  int items_;
  std::vector<int> owner_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

template <ExactField Scalar>
AllocationStream enumerate_allocations(const BasicMarket<Scalar>& market,
                                       const SearchLimits& limits = {}) {
  return AllocationStream(market.buyers(), market.items(), limits);
}

namespace internal {

// Utility of the bundle with indicator `held`.
template <ExactField Scalar>
Scalar value_of(const BasicMarket<Scalar>& market, int buyer, const std::vector<char>& held) {
  const Scalar zero(0);
  Scalar acc(0);
  if (market.is_additive()) {
    for (int j = 0; j < market.items(); ++j) {
      if (held[j]) acc += market.value(buyer, j);
    }
    return acc;
  }
  // Leontief: 1 / (largest demanded value) when every demanded item is held.
  for (int j = 0; j < market.items(); ++j) {
    if (zero < market.value(buyer, j)) {
      if (!held[j]) return zero;
      if (acc < market.value(buyer, j)) acc = market.value(buyer, j);
    }
  }
  return Scalar(1) / acc;
}

template <ExactField Scalar>
std::vector<std::vector<char>> indicators(const BasicMarket<Scalar>& market, const Allocation& x) {
  std::vector<std::vector<char>> held(market.buyers(), std::vector<char>(market.items(), 0));
  for (int i = 0; i < market.buyers(); ++i) {
    for (int j : x[i]) held[i][j] = 1;
  }
  return held;
}

// Sign-restricted prices p_0..p_{m-1}, slack eps = p_m. Returns prices iff
// the strict system holds with positive slack.
template <ExactField Scalar>
std::optional<VectorX<Scalar>> supporting_prices(const BasicMarket<Scalar>& market,
                                                 const Allocation& x) {
  const int m = market.items();
  const int n = market.buyers();
  for (int i = 0; i < n; ++i) {
    if (x[i].empty()) return std::nullopt;
  }
  const auto held = indicators(market, x);
  lp::BasicLPProblem<Scalar> problem;
  for (int j = 0; j <= m; ++j) problem.add_variable(true);
  const int eps = m;
  const Scalar one(1), minus_one(-1), zero(0);

  for (int j = 0; j < m; ++j) {
    bool sold = false;
    for (int i = 0; i < n; ++i) sold = sold || held[i][j];
    if (!sold) problem.constraints.push_back({{{j, one}}, lp::Relation::kLessEqual, zero});
  }
  for (int i = 0; i < n; ++i) {
    std::map<int, Scalar> up, down;
    for (int j = 0; j < m; ++j) {
      if (held[i][j]) {
        up[j] = one;
        down[j] = minus_one;
      }
    }
    problem.constraints.push_back({up, lp::Relation::kLessEqual, one});
    problem.constraints.push_back({down, lp::Relation::kLessEqual, minus_one});

    const Scalar current = value_of(market, i, held[i]);
    if (market.is_leontief()) {
      std::map<int, Scalar> row{{eps, one}};
      bool missing = false;
      for (int j = 0; j < m; ++j) {
        if (zero < market.value(i, j)) {
          row[j] = minus_one;
          missing = missing || !held[i][j];
        }
      }
      if (missing) problem.constraints.push_back({row, lp::Relation::kLessEqual, minus_one});
    } else {
      std::vector<char> bundle(m, 0);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        for (int j = 0; j < m; ++j) bundle[j] = (mask >> j) & 1;
        if (!(current < value_of(market, i, bundle))) continue;
        std::map<int, Scalar> row{{eps, one}};
        for (int j = 0; j < m; ++j) {
          if (bundle[j]) row[j] = minus_one;
        }
        problem.constraints.push_back({row, lp::Relation::kLessEqual, minus_one});
      }
    }
  }
  problem.constraints.push_back({{{eps, one}}, lp::Relation::kLessEqual, one});
  problem.objective = {{eps, one}};
  auto result = lp::solve_lp(problem);
  if (result.status != lp::Status::kOptimal || !(zero < result.value)) return std::nullopt;
  return VectorX<Scalar>(result.point.head(m));
}

template <ExactField Scalar>
void require_caps(const BasicMarket<Scalar>& market, const SearchLimits& limits) {
  if (market.is_additive() && market.items() > limits.max_bundle_items) {
    throw LimitExceeded("oracle bundle enumeration exceeds the item cap");
  }
}

}  // namespace internal

template <ExactField Scalar>
std::optional<BasicEquilibrium<Scalar>> equilibrium_exists_bruteforce(
    const BasicMarket<Scalar>& market, const SearchLimits& limits = {}) {
  internal::require_caps(market, limits);
  auto stream = enumerate_allocations(market, limits);
  while (auto x = stream.next()) {
    if (auto p = internal::supporting_prices(market, *x)) {
      return BasicEquilibrium<Scalar>{std::move(*x), std::move(*p)};
    }
  }
  return std::nullopt;
}

template <ExactField Scalar>
std::optional<BasicWelfareEquilibrium<Scalar>> max_welfare_equilibrium_bruteforce(
    const BasicMarket<Scalar>& market, const SearchLimits& limits = {}) {
  internal::require_caps(market, limits);
  std::optional<BasicWelfareEquilibrium<Scalar>> best;
  auto stream = enumerate_allocations(market, limits);
  while (auto x = stream.next()) {
    const auto held = internal::indicators(market, *x);
    Scalar sw(0);
    for (int i = 0; i < market.buyers(); ++i) sw += internal::value_of(market, i, held[i]);
    if (best && !(best->welfare < sw)) continue;
    if (auto p = internal::supporting_prices(market, *x)) {
      best = BasicWelfareEquilibrium<Scalar>{std::move(*x), std::move(*p), std::move(sw)};
    }
  }
  return best;
}

// Welfare maximum over all allocations, equilibrium or not.
template <ExactField Scalar>
Scalar max_welfare_any_allocation(const BasicMarket<Scalar>& market,
                                  const SearchLimits& limits = {}) {
  Scalar best(0);
  auto stream = enumerate_allocations(market, limits);
  while (auto x = stream.next()) {
    const auto held = internal::indicators(market, *x);
    Scalar sw(0);
    for (int i = 0; i < market.buyers(); ++i) sw += internal::value_of(market, i, held[i]);
    if (best < sw) best = sw;
  }
  return best;
}

}  // namespace ceei::oracle
