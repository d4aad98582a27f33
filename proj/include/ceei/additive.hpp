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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceei/core.hpp"
#include "ceei/lp.hpp"
#include "ceei/market.hpp"
#include "ceei/report.hpp"
#include "ceei/search.hpp"
#include "ceei/utility.hpp"

// Perfect substitutes. Buyer optimality is a knapsack question over all
// bundles, so everything here is exhaustive and capped.
namespace ceei::additive {

template <ExactField Scalar>
void require_additive(const BasicMarket<Scalar>& market) {
  if (!market.is_additive()) throw std::invalid_argument("market is not an additive market");
}

template <ExactField Scalar>
struct BasicBestResponse {
  Bundle bundle;
  Scalar value;
};

using BestResponse = BasicBestResponse<Rational>;

// A utility-maximizing bundle with p(bundle) <= 1. Among maximizers the
// smallest bundle wins, then the lexicographically least. Items the buyer
// values at zero never enter; valued items priced zero always do.
template <ExactField Scalar>
BasicBestResponse<Scalar> best_affordable_bundle(const BasicMarket<Scalar>& market, int buyer,
                                                 const VectorX<Scalar>& prices,
                                                 const SearchLimits& limits = {}) {
  require_additive(market);
  require_valid_prices(market, prices);
  detail::require_bundle_cap(market.items(), limits);
  if (buyer < 0 || buyer >= market.buyers()) throw std::invalid_argument("buyer out of range");

  const Scalar zero(0), one(1);
  Bundle forced, candidates;
  Scalar forced_value(0);
  for (int j = 0; j < market.items(); ++j) {
    if (!(zero < market.value(buyer, j))) continue;
    if (prices(j) == zero) {
      forced.push_back(j);
      forced_value += market.value(buyer, j);
    } else {
      candidates.push_back(j);
    }
  }

  auto with_forced = [&](const Bundle& chosen) {
    Bundle b;
    std::merge(forced.begin(), forced.end(), chosen.begin(), chosen.end(), std::back_inserter(b));
    return b;
  };

  Bundle chosen;
  Bundle best = forced;
  Scalar best_value(0);
  auto consider = [&](const Scalar& value) {
    if (best_value < value) {
      best_value = value;
      best = with_forced(chosen);
      return;
    }
    if (value < best_value) return;
    Bundle b = with_forced(chosen);
    if (b.size() < best.size() || (b.size() == best.size() && b < best)) best = std::move(b);
  };

  auto visit = [&](auto&& self, std::size_t from, const Scalar& value, const Scalar& cost) -> void {
    consider(value);
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const int j = candidates[k];
      Scalar next_cost = cost + prices(j);
      if (one < next_cost) continue;
      chosen.push_back(j);
      self(self, k + 1, value + market.value(buyer, j), next_cost);
      chosen.pop_back();
    }
  };
  visit(visit, 0, zero, zero);
  return {std::move(best), forced_value + best_value};
}

template <ExactField Scalar>
BasicEquilibriumReport<Scalar> verify_equilibrium(const BasicMarket<Scalar>& market,
                                                  const Allocation& x,
                                                  const VectorX<Scalar>& prices,
                                                  const SearchLimits& limits = {}) {
  require_additive(market);
  require_valid_prices(market, prices);
  detail::require_bundle_cap(market.items(), limits);
  if (auto v = check_feasibility(market, x)) return {std::move(v)};
  if (auto v = check_clearing(market, x, prices)) return {std::move(v)};
  if (auto v = check_budgets(market, x, prices)) return {std::move(v)};
  for (int i = 0; i < market.buyers(); ++i) {
    auto response = best_affordable_bundle(market, i, prices, limits);
    if (ceei::additive::utility(market, i, x[i]) < response.value) {
      return {SuboptimalBundle{i, std::move(response.bundle)}};
    }
  }
  return {};
}

// Calls `emit` with every inclusion-minimal bundle the buyer strictly
// prefers to a bundle worth `current`. With nonnegative prices, pricing the
// minimal ones out of reach prices out every improving bundle.
template <ExactField Scalar, class Emit>
void for_each_minimal_improvement(const BasicMarket<Scalar>& market, int buyer,
                                  const Scalar& current, Emit&& emit) {
  Bundle valued;
  const Scalar zero(0);
  for (int j = 0; j < market.items(); ++j) {
    if (zero < market.value(buyer, j)) valued.push_back(j);
  }
  Bundle chosen;
  auto visit = [&](auto&& self, std::size_t from, const Scalar& value,
                   const Scalar* smallest) -> void {
    for (std::size_t k = from; k < valued.size(); ++k) {
      const int j = valued[k];
      const Scalar& v = market.value(buyer, j);
      Scalar next = value + v;
      const Scalar* next_smallest = (smallest == nullptr || v < *smallest) ? &v : smallest;
      chosen.push_back(j);
      if (current < next) {
        // Minimal iff dropping the cheapest-valued member is no longer an
        // improvement.
        if (!(current < next - *next_smallest)) emit(chosen);
      } else {
        self(self, k + 1, next, next_smallest);
      }
      chosen.pop_back();
    }
  };
  visit(visit, 0, zero, nullptr);
}

// Equilibrium prices supporting `x`, or nullopt: budgets bind, unsold items
// are free, and every strictly improving bundle costs at least 1 + eps with
// eps maximized.
template <ExactField Scalar>
std::optional<VectorX<Scalar>> prices_for_allocation(const BasicMarket<Scalar>& market,
                                                     const Allocation& x,
                                                     const SearchLimits& limits = {}) {
  require_additive(market);
  detail::require_bundle_cap(market.items(), limits);
  if (check_feasibility(market, x)) return std::nullopt;
  for (const Bundle& b : x.bundles) {
    if (b.empty()) return std::nullopt;
  }
  const int m = market.items();
  lp::BasicLPProblem<Scalar> problem;
  for (int j = 0; j < m; ++j) problem.add_variable();
  const int eps = problem.add_variable();

  std::vector<char> sold(m, 0);
  for (const Bundle& b : x.bundles) {
    for (int j : b) sold[j] = 1;
  }
  for (int j = 0; j < m; ++j) {
    if (!sold[j]) problem.add_equal({{j, Scalar(1)}}, Scalar(0));
  }
  for (int i = 0; i < market.buyers(); ++i) {
    std::map<int, Scalar> spend;
    for (int j : x[i]) spend[j] = Scalar(1);
    problem.add_equal(std::move(spend), Scalar(1));
    for_each_minimal_improvement(market, i, ceei::additive::utility(market, i, x[i]), [&](const Bundle& b) {
      std::map<int, Scalar> terms;
      for (int j : b) terms[j] = Scalar(1);
      terms[eps] = Scalar(-1);
      problem.add_greater_equal(std::move(terms), Scalar(1));
    });
  }
  auto point = lp::solve_strict(std::move(problem), eps);
  if (!point) return std::nullopt;
  return VectorX<Scalar>(point->head(m));
}

// First allocation in item-major order (unsold last, zero-priced items
// only) forming an equilibrium at `prices`.
template <ExactField Scalar>
std::optional<Allocation> allocation_for_prices(const BasicMarket<Scalar>& market,
                                                const VectorX<Scalar>& prices,
                                                const SearchLimits& limits = {}) {
  require_additive(market);
  require_valid_prices(market, prices);
  detail::require_bundle_cap(market.items(), limits);
  detail::require_state_cap(market.buyers(), market.items(), limits);
  return detail::first_budget_feasible_assignment(
      market.buyers(), prices, [&](const Allocation& x) {
        return verify_equilibrium(market, x, prices, limits).is_equilibrium();
      });
}

// First allocation in item-major order (buyers ascending, unsold last) that
// admits equilibrium prices, together with those prices. Before the price LP
// runs, three necessary conditions discard an allocation: a positively
// valued item left unsold (it would be free), an empty bundle (budget cannot
// bind), or envy (every bundle costs exactly the shared budget).
template <ExactField Scalar>
std::optional<BasicEquilibrium<Scalar>> search_equilibrium(const BasicMarket<Scalar>& market,
                                                           const SearchLimits& limits = {}) {
  require_additive(market);
  detail::require_bundle_cap(market.items(), limits);
  detail::require_state_cap(market.buyers(), market.items(), limits);
  const int n = market.buyers();
  const int m = market.items();
  const Scalar zero(0);
  std::vector<char> may_stay_unsold(m, 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (zero < market.value(i, j)) may_stay_unsold[j] = 0;
    }
  }

  std::vector<int> owner(m, n);
  std::vector<int> bundle_size(n, 0);
  int empty_buyers = n;
  std::optional<BasicEquilibrium<Scalar>> found;

  auto envy_free = [&](const Allocation& x) {
    for (int i = 0; i < n; ++i) {
      const Scalar own = ceei::additive::utility(market, i, x[i]);
      for (int k = 0; k < n; ++k) {
        if (k != i && own < ceei::additive::utility(market, i, x[k])) return false;
      }
    }
    return true;
  };

  auto visit = [&](auto&& self, int j) -> bool {
    if (empty_buyers > m - j) return false;
    if (j == m) {
      Allocation x = detail::allocation_from_owners(n, owner);
      if (!envy_free(x)) return false;
      auto prices = prices_for_allocation(market, x, limits);
      if (!prices) return false;
      found = BasicEquilibrium<Scalar>{std::move(x), std::move(*prices)};
      return true;
    }
    for (int o = 0; o <= n; ++o) {
      if (o == n && !may_stay_unsold[j]) break;
      owner[j] = o;
      if (o < n && bundle_size[o]++ == 0) --empty_buyers;
      const bool done = self(self, j + 1);
      if (o < n && --bundle_size[o] == 0) ++empty_buyers;
      if (done) return true;
    }
    owner[j] = n;
    return false;
  };
  visit(visit, 0);
  return found;
}

}  // namespace ceei::additive
