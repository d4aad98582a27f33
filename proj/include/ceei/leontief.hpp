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
#include <numeric>
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

// Perfect complements. A Leontief buyer over indivisible goods only cares
// whether it receives its whole demand set, so every question about buyer
// optimality reduces to "got D_i, or p(D_i) > 1".
namespace ceei::leontief {

struct DemandSet {
  int buyer;
  Bundle items;
  friend bool operator==(const DemandSet&, const DemandSet&) = default;
};

template <ExactField Scalar>
void require_leontief(const BasicMarket<Scalar>& market) {
  if (!market.is_leontief()) throw std::invalid_argument("market is not a leontief market");
}

template <ExactField Scalar>
std::vector<DemandSet> demand_sets(const BasicMarket<Scalar>& market) {
  require_leontief(market);
  std::vector<DemandSet> sets;
  sets.reserve(market.buyers());
  for (int i = 0; i < market.buyers(); ++i) sets.push_back({i, demand_set(market, i)});
  return sets;
}

// O(nm): each (buyer, item) pair is inspected a constant number of times.
template <ExactField Scalar>
BasicEquilibriumReport<Scalar> verify_equilibrium(const BasicMarket<Scalar>& market,
                                                  const Allocation& x,
                                                  const VectorX<Scalar>& prices) {
  require_leontief(market);
  require_valid_prices(market, prices);
  if (auto v = check_feasibility(market, x)) return {std::move(v)};
  if (auto v = check_clearing(market, x, prices)) return {std::move(v)};
  if (auto v = check_budgets(market, x, prices)) return {std::move(v)};

  std::vector<int> owner(market.items(), -1);
  for (int i = 0; i < market.buyers(); ++i) {
    for (int j : x[i]) owner[j] = i;
  }
  const Scalar zero(0), one(1);
  for (int i = 0; i < market.buyers(); ++i) {
    bool covered = true;
    Scalar cost(0);
    for (int j = 0; j < market.items(); ++j) {
      if (!(zero < market.value(i, j))) continue;
      cost += prices(j);
      covered = covered && owner[j] == i;
    }
    if (!covered && !(one < cost)) return {SuboptimalBundle{i, demand_set(market, i)}};
  }
  return {};
}

// Equilibrium prices supporting `x`, or nullopt. Unsold items are pinned to
// zero, each bundle costs exactly 1, and every buyer missing part of its
// demand set must face p(D_i) >= 1 + eps with eps maximized.
template <ExactField Scalar>
std::optional<VectorX<Scalar>> prices_for_allocation(const BasicMarket<Scalar>& market,
                                                     const Allocation& x) {
  require_leontief(market);
  if (check_feasibility(market, x)) return std::nullopt;
  for (const Bundle& b : x.bundles) {
    if (b.empty()) return std::nullopt;
  }
  const int m = market.items();
  lp::BasicLPProblem<Scalar> problem;
  for (int j = 0; j < m; ++j) problem.add_variable();
  const int eps = problem.add_variable();

  std::vector<int> owner(m, -1);
  for (int i = 0; i < market.buyers(); ++i) {
    for (int j : x[i]) owner[j] = i;
  }
  for (int j = 0; j < m; ++j) {
    if (owner[j] < 0) problem.add_equal({{j, Scalar(1)}}, Scalar(0));
  }
  const Scalar zero(0);
  for (int i = 0; i < market.buyers(); ++i) {
    std::map<int, Scalar> spend;
    for (int j : x[i]) spend[j] = Scalar(1);
    problem.add_equal(std::move(spend), Scalar(1));

    std::map<int, Scalar> demand;
    bool covered = true;
    for (int j = 0; j < m; ++j) {
      if (!(zero < market.value(i, j))) continue;
      demand[j] = Scalar(1);
      covered = covered && owner[j] == i;
    }
    if (!covered) {
      demand[eps] = Scalar(-1);
      problem.add_greater_equal(std::move(demand), Scalar(1));
    }
  }
  auto point = lp::solve_strict(std::move(problem), eps);
  if (!point) return std::nullopt;
  return VectorX<Scalar>(point->head(m));
}

// First allocation (item-major order, unsold last and only for zero-priced
// items) that forms an equilibrium at `prices`; exhaustive.
template <ExactField Scalar>
std::optional<Allocation> allocation_for_prices(const BasicMarket<Scalar>& market,
                                                const VectorX<Scalar>& prices,
                                                const SearchLimits& limits = {}) {
  require_leontief(market);
  require_valid_prices(market, prices);
  if (market.items() > limits.max_search_items) {
    throw LimitExceeded("allocation search over " + std::to_string(market.items()) +
                        " items exceeds cap of " + std::to_string(limits.max_search_items));
  }
  ceei::detail::require_state_cap(market.buyers(), market.items(), limits);
  return ceei::detail::first_budget_feasible_assignment(
      market.buyers(), prices, [&](const Allocation& x) {
        return verify_equilibrium(market, x, prices).is_equilibrium();
      });
}

// Why no equilibrium exists, when the market fails the characterization:
// at least as many items as buyers, and no two buyers demanding the same
// single item.
struct Obstruction {
  enum class Kind { kTooFewItems, kIdenticalSingletonDemands };
  Kind kind;
  int first_buyer = -1;
  int second_buyer = -1;

  std::string describe() const {
    if (kind == Kind::kTooFewItems) return "m < n";
    return "buyers " + std::to_string(first_buyer + 1) + " and " +
           std::to_string(second_buyer + 1) + " have identical singleton demand sets";
  }
};

namespace impl {

inline std::optional<Obstruction> duplicate_singletons(const std::vector<Bundle>& demands,
                                                       const std::vector<int>& buyers) {
  std::map<int, int> holder;
  for (int i : buyers) {
    if (demands[i].size() != 1) continue;
    auto [it, inserted] = holder.emplace(demands[i].front(), i);
    if (!inserted) {
      return Obstruction{Obstruction::Kind::kIdenticalSingletonDemands, it->second, i};
    }
  }
  return std::nullopt;
}

template <ExactField Scalar>
std::vector<Bundle> all_demands(const BasicMarket<Scalar>& market) {
  std::vector<Bundle> demands;
  demands.reserve(market.buyers());
  for (int i = 0; i < market.buyers(); ++i) demands.push_back(demand_set(market, i));
  return demands;
}

struct GreedyResult {
  Allocation x;
  int last = -1;  // buyer that received the leftovers, -1 if none allocated
};

// Buyers in ascending |D_i| (ties by index) each take the least-index free
// item of their demand set, else the least-index free item; the last buyer
// in that order also takes every item still free. `allocated` holds items
// that are already gone.
inline GreedyResult greedy_allocation(int items, const std::vector<Bundle>& demands,
                                      std::vector<int> buyers, std::vector<char> allocated) {
  GreedyResult result{Allocation(std::vector<Bundle>(demands.size())), -1};
  std::stable_sort(buyers.begin(), buyers.end(), [&](int a, int b) {
    return demands[a].size() < demands[b].size();
  });
  for (int i : buyers) {
    int pick = -1;
    for (int j : demands[i]) {
      if (!allocated[j]) {
        pick = j;
        break;
      }
    }
    if (pick < 0) {
      for (int j = 0; j < items; ++j) {
        if (!allocated[j]) {
          pick = j;
          break;
        }
      }
    }
    if (pick < 0) throw std::logic_error("greedy allocation ran out of items");
    allocated[pick] = 1;
    result.x[i].push_back(pick);
  }
  if (!buyers.empty()) {
    result.last = buyers.back();
    for (int j = 0; j < items; ++j) {
      if (!allocated[j]) result.x[result.last].push_back(j);
    }
    std::sort(result.x[result.last].begin(), result.x[result.last].end());
  }
  return result;
}

template <ExactField Scalar>
void price_uniformly(const Bundle& bundle, VectorX<Scalar>& prices) {
  const Scalar each = Scalar(1) / Scalar(static_cast<int>(bundle.size()));
  for (int j : bundle) prices(j) = each;
}

}  // namespace impl

template <ExactField Scalar>
std::optional<Obstruction> equilibrium_obstruction(const BasicMarket<Scalar>& market) {
  require_leontief(market);
  if (market.items() < market.buyers()) return Obstruction{Obstruction::Kind::kTooFewItems};
  std::vector<int> everyone(market.buyers());
  std::iota(everyone.begin(), everyone.end(), 0);
  return impl::duplicate_singletons(impl::all_demands(market), everyone);
}

// Constructive equilibrium; nullopt exactly when equilibrium_obstruction
// reports one. Every bundle is priced uniformly to total 1. This is enough
// for the leftover buyer too: every other bundle is a single item priced 1,
// so a missing demanded item alone exhausts the budget.
template <ExactField Scalar>
std::optional<BasicEquilibrium<Scalar>> compute_equilibrium(const BasicMarket<Scalar>& market) {
  if (equilibrium_obstruction(market)) return std::nullopt;
  const auto demands = impl::all_demands(market);
  std::vector<int> everyone(market.buyers());
  std::iota(everyone.begin(), everyone.end(), 0);
  auto greedy = impl::greedy_allocation(market.items(), demands, everyone,
                                          std::vector<char>(market.items(), 0));
  VectorX<Scalar> prices = VectorX<Scalar>::Constant(market.items(), Scalar(0));
  for (const Bundle& b : greedy.x.bundles) impl::price_uniformly(b, prices);
  return BasicEquilibrium<Scalar>{std::move(greedy.x), std::move(prices)};
}

// Price of the items left for the leftover buyer: 1/((m+1)(d_max+1)), below
// 1/|D_k| for every buyer k and positive.
template <ExactField Scalar>
Scalar leftover_epsilon(const BasicMarket<Scalar>& market) {
  std::size_t d_max = 0;
  for (int i = 0; i < market.buyers(); ++i) d_max = std::max(d_max, demand_set(market, i).size());
  return Scalar(1) / Scalar((market.items() + 1) * (static_cast<int>(d_max) + 1));
}

// Runs the greedy allocation over every buyer except `excluded_buyer`, with
// `preallocated` already gone. The result leaves the excluded buyer's bundle
// empty and the preallocated items at price zero for the caller to fill in.
// The leftover buyer pays 1 - eps for its demanded items and eps for the
// rest, so it cannot buy a missing demanded item held cheaply elsewhere.
// Throws std::invalid_argument unless m - |preallocated| >= n - 1; nullopt
// when two remaining buyers demand the same single item.
template <ExactField Scalar>
std::optional<BasicEquilibrium<Scalar>> compute_equilibrium_prealloc(
    const BasicMarket<Scalar>& market, int excluded_buyer, const Bundle& preallocated) {
  require_leontief(market);
  const int n = market.buyers();
  const int m = market.items();
  if (excluded_buyer < 0 || excluded_buyer >= n) {
    throw std::invalid_argument("excluded buyer out of range");
  }
  std::vector<char> allocated(m, 0);
  for (int j : preallocated) {
    if (j < 0 || j >= m) throw std::invalid_argument("preallocated item out of range");
    if (allocated[j]) throw std::invalid_argument("preallocated item repeated");
    allocated[j] = 1;
  }
  if (m - static_cast<int>(preallocated.size()) < n - 1) {
    throw std::invalid_argument("fewer free items than remaining buyers");
  }
  std::vector<int> remaining;
  for (int i = 0; i < n; ++i) {
    if (i != excluded_buyer) remaining.push_back(i);
  }
  const auto demands = impl::all_demands(market);
  if (impl::duplicate_singletons(demands, remaining)) return std::nullopt;

  auto greedy = impl::greedy_allocation(m, demands, remaining, std::move(allocated));
  VectorX<Scalar> prices = VectorX<Scalar>::Constant(m, Scalar(0));
  for (int i : remaining) {
    if (i != greedy.last) impl::price_uniformly(greedy.x[i], prices);
  }
  if (greedy.last >= 0) {
    const Bundle& bundle = greedy.x[greedy.last];
    Bundle wanted, unwanted;
    for (int j : bundle) {
      (std::binary_search(demands[greedy.last].begin(), demands[greedy.last].end(), j) ? wanted
                                                                                        : unwanted)
          .push_back(j);
    }
    if (wanted.empty() || unwanted.empty()) {
      impl::price_uniformly(bundle, prices);
    } else {
      const Scalar eps = leftover_epsilon(market);
      const Scalar hi = (Scalar(1) - eps) / Scalar(static_cast<int>(wanted.size()));
      const Scalar lo = eps / Scalar(static_cast<int>(unwanted.size()));
      for (int j : wanted) prices(j) = hi;
      for (int j : unwanted) prices(j) = lo;
    }
  }
  return BasicEquilibrium<Scalar>{std::move(greedy.x), std::move(prices)};
}

// Buyers that can hold their full demand set in some equilibrium as far as
// the two necessary conditions go: nobody else's demand set lies inside
// theirs, and the rest of the items still cover the other n - 1 buyers.
template <ExactField Scalar>
std::vector<int> welfare_eligible_buyers(const BasicMarket<Scalar>& market) {
  require_leontief(market);
  const auto demands = impl::all_demands(market);
  const int n = market.buyers();
  std::vector<int> eligible;
  for (int k = 0; k < n; ++k) {
    bool contains_other = false;
    for (int i = 0; i < n && !contains_other; ++i) {
      contains_other = i != k && ceei::detail::contains_all(demands[k], demands[i]);
    }
    const bool enough_left = market.items() - static_cast<int>(demands[k].size()) >= n - 1;
    if (!contains_other && enough_left) eligible.push_back(k);
  }
  return eligible;
}

// Equilibrium with welfare at least 1/n of the best equilibrium welfare.
// The eligible buyer with the highest utility for its demand set (least
// index on ties) receives it at 1/|D_k| per item; the rest is completed by
// compute_equilibrium_prealloc. Falls back to compute_equilibrium when no
// buyer is eligible.
template <ExactField Scalar>
std::optional<BasicEquilibrium<Scalar>> compute_equilibrium_apx_welfare(
    const BasicMarket<Scalar>& market) {
  if (equilibrium_obstruction(market)) return std::nullopt;
  const auto eligible = welfare_eligible_buyers(market);
  if (eligible.empty()) return compute_equilibrium(market);

  int best = eligible.front();
  Scalar best_utility = ceei::leontief::utility(market, best, demand_set(market, best));
  for (int k : eligible) {
    Scalar u = ceei::leontief::utility(market, k, demand_set(market, k));
    if (best_utility < u) {
      best = k;
      best_utility = std::move(u);
    }
  }
  const Bundle demand = demand_set(market, best);
  auto rest = compute_equilibrium_prealloc(market, best, demand);
  if (!rest) return std::nullopt;
  rest->allocation[best] = demand;
  impl::price_uniformly(demand, rest->prices);
  return rest;
}

// Maximum-welfare equilibrium by exhaustive branch and bound over every
// assignment of items to buyers or unsold. A prefix is cut when the buyers
// still lacking an item outnumber the remaining items, or when the welfare
// of every still-attainable demand set cannot beat the incumbent. Only
// strict improvements replace the incumbent, so the result is the first
// maximizer in enumeration order.
template <ExactField Scalar>
std::optional<BasicWelfareEquilibrium<Scalar>> optimal_welfare_equilibrium(
    const BasicMarket<Scalar>& market, const SearchLimits& limits = {}) {
  require_leontief(market);
  const int n = market.buyers();
  const int m = market.items();
  if (m > limits.max_search_items) {
    throw LimitExceeded("welfare search over " + std::to_string(m) + " items exceeds cap of " +
                        std::to_string(limits.max_search_items));
  }
  ceei::detail::require_state_cap(n, m, limits);

  const auto demands = impl::all_demands(market);
  std::vector<Scalar> full_utility;
  for (int i = 0; i < n; ++i) full_utility.push_back(ceei::leontief::utility(market, i, demands[i]));
  std::vector<std::vector<int>> demanders(m);
  for (int i = 0; i < n; ++i) {
    for (int j : demands[i]) demanders[j].push_back(i);
  }

  std::vector<int> owner(m, n);
  std::vector<int> blocked(n, 0);      // demanded items given elsewhere
  std::vector<int> bundle_size(n, 0);
  int empty_buyers = n;
  Scalar attainable(0);               // sum of full_utility over unblocked buyers
  for (const Scalar& u : full_utility) attainable += u;
  std::optional<BasicWelfareEquilibrium<Scalar>> best;

  auto assign = [&](int j, int o, int delta) {
    for (int i : demanders[j]) {
      if (i == o) continue;
      if (delta > 0 && blocked[i]++ == 0) attainable -= full_utility[i];
      if (delta < 0 && --blocked[i] == 0) attainable += full_utility[i];
    }
    if (o < n) {
      if (delta > 0 && bundle_size[o]++ == 0) --empty_buyers;
      if (delta < 0 && --bundle_size[o] == 0) ++empty_buyers;
    }
  };

  auto visit = [&](auto&& self, int j) -> void {
    if (empty_buyers > m - j) return;
    if (best && !(best->welfare < attainable)) return;
    if (j == m) {
      Allocation x = ceei::detail::allocation_from_owners(n, owner);
      auto prices = prices_for_allocation(market, x);
      if (prices) {
        Scalar sw = social_welfare(market, x);
        best = BasicWelfareEquilibrium<Scalar>{std::move(x), std::move(*prices), std::move(sw)};
      }
      return;
    }
    for (int o = 0; o <= n; ++o) {
      owner[j] = o;
      assign(j, o, +1);
      self(self, j + 1);
      assign(j, o, -1);
    }
    owner[j] = n;
  };
  visit(visit, 0);
  return best;
}

}  // namespace ceei::leontief
