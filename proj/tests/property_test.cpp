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

// Randomized invariant checks against independent brute force.

#include <random>

#include <gtest/gtest.h>

#include "ceei/additive.hpp"
#include "ceei/io.hpp"
#include "ceei/leontief.hpp"
#include "ceei/oracle.hpp"
#include "support/fixtures.hpp"

namespace ceei {
namespace {

constexpr unsigned kSeed = 424242;

Market random_market(std::mt19937& rng, ValuationClass c, int n, int m) {
  std::uniform_int_distribution<int> num(0, 4), den(1, 3);
  MatrixX<Rational> v(n, m);
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int j = 0; j < m; ++j) {
      v(i, j) = Rational(num(rng)) / den(rng);
      any = any || v(i, j) > 0;
    }
    if (!any) v(i, std::uniform_int_distribution<int>(0, m - 1)(rng)) = 1;
  }
  return Market(c, std::move(v));
}

// Random allocation using every item with nonempty bundles, and prices that
// spend each budget exactly; such pairs pass feasibility, clearing and
// budgets, so verification reaches the optimality checks.
std::pair<Allocation, PriceVector> random_budget_outcome(std::mt19937& rng, int n, int m) {
  std::vector<int> owner(m);
  for (int j = 0; j < m; ++j) owner[j] = j < n ? j : std::uniform_int_distribution<int>(0, n - 1)(rng);
  std::shuffle(owner.begin(), owner.end(), rng);
  Allocation x{std::vector<Bundle>(n)};
  for (int j = 0; j < m; ++j) x[owner[j]].push_back(j);
  PriceVector p(m);
  std::uniform_int_distribution<int> w(0, 3);
  for (const Bundle& b : x.bundles) {
    std::vector<int> weight;
    int total = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      weight.push_back(w(rng));
      total += weight.back();
    }
    if (total == 0) {
      weight[0] = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < b.size(); ++k) p(b[k]) = Rational(weight[k]) / total;
  }
  return {x, p};
}

// Independent optimality check: scan all 2^m bundles.
std::optional<Bundle> brute_improvement(const Market& market, int buyer, const Bundle& held,
                                        const PriceVector& p) {
  const Rational own = utility(market, buyer, held);
  for (unsigned mask = 0; mask < (1u << market.items()); ++mask) {
    Bundle b;
    Rational cost(0);
    for (int j = 0; j < market.items(); ++j) {
      if (mask >> j & 1) {
        b.push_back(j);
        cost += p(j);
      }
    }
    if (cost <= 1 && own < utility(market, buyer, b)) return b;
  }
  return std::nullopt;
}

EquilibriumReport verify(const Market& market, const Allocation& x, const PriceVector& p) {
  return market.is_leontief() ? leontief::verify_equilibrium(market, x, p)
                              : additive::verify_equilibrium(market, x, p);
}

TEST(Property, WitnessesAreSoundAndVerdictsComplete) {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> size(1, 4);
  int violations = 0, equilibria = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto c = trial % 2 ? ValuationClass::kLeontief : ValuationClass::kAdditive;
    const int n = size(rng);
    const int m = n + std::uniform_int_distribution<int>(0, 2)(rng);
    const Market market = random_market(rng, c, n, m);
    const auto [x, p] = random_budget_outcome(rng, n, m);
    const auto report = verify(market, x, p);
    if (const auto* w = report.get<SuboptimalBundle>()) {
      ++violations;
      EXPECT_LE(price_of(p, w->witness), Rational(1));
      EXPECT_LT(utility(market, w->buyer, x[w->buyer]), utility(market, w->buyer, w->witness));
      for (int i = 0; i < w->buyer; ++i) EXPECT_FALSE(brute_improvement(market, i, x[i], p));
    } else {
      ASSERT_TRUE(report.is_equilibrium()) << "trial " << trial;
      ++equilibria;
      for (int i = 0; i < n; ++i) EXPECT_FALSE(brute_improvement(market, i, x[i], p)) << trial;
    }
  }
  EXPECT_GT(violations, 50);
  EXPECT_GT(equilibria, 10);
}

TEST(Property, EquilibriaAreEnvyFree) {
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<int> size(1, 3);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = trial % 2 ? ValuationClass::kLeontief : ValuationClass::kAdditive;
    const Market market = random_market(rng, c, size(rng), size(rng) + 1);
    auto stream = oracle::enumerate_allocations(market);
    while (auto x = stream.next()) {
      auto p = oracle::internal::supporting_prices(market, *x);
      if (!p) continue;
      ++found;
      EXPECT_TRUE(verify(market, *x, *p).is_equilibrium());
      EXPECT_TRUE(is_envy_free(market, *x, *p));
    }
  }
  EXPECT_GT(found, 100);
}

TEST(Property, PricesForAllocationMatchesOracle) {
  std::mt19937 rng(kSeed + 2);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const auto c = trial % 2 ? ValuationClass::kLeontief : ValuationClass::kAdditive;
    const Market market = random_market(rng, c, size(rng), size(rng) + 1);
    auto stream = oracle::enumerate_allocations(market);
    while (auto x = stream.next()) {
      const auto fast = market.is_leontief() ? leontief::prices_for_allocation(market, *x)
                                             : additive::prices_for_allocation(market, *x);
      const auto slow = oracle::internal::supporting_prices(market, *x);
      ASSERT_EQ(fast.has_value(), slow.has_value()) << "trial " << trial;
      if (fast) EXPECT_TRUE(verify(market, *x, *fast).is_equilibrium());
    }
  }
}

TEST(Property, AllocationForPricesOutputVerifies) {
  std::mt19937 rng(kSeed + 3);
  std::uniform_int_distribution<int> size(1, 3);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = trial % 2 ? ValuationClass::kLeontief : ValuationClass::kAdditive;
    const int n = size(rng);
    const int m = n + size(rng) - 1;
    const Market market = random_market(rng, c, n, m);
    const PriceVector p = random_budget_outcome(rng, n, m).second;
    const auto x = market.is_leontief() ? leontief::allocation_for_prices(market, p)
                                        : additive::allocation_for_prices(market, p);
    bool any = false;
    auto stream = oracle::enumerate_allocations(market);
    while (auto y = stream.next()) {
      if (is_feasible_for(n, m, *y) && verify(market, *y, p).is_equilibrium()) {
        any = true;
        break;
      }
    }
    EXPECT_EQ(x.has_value(), any) << "trial " << trial;
    if (x) {
      ++found;
      EXPECT_TRUE(verify(market, *x, p).is_equilibrium());
    }
  }
  EXPECT_GT(found, 20);
}

TEST(Property, LeontiefSolversAgreeWithOracle) {
  std::mt19937 rng(kSeed + 4);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = size(rng);
    const Market market = random_market(rng, ValuationClass::kLeontief, n, size(rng) + 1);
    const auto fast = leontief::compute_equilibrium(market);
    const auto slow = oracle::max_welfare_equilibrium_bruteforce(market);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << trial;
    if (!fast) continue;
    EXPECT_TRUE(leontief::verify_equilibrium(market, fast->allocation, fast->prices).is_equilibrium());
    const auto apx = leontief::compute_equilibrium_apx_welfare(market);
    ASSERT_TRUE(apx);
    EXPECT_TRUE(leontief::verify_equilibrium(market, apx->allocation, apx->prices).is_equilibrium());
    EXPECT_GE(social_welfare(market, apx->allocation) * n, slow->welfare) << trial;
    const auto best = leontief::optimal_welfare_equilibrium(market);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->welfare, slow->welfare) << trial;
  }
}

TEST(Property, MarketJsonRoundTrip) {
  std::mt19937 rng(kSeed + 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = trial % 2 ? ValuationClass::kLeontief : ValuationClass::kAdditive;
    const Market market = random_market(rng, c, 1 + trial % 4, 1 + trial % 5);
    const std::string text = io::serialize(io::market_to_json(market));
    const Market back = io::market_from_json(io::parse(text));
    EXPECT_EQ(back, market);
    EXPECT_EQ(io::serialize(io::market_to_json(back)), text);
  }
}

}  // namespace
}  // namespace ceei
