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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ceei/market.hpp"

// Instance generators for the hardness constructions, and brute-force
// deciders for their source problems so each construction can be checked
// end to end on small inputs.
//
// Index conventions: source-problem elements are 1-based as in their usual
// statements. Markets are 0-based internally; constructions whose goods are
// numbered from 0 map good 0 to internal index 0 (external index 1) and
// shift the rest accordingly.
namespace ceei::reductions {

// Positive integers to split into two halves of equal sum.
struct PartitionInstance {
  std::vector<std::int64_t> values;
};

// Positive integers and a positive target.
struct SubsetSumInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
};

// Universe {1..3n} and a family of 3-element subsets.
struct X3CInstance {
  int n = 0;
  std::vector<std::array<int, 3>> sets;
};

// Sets over {1..ground_size}; asks for `threshold` pairwise disjoint ones.
struct SetPackingInstance {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;
  int threshold = 0;
};

void validate(const PartitionInstance& inst);
void validate(const SubsetSumInstance& inst);
void validate(const X3CInstance& inst);
void validate(const SetPackingInstance& inst);

struct PricedMarket {
  Market market;
  PriceVector prices;
};

struct AllocatedMarket {
  Market market;
  Allocation allocation;
};

struct OutcomeMarket {
  Market market;
  Allocation allocation;
  PriceVector prices;
};

struct ThresholdMarket {
  Market market;
  int threshold;
};

// `trivially_no` marks a family that cannot contain a cover for size reasons
// alone; the market is then a fixed two-buyer, one-item market with no
// equilibrium.
struct X3CMarket {
  Market market;
  bool trivially_no = false;
};

// Leontief, 3 buyers, goods 0..m. Buyer 1 demands good 0 alone, buyers 2
// and 3 demand goods 1..m (value 1/(m+1) each). Prices: p_0 = 1,
// p_j = 2 s_j / sum(s). A clearing allocation exists iff S has a partition.
PricedMarket partition_to_leontief(const PartitionInstance& inst);

// Leontief, n buyers, ground + n goods; buyer i demands C_i plus its own
// private good (values 1). An equilibrium with welfare >= K exists iff K
// sets are pairwise disjoint.
ThresholdMarket setpacking_to_leontief(const SetPackingInstance& inst);

// Additive, buyers 0..n, goods 0..2n, with the fixed outcome x_0 = {0},
// x_i = {i, n+i}, p_0 = 1, p_j = w_j/K, p_{n+j} = 1 - p_j. Weights above K
// are dropped first. Buyer 0 has an improving deviation iff some subset of
// the weights sums to K.
OutcomeMarket subsetsum_to_additive_verify(const SubsetSumInstance& inst);

// Additive, k buyers, 2n + k goods: value 1/3 on the buyer's own triple and
// 1 on each of the k - n extra goods. Has an equilibrium iff an exact cover
// exists. With k < n, or k == n and two sets overlapping, no cover exists and
// the family is marked trivially_no: with no extra goods the construction
// can have equilibria that are not covers.
X3CMarket x3c_to_additive(const X3CInstance& inst);

// Additive, 2 buyers, m + 2 goods, sum(s) = 2V must be even. Prices
// p_j = s_j / 2V, p_{m+1} = p_{m+2} = 1/2. No equilibrium allocation exists
// at these prices iff S has a partition.
PricedMarket partition_to_additive_prices(const PartitionInstance& inst);

// Additive, 2 buyers, m + 2 goods, x_1 = {m+1, m+2}, x_2 = {1..m}. Requires
// sum(w) >= K and every w_j <= K. Equilibrium prices exist at this allocation
// iff no subset of the weights sums to K.
AllocatedMarket subsetsum_to_additive_allocation(const SubsetSumInstance& inst);

// The explicit supporting prices for the previous construction when no
// subset sums to K: p_j = w_j/W, p_{m+1} = (K - 1 + e)/W, e = 1/(4(m+1)^2),
// p_{m+2} = 1 - p_{m+1}.
PriceVector subsetsum_allocation_witness_prices(const SubsetSumInstance& inst);

// Brute-force deciders, capped at 2^20 candidate subsets. Certificates hold
// 0-based positions into the instance's lists.
struct PartitionCertificate {
  std::vector<int> first;
  std::vector<int> second;
};

std::optional<PartitionCertificate> decide(const PartitionInstance& inst);
std::optional<std::vector<int>> decide(const SubsetSumInstance& inst);
std::optional<std::vector<int>> decide(const X3CInstance& inst);
std::optional<std::vector<int>> decide(const SetPackingInstance& inst);

}  // namespace ceei::reductions
