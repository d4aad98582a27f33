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

#include "ceei/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ceei/errors.hpp"

namespace ceei::reductions {
namespace {

constexpr int kMaxDecideBits = 20;

void require_decide_cap(std::size_t bits) {
  if (bits > kMaxDecideBits) {
    throw LimitExceeded("decider needs 2^" + std::to_string(bits) + " subsets, cap is 2^" +
                        std::to_string(kMaxDecideBits));
  }
}

Rational q(std::int64_t v) { return Rational(v); }
Rational q(std::int64_t a, std::int64_t b) { return Rational(a) / Rational(b); }

std::int64_t total(const std::vector<std::int64_t>& values) {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

}  // namespace

void validate(const PartitionInstance& inst) {
  if (inst.values.empty()) throw std::invalid_argument("partition instance is empty");
  for (auto v : inst.values) {
    if (v <= 0) throw std::invalid_argument("partition values must be positive");
  }
}

void validate(const SubsetSumInstance& inst) {
  if (inst.values.empty()) throw std::invalid_argument("subset-sum instance is empty");
  for (auto v : inst.values) {
    if (v <= 0) throw std::invalid_argument("subset-sum values must be positive");
  }
  if (inst.target <= 0) throw std::invalid_argument("subset-sum target must be positive");
}

void validate(const X3CInstance& inst) {
  if (inst.n < 1) throw std::invalid_argument("X3C universe must have at least 3 elements");
  for (const auto& s : inst.sets) {
    for (int e : s) {
      if (e < 1 || e > 3 * inst.n) throw std::invalid_argument("X3C element outside universe");
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw std::invalid_argument("X3C sets must have 3 distinct elements");
    }
  }
}

void validate(const SetPackingInstance& inst) {
  if (inst.ground_size < 0) throw std::invalid_argument("negative ground size");
  if (inst.sets.empty()) throw std::invalid_argument("set packing needs at least one set");
  for (const auto& s : inst.sets) {
    std::vector<char> seen(inst.ground_size + 1, 0);
    for (int e : s) {
      if (e < 1 || e > inst.ground_size) throw std::invalid_argument("element outside ground set");
      if (seen[e]) throw std::invalid_argument("repeated element in a set");
      seen[e] = 1;
    }
  }
  if (inst.threshold < 1 || inst.threshold > static_cast<int>(inst.sets.size())) {
    throw std::invalid_argument("set packing threshold must lie in [1, number of sets]");
  }
}

PricedMarket partition_to_leontief(const PartitionInstance& inst) {
  validate(inst);
  const int m = static_cast<int>(inst.values.size());
  const std::int64_t sum = total(inst.values);
  MatrixX<Rational> v = MatrixX<Rational>::Constant(3, m + 1, Rational(0));
  v(0, 0) = 1;
  for (int j = 1; j <= m; ++j) {
    v(1, j) = q(1, m + 1);
    v(2, j) = q(1, m + 1);
  }
  PriceVector p(m + 1);
  p(0) = 1;
  for (int j = 1; j <= m; ++j) p(j) = q(2 * inst.values[j - 1], sum);
  return {Market(ValuationClass::kLeontief, std::move(v)), std::move(p)};
}

ThresholdMarket setpacking_to_leontief(const SetPackingInstance& inst) {
  validate(inst);
  const int n = static_cast<int>(inst.sets.size());
  const int m = inst.ground_size;
  MatrixX<Rational> v = MatrixX<Rational>::Constant(n, m + n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int e : inst.sets[i]) v(i, e - 1) = 1;
    v(i, m + i) = 1;
  }
  return {Market(ValuationClass::kLeontief, std::move(v)), inst.threshold};
}

OutcomeMarket subsetsum_to_additive_verify(const SubsetSumInstance& inst) {
  validate(inst);
  const std::int64_t k = inst.target;
  std::vector<std::int64_t> w;
  std::copy_if(inst.values.begin(), inst.values.end(), std::back_inserter(w),
               [k](std::int64_t x) { return x <= k; });
  const int n = static_cast<int>(w.size());
  MatrixX<Rational> v = MatrixX<Rational>::Constant(n + 1, 2 * n + 1, Rational(0));
  v(0, 0) = q(k - 1);
  for (int j = 1; j <= n; ++j) {
    v(0, j) = q(w[j - 1]);
    v(j, n + j) = 1;
  }
  Allocation x{std::vector<Bundle>(n + 1)};
  x[0] = {0};
  for (int i = 1; i <= n; ++i) x[i] = {i, n + i};
  PriceVector p(2 * n + 1);
  p(0) = 1;
  for (int j = 1; j <= n; ++j) {
    p(j) = q(w[j - 1], k);
    p(n + j) = Rational(1) - p(j);
  }
  return {Market(ValuationClass::kAdditive, std::move(v)), std::move(x), std::move(p)};
}

X3CMarket x3c_to_additive(const X3CInstance& inst) {
  validate(inst);
  const int n = inst.n;
  const int k = static_cast<int>(inst.sets.size());
  bool overlapping = false;
  if (k == n) {
    std::vector<char> seen(3 * n + 1, 0);
    for (const auto& set : inst.sets) {
      for (int e : set) {
        overlapping = overlapping || seen[e];
        seen[e] = 1;
      }
    }
  }
  if (k < n || overlapping) {
    MatrixX<Rational> v = MatrixX<Rational>::Constant(2, 1, Rational(1));
    return {Market(ValuationClass::kAdditive, std::move(v)), true};
  }
  MatrixX<Rational> v = MatrixX<Rational>::Constant(k, 2 * n + k, Rational(0));
  for (int i = 0; i < k; ++i) {
    for (int e : inst.sets[i]) v(i, e - 1) = q(1, 3);
    for (int extra = 3 * n; extra < 2 * n + k; ++extra) v(i, extra) = 1;
  }
  return {Market(ValuationClass::kAdditive, std::move(v)), false};
}

PricedMarket partition_to_additive_prices(const PartitionInstance& inst) {
  validate(inst);
  const std::int64_t sum = total(inst.values);
  if (sum % 2 != 0) throw std::invalid_argument("partition total must be even");
  const std::int64_t half = sum / 2;
  const int m = static_cast<int>(inst.values.size());
  MatrixX<Rational> v = MatrixX<Rational>::Constant(2, m + 2, Rational(0));
  for (int j = 0; j < m; ++j) {
    v(0, j) = q(inst.values[j]);
    v(1, j) = 1;
  }
  v(0, m) = q(3 * half);
  v(0, m + 1) = q(half - 1);
  PriceVector p(m + 2);
  for (int j = 0; j < m; ++j) p(j) = q(inst.values[j], sum);
  p(m) = q(1, 2);
  p(m + 1) = q(1, 2);
  return {Market(ValuationClass::kAdditive, std::move(v)), std::move(p)};
}

namespace {

void require_allocation_gadget(const SubsetSumInstance& inst) {
  validate(inst);
  if (total(inst.values) < inst.target) {
    throw std::invalid_argument("subset-sum weights must total at least the target");
  }
  for (auto w : inst.values) {
    if (w > inst.target) throw std::invalid_argument("subset-sum weight exceeds the target");
  }
}

}  // namespace

AllocatedMarket subsetsum_to_additive_allocation(const SubsetSumInstance& inst) {
  require_allocation_gadget(inst);
  const int m = static_cast<int>(inst.values.size());
  const std::int64_t sum = total(inst.values);
  const std::int64_t k = inst.target;
  MatrixX<Rational> v = MatrixX<Rational>::Constant(2, m + 2, Rational(0));
  for (int j = 0; j < m; ++j) {
    v(0, j) = q(inst.values[j]);
    v(1, j) = q(inst.values[j]);
  }
  v(0, m) = q(k - 1);
  v(0, m + 1) = q(4 * sum * sum);
  v(1, m) = q(k + 1);
  Allocation x{std::vector<Bundle>(2)};
  x[0] = {m, m + 1};
  for (int j = 0; j < m; ++j) x[1].push_back(j);
  return {Market(ValuationClass::kAdditive, std::move(v)), std::move(x)};
}

PriceVector subsetsum_allocation_witness_prices(const SubsetSumInstance& inst) {
  require_allocation_gadget(inst);
  const int m = static_cast<int>(inst.values.size());
  const Rational sum(total(inst.values));
  const Rational eps = q(1, 4 * (m + 1) * (m + 1));
  PriceVector p(m + 2);
  for (int j = 0; j < m; ++j) p(j) = Rational(inst.values[j]) / sum;
  p(m) = (Rational(inst.target - 1) + eps) / sum;
  p(m + 1) = Rational(1) - p(m);
  return p;
}

std::optional<PartitionCertificate> decide(const PartitionInstance& inst) {
  validate(inst);
  const std::size_t m = inst.values.size();
  require_decide_cap(m);
  const std::int64_t sum = total(inst.values);
  if (sum % 2 != 0) return std::nullopt;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) s += inst.values[j];
    }
    if (2 * s != sum) continue;
    PartitionCertificate cert;
    for (std::size_t j = 0; j < m; ++j) {
      (mask >> j & 1 ? cert.first : cert.second).push_back(static_cast<int>(j));
    }
    return cert;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> decide(const SubsetSumInstance& inst) {
  validate(inst);
  const std::size_t m = inst.values.size();
  require_decide_cap(m);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) s += inst.values[j];
    }
    if (s != inst.target) continue;
    std::vector<int> chosen;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) chosen.push_back(static_cast<int>(j));
    }
    return chosen;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> decide(const X3CInstance& inst) {
  validate(inst);
  const std::size_t k = inst.sets.size();
  require_decide_cap(k);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) != inst.n) continue;
    std::vector<char> covered(3 * inst.n + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int e : inst.sets[i]) {
        if (covered[e]) ok = false;
        covered[e] = 1;
      }
    }
    if (!ok) continue;
    std::vector<int> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) chosen.push_back(static_cast<int>(i));
    }
    return chosen;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> decide(const SetPackingInstance& inst) {
  validate(inst);
  const std::size_t n = inst.sets.size();
  require_decide_cap(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != inst.threshold) continue;
    std::vector<char> used(inst.ground_size + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int e : inst.sets[i]) {
        if (used[e]) ok = false;
        used[e] = 1;
      }
    }
    if (!ok) continue;
    std::vector<int> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) chosen.push_back(static_cast<int>(i));
    }
    return chosen;
  }
  return std::nullopt;
}

}  // namespace ceei::reductions
