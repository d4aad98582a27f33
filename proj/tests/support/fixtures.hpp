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

#include <string>
#include <vector>

#include "ceei/market.hpp"
#include "ceei/rational.hpp"

namespace ceei::testing {

inline Rational R(const std::string& text) { return parse_rational(text); }

inline PriceVector prices(const std::vector<std::string>& entries) {
  PriceVector p(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t j = 0; j < entries.size(); ++j) p(static_cast<Eigen::Index>(j)) = R(entries[j]);
  return p;
}

inline Market market(ValuationClass valuation, const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  MatrixX<Rational> v(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) v(i, j) = R(rows[i][j]);
  }
  return Market(valuation, std::move(v));
}

inline Market additive_market(const std::vector<std::vector<std::string>>& rows) {
  return market(ValuationClass::kAdditive, rows);
}

// Leontief market over m items; every demanded value is 1. Items 0-based.
inline Market leontief_market(int m, const std::vector<Bundle>& demands) {
  MatrixX<Rational> v = MatrixX<Rational>::Constant(static_cast<int>(demands.size()), m, Rational(0));
  for (std::size_t i = 0; i < demands.size(); ++i) {
    for (int j : demands[i]) v(static_cast<int>(i), j) = 1;
  }
  return Market(ValuationClass::kLeontief, std::move(v));
}

// 6 buyers, 8 items; D = {1},{2},{2,3},{2,3},{4,5,6},{6,7,8} (1-based).
inline Market example2() {
  return leontief_market(8, {{0}, {1}, {1, 2}, {1, 2}, {3, 4, 5}, {5, 6, 7}});
}

// n buyers, 2n items, D_i = {2i-1, 2i} (1-based).
inline Market example3(int n) {
  std::vector<Bundle> d;
  for (int i = 0; i < n; ++i) d.push_back({2 * i, 2 * i + 1});
  return leontief_market(2 * n, d);
}

// 2 buyers, 3 items, D_1 = D_2 = {1,2}.
inline Market example4() { return leontief_market(3, {{0, 1}, {0, 1}}); }

// 3 buyers, 4 items: v_11=1, v_22=2, v_24=3, v_31=1/2, v_32=5/2, v_33=5.
inline Market example1() {
  return market(ValuationClass::kLeontief,
                {{"1", "0", "0", "0"}, {"0", "2", "0", "3"}, {"1/2", "5/2", "5", "0"}});
}

// Every Leontief market with n buyers and m items whose values are 0/1 and
// whose demand sets are nonempty: (2^m - 1)^n markets.
inline std::vector<Market> demand_profiles(int n, int m) {
  std::vector<Market> out;
  const int subsets = (1 << m) - 1;
  std::vector<int> code(n, 1);
  while (true) {
    std::vector<Bundle> d(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (code[i] >> j & 1) d[i].push_back(j);
      }
    }
    out.push_back(leontief_market(m, d));
    int i = n - 1;
    while (i >= 0 && code[i] == subsets) code[i--] = 1;
    if (i < 0) break;
    ++code[i];
  }
  return out;
}

// n in {1,2,3}, m in {1..4}.
inline std::vector<Market> small_leontief_corpus() {
  std::vector<Market> out;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      auto part = demand_profiles(n, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

}  // namespace ceei::testing
