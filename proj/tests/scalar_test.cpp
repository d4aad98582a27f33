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

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "ceei/additive.hpp"
#include "ceei/leontief.hpp"
#include "ceei/lp.hpp"
#include "ceei/oracle.hpp"

namespace ceei {
namespace {

using CppRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                  boost::multiprecision::et_off>;

// The solvers are templated on the scalar; run the same checks with a
// second exact field.
template <class S>
class ScalarTest : public ::testing::Test {};

using Scalars = ::testing::Types<Rational, CppRational>;
TYPED_TEST_SUITE(ScalarTest, Scalars);

template <class S>
BasicMarket<S> demands(int m, const std::vector<Bundle>& d) {
  MatrixX<S> v = MatrixX<S>::Constant(static_cast<int>(d.size()), m, S(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j : d[i]) v(static_cast<int>(i), j) = S(1);
  }
  return BasicMarket<S>(ValuationClass::kLeontief, std::move(v));
}

TYPED_TEST(ScalarTest, Example2) {
  using S = TypeParam;
  const auto market = demands<S>(8, {{0}, {1}, {1, 2}, {1, 2}, {3, 4, 5}, {5, 6, 7}});
  const auto eq = leontief::compute_equilibrium(market);
  ASSERT_TRUE(eq);
  const S third = S(1) / S(3);
  VectorX<S> expected(8);
  expected << S(1), S(1), S(1), S(1), S(1), third, third, third;
  EXPECT_TRUE(eq->prices == expected);
  EXPECT_TRUE(leontief::verify_equilibrium(market, eq->allocation, eq->prices).is_equilibrium());
}

TYPED_TEST(ScalarTest, Example4) {
  using S = TypeParam;
  const auto market = demands<S>(3, {{0, 1}, {0, 1}});
  EXPECT_FALSE(leontief::prices_for_allocation(market, Allocation{{{0, 1}, {2}}}));
  const auto p = leontief::prices_for_allocation(market, Allocation{{{0}, {1, 2}}});
  ASSERT_TRUE(p);
  EXPECT_TRUE(leontief::verify_equilibrium(market, Allocation{{{0}, {1, 2}}}, *p).is_equilibrium());
  const auto best = oracle::max_welfare_equilibrium_bruteforce(market);
  ASSERT_TRUE(best);
  EXPECT_TRUE(best->welfare == S(0));
}

TYPED_TEST(ScalarTest, AdditiveGadget) {
  using S = TypeParam;
  MatrixX<S> v = MatrixX<S>::Constant(3, 5, S(0));
  v(0, 0) = S(2);
  v(0, 1) = S(1);
  v(0, 2) = S(2);
  v(1, 3) = S(1);
  v(2, 4) = S(1);
  const BasicMarket<S> market(ValuationClass::kAdditive, v);
  VectorX<S> p(5);
  p << S(1), S(1) / S(3), S(2) / S(3), S(2) / S(3), S(1) / S(3);
  const auto report = additive::verify_equilibrium(market, Allocation{{{0}, {1, 3}, {2, 4}}}, p);
  const auto* w = report.template get<SuboptimalBundle>();
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->witness, (Bundle{1, 2}));
}

TYPED_TEST(ScalarTest, LinearProgram) {
  using S = TypeParam;
  lp::BasicLPProblem<S> problem;
  problem.add_variable();
  problem.add_variable();
  problem.add_less_equal({{0, S(1)}, {1, S(2)}}, S(4));
  problem.add_less_equal({{0, S(3)}, {1, S(1)}}, S(6));
  problem.objective = {{0, S(1)}, {1, S(1)}};
  const auto res = lp::solve_lp(problem);
  ASSERT_EQ(res.status, lp::Status::kOptimal);
  EXPECT_TRUE(res.value == S(14) / S(5));
}

}  // namespace
}  // namespace ceei
