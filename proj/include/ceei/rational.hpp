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

#include <concepts>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace ceei {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Expression templates are off so the type behaves as a plain
// value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Scalars accepted by the solvers: exact, non-integral fields. Floating point
// is rejected at compile time because every equilibrium condition is an
// exact equality.
template <class T>
concept ExactField = std::numeric_limits<T>::is_specialized &&
                     std::numeric_limits<T>::is_exact &&
                     !std::numeric_limits<T>::is_integer &&
                     requires(T a, T b) {
                       { a + b } -> std::convertible_to<T>;
                       { a - b } -> std::convertible_to<T>;
                       { a * b } -> std::convertible_to<T>;
                       { a / b } -> std::convertible_to<T>;
                       { a < b } -> std::convertible_to<bool>;
                       { a == b } -> std::convertible_to<bool>;
                       T(1);
                     };

static_assert(ExactField<Rational>);

// Accepts "p/q", "-p/q", integers and finite decimals ("2.5"). Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Reduced "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace ceei
