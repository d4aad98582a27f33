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
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ceei/errors.hpp"
#include "ceei/rational.hpp"

namespace ceei {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PriceVector = VectorX<Rational>;

enum class ValuationClass { kLeontief, kAdditive };

inline const char* to_string(ValuationClass c) {
  return c == ValuationClass::kLeontief ? "leontief" : "additive";
}

// Item indices are 0-based here; serialization shifts them to 1-based.
using Bundle = std::vector<int>;

// One bundle per buyer. Nothing is enforced on construction: feasibility
// (disjoint, in-range, one bundle per buyer) is a checked property so that
// verifiers can report it.
struct Allocation {
  std::vector<Bundle> bundles;

  Allocation() = default;
  explicit Allocation(std::vector<Bundle> b) : bundles(std::move(b)) {}
  int buyers() const { return static_cast<int>(bundles.size()); }
  const Bundle& operator[](int buyer) const { return bundles[buyer]; }
  Bundle& operator[](int buyer) { return bundles[buyer]; }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Caps for the exponential searches. Exceeding one raises LimitExceeded.
struct SearchLimits {
  int max_search_items = 12;                 // Leontief assignment searches
  std::uint64_t max_states = 10'000'000;     // (n+1)^m assignments
  int max_bundle_items = 22;                 // 2^m bundle enumeration
};

// Buyers, goods and an n x m matrix of nonnegative values. Construction
// validates; a BasicMarket that exists satisfies every invariant.
template <ExactField Scalar>
class BasicMarket {
 public:
  using scalar_type = Scalar;

  BasicMarket(ValuationClass valuation, MatrixX<Scalar> values)
      : valuation_(valuation), values_(std::move(values)) {
    validate();
  }

  int buyers() const { return static_cast<int>(values_.rows()); }
  int items() const { return static_cast<int>(values_.cols()); }
  ValuationClass valuation() const { return valuation_; }
  bool is_leontief() const { return valuation_ == ValuationClass::kLeontief; }
  bool is_additive() const { return valuation_ == ValuationClass::kAdditive; }
  const MatrixX<Scalar>& values() const { return values_; }
  const Scalar& value(int buyer, int item) const { return values_(buyer, item); }

  friend bool operator==(const BasicMarket& a, const BasicMarket& b) {
    return a.valuation_ == b.valuation_ && a.values_.rows() == b.values_.rows() &&
           a.values_.cols() == b.values_.cols() && a.values_ == b.values_;
  }

 private:
  void validate() const {
    using Reason = InvalidMarket::Reason;
    if (values_.rows() < 1) throw InvalidMarket(Reason::kNoBuyers, -1, -1, "market has no buyers");
    if (values_.cols() < 1) throw InvalidMarket(Reason::kNoItems, -1, -1, "market has no items");
    const Scalar zero(0);
    for (int i = 0; i < buyers(); ++i) {
      bool any_positive = false;
      for (int j = 0; j < items(); ++j) {
        if (values_(i, j) < zero) {
          throw InvalidMarket(Reason::kNegativeValue, i, j,
                              "negative value for buyer " + std::to_string(i + 1) + ", item " +
                                  std::to_string(j + 1));
        }
        any_positive = any_positive || zero < values_(i, j);
      }
      if (is_leontief() && !any_positive) {
        throw InvalidMarket(Reason::kEmptyDemandSet, i, -1,
                            "leontief buyer " + std::to_string(i + 1) + " has an empty demand set");
      }
    }
  }

  ValuationClass valuation_;
  MatrixX<Scalar> values_;
};

using Market = BasicMarket<Rational>;

template <ExactField Scalar>
struct RawMarket {
  ValuationClass valuation;
  MatrixX<Scalar> values;
};

// Returns the market iff every invariant holds; throws InvalidMarket otherwise.
template <ExactField Scalar>
BasicMarket<Scalar> validate_market(RawMarket<Scalar> raw) {
  return BasicMarket<Scalar>(raw.valuation, std::move(raw.values));
}

template <ExactField Scalar>
struct BasicEquilibrium {
  Allocation allocation;
  VectorX<Scalar> prices;
};

template <ExactField Scalar>
struct BasicWelfareEquilibrium {
  Allocation allocation;
  VectorX<Scalar> prices;
  Scalar welfare;
};

using Equilibrium = BasicEquilibrium<Rational>;
using WelfareEquilibrium = BasicWelfareEquilibrium<Rational>;

}  // namespace ceei
