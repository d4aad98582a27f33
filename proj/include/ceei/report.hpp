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

#include <optional>
#include <string>
#include <variant>

#include "ceei/market.hpp"

namespace ceei {

struct InfeasibleAllocation {
  enum class Kind { kWrongBuyerCount, kItemOutOfRange, kItemRepeated };
  Kind kind;
  int buyer = -1;
  int item = -1;
  friend bool operator==(const InfeasibleAllocation&, const InfeasibleAllocation&) = default;
};

struct UnsoldPricedItem {
  int item;
  friend bool operator==(const UnsoldPricedItem&, const UnsoldPricedItem&) = default;
};

template <ExactField Scalar>
struct BudgetNotExhausted {
  int buyer;
  Scalar spend;
  friend bool operator==(const BudgetNotExhausted&, const BudgetNotExhausted&) = default;
};

// Buyer `buyer` can afford `witness` and strictly prefers it to its bundle.
struct SuboptimalBundle {
  int buyer;
  Bundle witness;
  friend bool operator==(const SuboptimalBundle&, const SuboptimalBundle&) = default;
};

template <ExactField Scalar>
using Violation =
    std::variant<InfeasibleAllocation, UnsoldPricedItem, BudgetNotExhausted<Scalar>, SuboptimalBundle>;

// Outcome of an equilibrium check. Verifiers test feasibility, then clearing,
// then budgets, then buyer optimality in buyer order, and report only the
// first failure.
template <ExactField Scalar>
struct BasicEquilibriumReport {
  std::optional<Violation<Scalar>> violation;

  bool is_equilibrium() const { return !violation.has_value(); }

  template <class V>
  const V* get() const {
    return violation ? std::get_if<V>(&*violation) : nullptr;
  }
};

using EquilibriumReport = BasicEquilibriumReport<Rational>;

template <ExactField Scalar>
const char* kind_name(const Violation<Scalar>& v) {
  struct Namer {
    const char* operator()(const InfeasibleAllocation&) const { return "infeasible-allocation"; }
    const char* operator()(const UnsoldPricedItem&) const { return "item-unsold-positive-price"; }
    const char* operator()(const BudgetNotExhausted<Scalar>&) const { return "budget-not-exhausted"; }
    const char* operator()(const SuboptimalBundle&) const { return "suboptimal-bundle"; }
  };
  return std::visit(Namer{}, v);
}

}  // namespace ceei
