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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ceei/market.hpp"

namespace ceei::lp {

enum class Relation { kLessEqual, kEqual };

// sum(coefficients[v] * x_v) <relation> rhs
template <ExactField Scalar>
struct LinearConstraint {
  std::map<int, Scalar> coefficients;
  Relation relation = Relation::kLessEqual;
  Scalar rhs{0};
};

// Maximize `objective` subject to `constraints`; variables flagged
// nonnegative are bounded below by zero, the rest are free.
template <ExactField Scalar>
struct BasicLPProblem {
  int num_variables = 0;
  std::vector<bool> nonnegative;
  std::vector<LinearConstraint<Scalar>> constraints;
  std::map<int, Scalar> objective;

  int add_variable(bool is_nonnegative = true) {
    nonnegative.push_back(is_nonnegative);
    return num_variables++;
  }

  void add_less_equal(std::map<int, Scalar> terms, Scalar rhs) {
    constraints.push_back({std::move(terms), Relation::kLessEqual, std::move(rhs)});
  }

  // Stored as the negated <= row.
  void add_greater_equal(std::map<int, Scalar> terms, Scalar rhs) {
    for (auto& [v, a] : terms) a = -a;
    constraints.push_back({std::move(terms), Relation::kLessEqual, Scalar(-rhs)});
  }

  void add_equal(std::map<int, Scalar> terms, Scalar rhs) {
    constraints.push_back({std::move(terms), Relation::kEqual, std::move(rhs)});
  }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
  }
  return "?";
}

template <ExactField Scalar>
struct BasicLPResult {
  Status status = Status::kInfeasible;
  VectorX<Scalar> point;  // set when optimal
  Scalar value{0};        // set when optimal
};

using LPProblem = BasicLPProblem<Rational>;
using LPResult = BasicLPResult<Rational>;

// Throws std::invalid_argument on undeclared variables or an all-zero row.
template <ExactField Scalar>
void validate_problem(const BasicLPProblem<Scalar>& problem) {
  if (problem.num_variables < 0 ||
      static_cast<int>(problem.nonnegative.size()) != problem.num_variables) {
    throw std::invalid_argument("nonnegativity flags do not match the variable count");
  }
  auto check_var = [&](int v) {
    if (v < 0 || v >= problem.num_variables) {
      throw std::invalid_argument("reference to undeclared variable " + std::to_string(v));
    }
  };
  const Scalar zero(0);
  for (std::size_t r = 0; r < problem.constraints.size(); ++r) {
    bool nonzero = false;
    for (const auto& [v, a] : problem.constraints[r].coefficients) {
      check_var(v);
      nonzero = nonzero || a != zero;
    }
    if (!nonzero) {
      throw std::invalid_argument("constraint " + std::to_string(r) + " has no nonzero coefficient");
    }
  }
  for (const auto& [v, a] : problem.objective) check_var(v);
}

// True iff `point` satisfies every constraint and sign restriction exactly.
template <ExactField Scalar>
bool check_point(const BasicLPProblem<Scalar>& problem, const VectorX<Scalar>& point) {
  if (point.size() != problem.num_variables) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                " coordinates, problem has " +
                                std::to_string(problem.num_variables) + " variables");
  }
  const Scalar zero(0);
  for (int v = 0; v < problem.num_variables; ++v) {
    if (problem.nonnegative[v] && point(v) < zero) return false;
  }
  for (const auto& c : problem.constraints) {
    Scalar lhs(0);
    for (const auto& [v, a] : c.coefficients) lhs += a * point(v);
    if (c.relation == Relation::kEqual ? lhs != c.rhs : c.rhs < lhs) return false;
  }
  return true;
}

namespace detail {

// Dense two-phase tableau simplex with Bland's least-index rule, which
// guarantees termination under exact arithmetic.
template <ExactField Scalar>
class Tableau {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit Tableau(const BasicLPProblem<Scalar>& problem) : problem_(problem) { build(); }

  BasicLPResult<Scalar> solve() {
    BasicLPResult<Scalar> result;
    if (num_artificial_ > 0) {
      std::vector<Scalar> cost(cols_, zero_);
      for (int c = first_artificial_; c < cols_; ++c) cost[c] = Scalar(-1);
      load_objective(cost);
      run(/*allow_artificial=*/true);  // phase 1 is bounded by zero
      if (obj_(cols_) < zero_) return result;  // infeasible
      drive_out_artificials();
    }
    std::vector<Scalar> cost(cols_, zero_);
    for (const auto& [v, a] : problem_.objective) {
      cost[pos_col_[v]] += a;
      if (neg_col_[v] >= 0) cost[neg_col_[v]] -= a;
    }
    load_objective(cost);
    if (!run(/*allow_artificial=*/false)) {
      result.status = Status::kUnbounded;
      return result;
    }
    std::vector<Scalar> x(cols_, zero_);
    for (int r = 0; r < rows_; ++r) x[basis_[r]] = table_(r, cols_);
    result.status = Status::kOptimal;
    result.point = VectorX<Scalar>::Constant(problem_.num_variables, zero_);
    for (int v = 0; v < problem_.num_variables; ++v) {
      result.point(v) = x[pos_col_[v]];
      if (neg_col_[v] >= 0) result.point(v) -= x[neg_col_[v]];
    }
    result.value = zero_;
    for (const auto& [v, a] : problem_.objective) result.value += a * result.point(v);
    return result;
  }

 private:
  void build() {
    const int n = problem_.num_variables;
    pos_col_.assign(n, -1);
    neg_col_.assign(n, -1);
    int col = 0;
    for (int v = 0; v < n; ++v) {
      pos_col_[v] = col++;
      if (!problem_.nonnegative[v]) neg_col_[v] = col++;
    }
    const int structural = col;

    // Normalize every row to a nonnegative right-hand side first, counting
    // the auxiliary columns each row needs.
    struct Row {
      std::map<int, Scalar> coef;  // structural column -> coefficient
      Scalar rhs;
      int slack_sign;  // +1 slack, -1 surplus, 0 none
      bool artificial;
    };
    std::vector<Row> rows;
    int num_slack = 0;
    for (const auto& c : problem_.constraints) {
      Row row{{}, c.rhs, 0, false};
      for (const auto& [v, a] : c.coefficients) {
        if (a == zero_) continue;
        row.coef[pos_col_[v]] += a;
        if (neg_col_[v] >= 0) row.coef[neg_col_[v]] -= a;
      }
      const bool flip = c.rhs < zero_;
      if (flip) {
        for (auto& [k, a] : row.coef) a = -a;
        row.rhs = -row.rhs;
      }
      if (c.relation == Relation::kLessEqual) {
        row.slack_sign = flip ? -1 : 1;
        row.artificial = flip;
        ++num_slack;
      } else {
        row.artificial = true;
      }
      num_artificial_ += row.artificial ? 1 : 0;
      rows.push_back(std::move(row));
    }

    rows_ = static_cast<int>(rows.size());
    first_artificial_ = structural + num_slack;
    cols_ = first_artificial_ + num_artificial_;
    table_ = Matrix::Constant(rows_, cols_ + 1, zero_);
    obj_ = VectorX<Scalar>::Constant(cols_ + 1, zero_);
    basis_.assign(rows_, -1);

    int next_slack = structural;
    int next_artificial = first_artificial_;
    for (int r = 0; r < rows_; ++r) {
      for (const auto& [k, a] : rows[r].coef) table_(r, k) = a;
      table_(r, cols_) = rows[r].rhs;
      if (rows[r].slack_sign != 0) {
        table_(r, next_slack) = Scalar(rows[r].slack_sign);
        if (rows[r].slack_sign > 0) basis_[r] = next_slack;
        ++next_slack;
      }
      if (rows[r].artificial) {
        table_(r, next_artificial) = Scalar(1);
        basis_[r] = next_artificial++;
      }
    }
  }

  // obj = c_B * T - c, so entering candidates have negative entries and
  // obj(rhs) is the current objective value.
  void load_objective(const std::vector<Scalar>& cost) {
    for (int c = 0; c < cols_; ++c) obj_(c) = -cost[c];
    obj_(cols_) = zero_;
    for (int r = 0; r < rows_; ++r) {
      const Scalar& cb = cost[basis_[r]];
      if (cb == zero_) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (table_(r, c) != zero_) obj_(c) += cb * table_(r, c);
      }
    }
  }

  // Returns false on unboundedness.
  bool run(bool allow_artificial) {
    const int limit = allow_artificial ? cols_ : first_artificial_;
    while (true) {
      int entering = -1;
      for (int c = 0; c < limit; ++c) {
        if (obj_(c) < zero_) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Scalar best_ratio;
      for (int r = 0; r < rows_; ++r) {
        if (!(zero_ < table_(r, entering))) continue;
        Scalar ratio = table_(r, cols_) / table_(r, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (int c = 0; c < first_artificial_; ++c) {
        if (table_(r, c) != zero_) {
          pivot(r, c);
          break;
        }
      }
      // A row with no eligible column is redundant; its artificial stays
      // basic at zero and can never leave the basis again.
    }
  }

  void pivot(int row, int col) {
    const Scalar p = table_(row, col);
    nonzero_.clear();
    for (int c = 0; c <= cols_; ++c) {
      if (table_(row, c) == zero_) continue;
      if (p != one_) table_(row, c) /= p;
      nonzero_.push_back(c);
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == row || table_(r, col) == zero_) continue;
      const Scalar f = table_(r, col);
      for (int c : nonzero_) table_(r, c) -= f * table_(row, c);
    }
    if (obj_(col) != zero_) {
      const Scalar f = obj_(col);
      for (int c : nonzero_) obj_(c) -= f * table_(row, c);
    }
    basis_[row] = col;
  }

  const BasicLPProblem<Scalar>& problem_;
  const Scalar zero_{0};
  const Scalar one_{1};
  std::vector<int> pos_col_, neg_col_;
  int rows_ = 0;
  int cols_ = 0;
  int first_artificial_ = 0;
  int num_artificial_ = 0;
  Matrix table_;
  VectorX<Scalar> obj_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
};

}  // namespace detail

// Exact rational simplex. An optimal point satisfies every constraint
// exactly; the result is a deterministic function of the problem encoding.
template <ExactField Scalar>
BasicLPResult<Scalar> solve_lp(const BasicLPProblem<Scalar>& problem) {
  validate_problem(problem);
  return detail::Tableau<Scalar>(problem).solve();
}

// Strict inequalities are encoded as `>= rhs + slack` on a distinguished
// slack variable capped at 1 and maximized; the system is strictly
// satisfiable iff the optimum slack is positive. Returns the optimal point
// when it is.
template <ExactField Scalar>
std::optional<VectorX<Scalar>> solve_strict(BasicLPProblem<Scalar> problem, int slack) {
  problem.add_less_equal({{slack, Scalar(1)}}, Scalar(1));
  problem.objective = {{slack, Scalar(1)}};
  auto result = solve_lp(problem);
  if (result.status != Status::kOptimal || !(Scalar(0) < result.value)) return std::nullopt;
  return std::move(result.point);
}

}  // namespace ceei::lp
