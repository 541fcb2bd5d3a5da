// Copyright 2026 The SIA Authors.
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

#ifndef SIA_LP_HPP_
#define SIA_LP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sia/rational.hpp"

namespace sia {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var;
  Rational coef;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// min objective . x  s.t.  rows,  lower <= x <= upper.
// Lower bounds are finite; a missing upper bound means +infinity.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<LinearConstraint> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

enum class PivotRule {
  kBland,
  // Largest reduced cost; falls back to Bland after a run of degenerate pivots.
  kDantzig,
};

// State of a column of the extended matrix [A | slacks] at the final basis.
// Column n + r is the slack of row r (coefficient +1 for <=, -1 for >=).
// Equality rows have no slack; their slack column is reported as kFixed.
enum class ColumnState { kBasic, kAtLower, kAtUpper, kFixed };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  int64_t iterations = 0;
  // Per row: the basic column of the extended matrix, or -1 for rows that
  // were found to be redundant.
  std::vector<int> basis;
  std::vector<ColumnState> columns;  // size n + number of rows
};

struct LpOptions {
  PivotRule pivot_rule = PivotRule::kBland;
  int64_t iteration_cap = 1'000'000;
  int degenerate_run_limit = 50;  // Dantzig only
};

// Throws kMalformedProblem for inconsistent shapes, out-of-range variable
// indices or lower > upper, and kHardCapExceeded if the iteration cap is hit.
LpResult SolveLp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace sia

#endif  // SIA_LP_HPP_
