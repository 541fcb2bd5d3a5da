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

#ifndef SIA_MILP_HPP_
#define SIA_MILP_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sia/instance.hpp"
#include "sia/lp.hpp"
#include "sia/rational.hpp"

namespace sia {

enum class VarKind { kContinuous, kInteger, kBinary };

struct MilpVariable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  Rational lower;
  std::optional<Rational> upper;  // nullopt means +infinity
};

// Position of the x and ACT variables of an SIA model. Variables are laid out
// as all x(i, j, k) in (i, j, k) row-major order followed by all act(i, j).
struct SiaLayout {
  int interfaces = 0;
  int services = 0;
  int resources = 0;

  int x(int i, int j, int k) const {
    return (i * services + j) * resources + k;
  }
  int act(int i, int j) const {
    return interfaces * services * resources + i * services + j;
  }
  int num_x() const { return interfaces * services * resources; }
  int num_act() const { return interfaces * services; }
};

// Minimization MILP with exact rational data.
struct MilpModel {
  std::vector<MilpVariable> variables;
  std::vector<LinearConstraint> constraints;
  std::vector<Term> objective;
  std::optional<SiaLayout> layout;  // set by BuildMilp

  int num_vars() const { return static_cast<int>(variables.size()); }
  int FindVariable(std::string_view name) const;

  Rational EvaluateObjective(std::span<const Rational> point) const;
  // Exact check of bounds, integrality and every constraint.
  bool IsFeasible(std::span<const Rational> point) const;
  LpProblem Relaxation() const;
};

// Largest value x(i, j, k) can take in any feasible allocation:
// min(d_jk, floor(b_ik / (1 + a_ijk))).
int64_t BigM(const SiaInstance& instance, int i, int j, int k);

// Rows are emitted as: demand (j, k) blocks, then capacity (i, k), then
// linking x(i, j, k) - M * act(i, j) <= 0.
MilpModel BuildMilp(const SiaInstance& instance);

// Point of the model corresponding to an allocation, with act recomputed
// from x.
std::vector<Rational> PointFromAllocation(const MilpModel& model,
                                          const Allocation& allocation);
// Rounds nothing: requires integral x entries. Returns nullopt otherwise.
std::optional<Allocation> AllocationFromPoint(const MilpModel& model,
                                              std::span<const Rational> point);

// Writes the model in LP text format (Minimize / Subject To / Bounds /
// General / Binary / End). Throws kNonDecimalRational when a coefficient has
// no finite decimal expansion.
std::string ExportLp(const MilpModel& model, std::string_view title = "");

// Reads the subset of the LP text format that ExportLp produces, plus
// comments, free line wrapping and `>=`/`=<`/`=>` spellings. Throws
// kParseError with a line number on malformed input.
MilpModel ReadLp(std::string_view text);

}  // namespace sia

#endif  // SIA_MILP_HPP_
