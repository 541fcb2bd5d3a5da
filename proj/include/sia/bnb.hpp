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

#ifndef SIA_BNB_HPP_
#define SIA_BNB_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sia/instance.hpp"
#include "sia/lp.hpp"
#include "sia/milp.hpp"

namespace sia {

enum class BranchRule {
  // Most fractional binary (activation) variable first, then integers.
  kActFirstMostFractional,
  // Most fractional general integer (x) variable first, then binaries.
  kXMostFractional,
};

enum class SearchOrder { kBestBound, kDepthFirst };

struct BnbConfig {
  int64_t node_limit = 1'000'000;
  double time_limit_seconds = 60.0;
  BranchRule branch_rule = BranchRule::kActFirstMostFractional;
  SearchOrder search_order = SearchOrder::kBestBound;
  PivotRule pivot_rule = PivotRule::kBland;
  int64_t lp_iteration_cap = 1'000'000;
  // Audits only: explore every LP-feasible fractional node regardless of the
  // incumbent.
  bool prune_by_bound = true;
};

// Throws kInvalidConfig when a limit is not positive.
void ValidateConfig(const BnbConfig& config);

// Spellings used by the CLI flags and the bench config file:
// "act-first" / "x-first", "best-bound" / "depth-first", "bland" / "dantzig".
std::string_view BranchRuleName(BranchRule rule);
std::string_view SearchOrderName(SearchOrder order);
std::string_view PivotRuleName(PivotRule rule);
std::optional<BranchRule> ParseBranchRule(std::string_view text);
std::optional<SearchOrder> ParseSearchOrder(std::string_view text);
std::optional<PivotRule> ParsePivotRule(std::string_view text);

struct BoundChange {
  int var;
  bool is_upper;
  Rational value;
};

// One processed node, in processing order.
struct NodeRecord {
  int64_t id = 0;
  int64_t parent = -1;
  std::vector<BoundChange> changes;  // relative to the root bounds
  std::optional<Rational> parent_bound;
  std::optional<Rational> lp_bound;  // nullopt when the LP is infeasible
  bool pruned_by_bound = false;
  std::optional<Rational> incumbent_at_prune;
};

struct BnbTrace {
  std::vector<NodeRecord> nodes;
};

// Maps an LP point to a candidate integer point (rounding or polishing).
// Candidates are re-checked against the model before they are accepted.
using IncumbentHook = std::function<std::optional<std::vector<Rational>>(
    std::span<const Rational> lp_point)>;

struct MilpResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<std::vector<Rational>> point;
  std::optional<Rational> objective;
  SolveStats stats;
};

MilpResult SolveMilp(const MilpModel& model, const BnbConfig& config,
                     const IncumbentHook& hook = nullptr,
                     BnbTrace* trace = nullptr);

// Proven optimal (or best found within limits) SIA solution. Throws
// kInfeasibleInstance when no integer allocation satisfies the constraints.
// With limits hit and no incumbent, has_incumbent is false.
Solution Solve(const SiaInstance& instance, const BnbConfig& config = {},
               BnbTrace* trace = nullptr);

// Value of the LP relaxation, or nullopt when it is infeasible.
std::optional<Rational> RelaxationBound(const SiaInstance& instance,
                                        const BnbConfig& config = {});

// Feasibility heuristic: keeps the integer part of x, then completes each
// (service, resource) demand greedily on interfaces the LP point already
// activates (cheapest unit cost first), opening further interfaces only when
// needed. Integral points are returned unchanged. The result always passes
// CheckConstraints.
std::optional<Allocation> RoundIncumbent(const SiaInstance& instance,
                                         const MilpModel& model,
                                         std::span<const Rational> lp_point);

}  // namespace sia

#endif  // SIA_BNB_HPP_
