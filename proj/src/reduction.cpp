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

#include "sia/reduction.hpp"

#include <numeric>

#include "sia/error.hpp"

namespace sia {

PartitionInstance::PartitionInstance(std::vector<int64_t> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "partition multiset is empty");
  }
  for (int64_t e : elements_) {
    if (e < 1) {
      throw Error(ErrorCode::kInvalidConfig,
                  "partition element " + std::to_string(e) + " is not positive");
    }
  }
  sum_ = std::accumulate(elements_.begin(), elements_.end(), int64_t{0});
}

SiaInstance PartitionToSia(const PartitionInstance& pp) {
  if (pp.sum() % 2 != 0) {
    throw Error(ErrorCode::kOddSum,
                "element sum " + std::to_string(pp.sum()) + " is odd");
  }
  RawInstance raw;
  raw.num_interfaces = 2;
  raw.num_services = pp.size();
  raw.num_resources = 1;
  for (int64_t e : pp.elements()) raw.demand.push_back({e});
  raw.capacity = {{pp.sum() / 2}, {pp.sum() / 2}};
  raw.unit_cost = {{Rational(0)}, {Rational(0)}};
  raw.activation_cost = {Rational(1), Rational(1)};
  return SiaInstance::Validate(raw);
}

PartitionDecision AnalyzePartition(const PartitionInstance& pp,
                                   const SiaSolverFn& solver) {
  PartitionDecision decision;
  if (pp.sum() % 2 != 0) {
    decision.odd_sum = true;
    return decision;
  }
  Solution solution = solver(PartitionToSia(pp));
  if (solution.status != SolveStatus::kOptimal) {
    throw Error(ErrorCode::kSolverLimitHit,
                std::string("solver stopped with status ") +
                    std::string(SolveStatusName(solution.status)));
  }
  decision.partition_exists = solution.objective == Rational(pp.size());
  decision.solution = std::move(solution);
  return decision;
}

bool DecidePartition(const PartitionInstance& pp, const SiaSolverFn& solver) {
  return AnalyzePartition(pp, solver).partition_exists;
}

bool DecidePartition(const PartitionInstance& pp, const BnbConfig& config) {
  return DecidePartition(
      pp, [&config](const SiaInstance& inst) { return Solve(inst, config); });
}

}  // namespace sia
