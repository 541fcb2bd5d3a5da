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

#ifndef SIA_REDUCTION_HPP_
#define SIA_REDUCTION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sia/bnb.hpp"
#include "sia/instance.hpp"

namespace sia {

// Multiset of positive integers for the equal-sum partition question.
class PartitionInstance {
 public:
  // Throws kInvalidConfig when the multiset is empty or has an element < 1.
  explicit PartitionInstance(std::vector<int64_t> elements);

  const std::vector<int64_t>& elements() const { return elements_; }
  int64_t sum() const { return sum_; }
  int size() const { return static_cast<int>(elements_.size()); }

 private:
  std::vector<int64_t> elements_;
  int64_t sum_ = 0;
};

// Two interfaces with capacity S/2 each, one resource, one service per
// element with demand equal to the element, zero overhead, zero unit cost and
// unit activation cost. Throws kOddSum when S is odd.
SiaInstance PartitionToSia(const PartitionInstance& pp);

// Any exact solver; must return a proven optimum or report a limit through
// the solution status.
using SiaSolverFn = std::function<Solution(const SiaInstance&)>;

struct PartitionDecision {
  bool partition_exists = false;
  bool odd_sum = false;
  std::optional<Solution> solution;  // absent for odd sums
};

// The constructed instance has optimum exactly J iff an equal-sum partition
// exists, and at least J + 1 otherwise. Odd sums answer false without
// solving. Throws kSolverLimitHit when the solver stops short of a proof.
PartitionDecision AnalyzePartition(const PartitionInstance& pp,
                                   const SiaSolverFn& solver);
bool DecidePartition(const PartitionInstance& pp, const SiaSolverFn& solver);
bool DecidePartition(const PartitionInstance& pp,
                     const BnbConfig& config = {});

}  // namespace sia

#endif  // SIA_REDUCTION_HPP_
