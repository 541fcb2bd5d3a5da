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

#include <random>

#include "gtest/gtest.h"
#include "sia/error.hpp"
#include "sia/oracle.hpp"
#include "test_util.hpp"

namespace sia {
namespace {

using testing::SubsetSumPartitionExists;

TEST(PartitionInstanceTest, RejectsBadElements) {
  EXPECT_THROW(PartitionInstance({}), Error);
  EXPECT_THROW(PartitionInstance({1, 0}), Error);
  EXPECT_THROW(PartitionInstance({-2, 2}), Error);
}

TEST(PartitionToSiaTest, Construction) {
  SiaInstance inst = PartitionToSia(PartitionInstance({1, 2, 3}));
  EXPECT_EQ(inst.num_interfaces(), 2);
  EXPECT_EQ(inst.num_services(), 3);
  EXPECT_EQ(inst.num_resources(), 1);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(inst.demand(j, 0), j + 1);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(inst.capacity(i, 0), 3);
    EXPECT_EQ(inst.unit_cost(i, 0), Rational(0));
    EXPECT_EQ(inst.activation_cost(i), Rational(1));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(inst.overhead(i, j, 0), Rational(0));
  }
  SiaInstance pair = PartitionToSia(PartitionInstance({1, 1}));
  EXPECT_EQ(pair.capacity(0, 0), 1);
  EXPECT_EQ(pair.num_services(), 2);
}

TEST(PartitionToSiaTest, OddSum) {
  try {
    PartitionToSia(PartitionInstance({1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddSum);
  }
  EXPECT_FALSE(DecidePartition(PartitionInstance({1, 1, 1})));
}

TEST(DecidePartitionTest, WorkedExamples) {
  EXPECT_TRUE(DecidePartition(PartitionInstance({1, 2, 3})));
  EXPECT_FALSE(DecidePartition(PartitionInstance({3, 1})));
  EXPECT_TRUE(DecidePartition(PartitionInstance({2, 2, 2, 2})));
  PartitionDecision d = AnalyzePartition(PartitionInstance({2, 2, 2, 2}),
                                         [](const SiaInstance& inst) {
                                           return Solve(inst);
                                         });
  EXPECT_EQ(d.solution->objective, Rational(4));
}

TEST(DecidePartitionTest, SolverLimitIsNotAnAnswer) {
  SiaSolverFn limited = [](const SiaInstance& inst) {
    Solution s = Solve(inst);
    s.status = SolveStatus::kNodeLimit;
    return s;
  };
  try {
    DecidePartition(PartitionInstance({1, 2, 3}), limited);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolverLimitHit);
  }
}

TEST(DecidePartitionTest, AgreesWithSubsetSumAndOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int64_t> elements(n);
    for (auto& e : elements) e = 1 + static_cast<int64_t>(rng() % 10);
    PartitionInstance pp(elements);
    const bool expected = SubsetSumPartitionExists(elements);
    PartitionDecision d = AnalyzePartition(
        pp, [](const SiaInstance& inst) { return Solve(inst); });
    ASSERT_EQ(d.partition_exists, expected);
    if (d.odd_sum) continue;
    const Rational J(n);
    const Rational& cost = d.solution->objective;
    // Never strictly between J and J + 1.
    EXPECT_TRUE(cost == J || cost >= J + Rational(1));
    EXPECT_EQ(cost == J, expected);
    // Both interfaces carry exactly S / 2.
    for (int i = 0; i < 2; ++i) {
      int64_t load = 0;
      for (int j = 0; j < n; ++j) load += d.solution->allocation.at(i, j, 0);
      EXPECT_EQ(load, pp.sum() / 2);
    }
    if (n <= 5) {
      EXPECT_EQ(cost, BruteForceSolve(PartitionToSia(pp)).objective);
    }
  }
}

}  // namespace
}  // namespace sia
