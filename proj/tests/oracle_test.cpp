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


#include "sia/oracle.hpp"

#include <optional>
#include <random>

#include "gtest/gtest.h"
#include "sia/error.hpp"
#include "test_util.hpp"

namespace sia {
namespace {

using testing::InstanceE1;
using testing::MakeInstance;

// Walks every x in the full box [0, d_jk]^(I*J*K) in (j, k, i) lexicographic
// order, with no pruning at all.
struct NaiveResult {
  std::optional<Rational> best;
  Allocation argmin;
  uint64_t demand_meeting = 0;
};

NaiveResult Naive(const SiaInstance& inst) {
  const int I = inst.num_interfaces(), J = inst.num_services(),
            K = inst.num_resources();
  std::vector<std::tuple<int, int, int>> order;
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k)
      for (int i = 0; i < I; ++i) order.emplace_back(i, j, k);
  NaiveResult out;
  Allocation a = Allocation::ZerosFor(inst);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == order.size()) {
      ConstraintReport r = CheckConstraints(inst, a);
      if (!r.demand_satisfied()) return;
      ++out.demand_meeting;
      if (!r.capacity_satisfied()) return;
      Rational v = Objective(inst, a);
      if (!out.best || v < *out.best) {
        out.best = v;
        out.argmin = a;
      }
      return;
    }
    auto [i, j, k] = order[pos];
    for (int64_t v = 0; v <= inst.demand(j, k); ++v) {
      a.set(i, j, k, v);
      rec(pos + 1);
    }
    a.set(i, j, k, 0);
  };
  rec(0);
  return out;
}

TEST(OracleTest, E1) {
  OracleResult r = BruteForceSolve(InstanceE1());
  EXPECT_EQ(r.objective, Rational(27));
  EXPECT_EQ(r.allocation.at(0, 0, 0), 3);
  EXPECT_EQ(r.allocation.at(1, 0, 0), 2);
}

TEST(OracleTest, SingleFeasibleAllocation) {
  OracleResult r = BruteForceSolve(MakeInstance({{1}}, {{1}}, {{2}}, {5}));
  EXPECT_EQ(r.objective, Rational(7));
  EXPECT_EQ(r.allocation.at(0, 0, 0), 1);
}

TEST(OracleTest, AllZeroDemand) {
  OracleResult r = BruteForceSolve(MakeInstance({{0}}, {{0}}, {{1}}, {1}));
  EXPECT_EQ(r.objective, Rational(0));
}

TEST(OracleTest, DemandAboveCapacityIsInfeasible) {
  try {
    BruteForceSolve(MakeInstance({{8}}, {{3}, {4}}, {{1}, {1}}, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleInstance);
  }
}

TEST(OracleTest, GuardRejectsLargeSearch) {
  SiaInstance inst = MakeInstance({{9}, {9}, {9}}, {{30}, {30}, {30}},
                                  {{1}, {1}, {1}}, {1, 1, 1});
  OracleOptions options;
  options.max_search_space = 100;
  try {
    BruteForceSolve(inst, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchSpaceTooLarge);
  }
}

TEST(OracleTest, MatchesUnprunedEnumeration) {
  std::mt19937_64 rng(13);
  testing::RandomInstanceLimits limits;
  limits.max_demand = 3;
  limits.max_services = 2;
  limits.overheads = {Rational(0), Rational(1, 2)};
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SiaInstance inst = testing::RandomInstance(rng, limits);
    NaiveResult naive = Naive(inst);
    if (!naive.best) {
      EXPECT_THROW(BruteForceSolve(inst), Error);
      continue;
    }
    OracleResult r = BruteForceSolve(inst);
    EXPECT_EQ(r.objective, *naive.best);
    EXPECT_EQ(r.allocation, naive.argmin);
    EXPECT_TRUE(CheckConstraints(inst, r.allocation).all_satisfied);
    ++compared;
  }
  EXPECT_GT(compared, 50);
}

TEST(SearchSpaceSizeTest, CountsBoundedCompositions) {
  // d = 5 over caps (3, 4): x1 in 1..3.
  EXPECT_EQ(SearchSpaceSize(InstanceE1()), 3u);
  // Two independent (j, k) cells multiply.
  SiaInstance two = MakeInstance({{2, 1}}, {{5, 5}, {5, 5}}, {{1, 1}, {1, 1}},
                                 {1, 1});
  EXPECT_EQ(SearchSpaceSize(two), 3u * 2u);
}

}  // namespace
}  // namespace sia
