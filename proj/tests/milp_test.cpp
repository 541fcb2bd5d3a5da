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


#include "sia/milp.hpp"

#include <map>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "sia/bnb.hpp"
#include "sia/error.hpp"
#include "test_util.hpp"

namespace sia {
namespace {

using testing::InstanceE1;
using testing::MakeInstance;

TEST(BigMTest, FormulaExamples) {
  SiaInstance plain = MakeInstance({{5}}, {{4}}, {{1}}, {1});
  EXPECT_EQ(BigM(plain, 0, 0, 0), 4);
  SiaInstance half = MakeInstance({{5}}, {{4}}, {{1}}, {1}, {{{Rational(1, 2)}}});
  EXPECT_EQ(BigM(half, 0, 0, 0), 2);
  SiaInstance zero = MakeInstance({{0}}, {{4}}, {{1}}, {1});
  EXPECT_EQ(BigM(zero, 0, 0, 0), 0);
}

TEST(BuildMilpTest, CountsForE1) {
  MilpModel m = BuildMilp(InstanceE1());
  EXPECT_EQ(m.num_vars(), 4);
  EXPECT_EQ(m.constraints.size(), 5u);
  EXPECT_EQ(m.variables[0].name, "x_1_1_1");
  EXPECT_EQ(m.variables[3].name, "act_2_1");
  EXPECT_EQ(m.variables[3].kind, VarKind::kBinary);
  EXPECT_EQ(m.variables[1].kind, VarKind::kInteger);
  EXPECT_EQ(*m.variables[1].upper, Rational(4));
}

TEST(BuildMilpTest, CountsFollowFormula) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    SiaInstance inst = testing::RandomInstance(rng, {});
    const int I = inst.num_interfaces(), J = inst.num_services(),
              K = inst.num_resources();
    MilpModel m = BuildMilp(inst);
    EXPECT_EQ(m.num_vars(), I * J * K + I * J);
    EXPECT_EQ(static_cast<int>(m.constraints.size()), J * K + I * K + I * J * K);
  }
}

TEST(BuildMilpTest, ZeroBigMFixesVariable) {
  SiaInstance inst = MakeInstance({{0}, {2}}, {{3}}, {{1}}, {1});
  MilpModel m = BuildMilp(inst);
  const MilpVariable& v = m.variables[m.layout->x(0, 0, 0)];
  EXPECT_EQ(v.lower, Rational(0));
  EXPECT_EQ(*v.upper, Rational(0));
}

TEST(ExportLpTest, E1Document) {
  const std::string lp = ExportLp(BuildMilp(InstanceE1()), "e1");
  EXPECT_NE(lp.find("x_1_1_1 + x_2_1_1 = 5"), std::string::npos) << lp;
  EXPECT_NE(lp.find("Minimize"), std::string::npos);
  EXPECT_NE(lp.find("Subject To"), std::string::npos);
  EXPECT_NE(lp.find("Bounds"), std::string::npos);
  EXPECT_NE(lp.find("General"), std::string::npos);
  EXPECT_NE(lp.find("Binary\n act_1_1 act_2_1"), std::string::npos) << lp;
  EXPECT_NE(lp.find("End"), std::string::npos);
}

TEST(ExportLpTest, OverheadCoefficientIsDecimal) {
  SiaInstance inst = MakeInstance({{2}}, {{3}}, {{1}}, {1}, {{{Rational(1, 2)}}});
  const std::string lp = ExportLp(BuildMilp(inst));
  EXPECT_NE(lp.find("capacity_1_1: 1.5 x_1_1_1 <= 3"), std::string::npos) << lp;
}

TEST(ExportLpTest, NonDecimalCoefficientIsNamed) {
  SiaInstance inst = MakeInstance({{1}}, {{3}}, {{Rational(1, 3)}}, {1});
  try {
    ExportLp(BuildMilp(inst));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonDecimalRational);
    EXPECT_NE(std::string(e.what()).find("1/3"), std::string::npos);
  }
}

TEST(ReadLpTest, ParsesHandWrittenModel) {
  MilpModel m = ReadLp(R"(\ hand written
minimize
  cost: 3 a + 2 b
  - c
subject to
  r1: a + b >= 2
  r2: a - c =< 4
  -2 b + c => -1
bounds
  a <= 5
  0 <= b <= 7
  c = 1
general
  a b
end
)");
  ASSERT_EQ(m.num_vars(), 3);
  EXPECT_EQ(m.variables[m.FindVariable("a")].kind, VarKind::kInteger);
  EXPECT_EQ(*m.variables[m.FindVariable("c")].upper, Rational(1));
  ASSERT_EQ(m.constraints.size(), 3u);
  EXPECT_EQ(m.constraints[1].relation, Relation::kLessEqual);
  EXPECT_EQ(m.constraints[2].relation, Relation::kGreaterEqual);
  EXPECT_EQ(m.constraints[2].rhs, Rational(-1));
  MilpResult r = SolveMilp(m, {});
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  // c = 1 caps b at 1 through the last row, so a = b = 1: 3 + 2 - 1.
  EXPECT_EQ(*r.objective, Rational(4));
}

TEST(ReadLpTest, RejectsMalformedInput) {
  EXPECT_THROW(ReadLp("Maximize\n obj: x\nEnd\n"), Error);
  EXPECT_THROW(ReadLp("Minimize\n obj: x\nSubject To\n c: x <= \nEnd\n"),
               Error);
  EXPECT_THROW(ReadLp("Minimize\n obj: x\nBounds\n x free\nEnd\n"), Error);
}

// Terms keyed by variable name, since the reader numbers variables in order
// of first appearance.
std::map<std::string, Rational> Named(const MilpModel& m,
                                      const std::vector<Term>& terms) {
  std::map<std::string, Rational> out;
  for (const Term& t : terms) out[m.variables[t.var].name] += t.coef;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TEST(ReadLpTest, RoundTripPreservesModel) {
  std::mt19937_64 rng(3);
  testing::RandomInstanceLimits limits;
  limits.overheads = {Rational(0), Rational(1, 4), Rational(1, 2)};
  for (int trial = 0; trial < 40; ++trial) {
    MilpModel m = BuildMilp(testing::RandomInstance(rng, limits));
    MilpModel back = ReadLp(ExportLp(m));
    // Variables that appear nowhere but the Bounds section are still listed.
    ASSERT_EQ(back.num_vars(), m.num_vars());
    for (int v = 0; v < m.num_vars(); ++v) {
      const int w = back.FindVariable(m.variables[v].name);
      ASSERT_GE(w, 0);
      EXPECT_EQ(back.variables[w].kind, m.variables[v].kind);
      EXPECT_EQ(back.variables[w].lower, m.variables[v].lower);
      EXPECT_EQ(back.variables[w].upper, m.variables[v].upper);
    }
    ASSERT_EQ(back.constraints.size(), m.constraints.size());
    EXPECT_EQ(Named(back, back.objective), Named(m, m.objective));
    for (size_t r = 0; r < m.constraints.size(); ++r) {
      const LinearConstraint& a = m.constraints[r];
      const LinearConstraint& b = back.constraints[r];
      EXPECT_EQ(b.name, a.name);
      EXPECT_EQ(b.relation, a.relation);
      EXPECT_EQ(b.rhs, a.rhs);
      EXPECT_EQ(Named(back, b.terms), Named(m, a.terms));
    }
  }
}

// Random allocations with each x within its big-M; the feasible ones are
// compared against the instance-level objective.
TEST(MilpPropertyTest, ObjectiveRoundTripOnFeasiblePoints) {
  std::mt19937_64 rng(4);
  testing::RandomInstanceLimits limits;
  limits.max_capacity = 8;
  limits.overheads = {Rational(0), Rational(1, 2)};
  int feasible = 0;
  for (int trial = 0; feasible < 1000 && trial < 200000; ++trial) {
    SiaInstance inst = testing::RandomInstance(rng, limits);
    MilpModel m = BuildMilp(inst);
    Allocation a = Allocation::ZerosFor(inst);
    for (int j = 0; j < inst.num_services(); ++j) {
      for (int k = 0; k < inst.num_resources(); ++k) {
        int64_t left = inst.demand(j, k);
        for (int i = 0; i < inst.num_interfaces() && left > 0; ++i) {
          const int64_t take =
              i + 1 == inst.num_interfaces()
                  ? left
                  : static_cast<int64_t>(rng() % (left + 1));
          a.set(i, j, k, take);
          left -= take;
        }
      }
    }
    std::vector<Rational> point = PointFromAllocation(m, a);
    const bool ok = CheckConstraints(inst, a).all_satisfied;
    ASSERT_EQ(m.IsFeasible(point), ok);
    if (!ok) continue;
    ++feasible;
    ASSERT_EQ(m.EvaluateObjective(point), Objective(inst, a));
    ASSERT_EQ(*AllocationFromPoint(m, point), a);
  }
  EXPECT_EQ(feasible, 1000);
}

TEST(MilpPropertyTest, LinkingSoundness) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    SiaInstance inst = testing::RandomInstance(rng, {});
    MilpModel m = BuildMilp(inst);
    const SiaLayout& L = *m.layout;
    std::vector<Rational> point(m.num_vars());
    for (int v = 0; v < L.num_x(); ++v) {
      point[v] = Rational(static_cast<int64_t>(rng() % 3));
    }
    for (int v = L.num_x(); v < m.num_vars(); ++v) {
      point[v] = Rational(static_cast<int64_t>(rng() % 2));
    }
    if (!m.IsFeasible(point)) continue;
    ++checked;
    for (int i = 0; i < L.interfaces; ++i)
      for (int j = 0; j < L.services; ++j)
        for (int k = 0; k < L.resources; ++k)
          if (point[L.x(i, j, k)].sign() > 0) {
            ASSERT_EQ(point[L.act(i, j)], Rational(1));
          }
    // Dropping wasted activations never costs more.
    Allocation a = *AllocationFromPoint(m, point);
    std::vector<Rational> tight = PointFromAllocation(m, a);
    ASSERT_TRUE(m.IsFeasible(tight));
    ASSERT_LE(m.EvaluateObjective(tight), m.EvaluateObjective(point));
  }
  EXPECT_GT(checked, 100);
}

TEST(MilpPropertyTest, BigMIsTight) {
  std::mt19937_64 rng(8);
  testing::RandomInstanceLimits limits;
  limits.overheads = {Rational(0), Rational(1, 4), Rational(1, 2)};
  for (int trial = 0; trial < 200; ++trial) {
    SiaInstance inst = testing::RandomInstance(rng, limits);
    for (int i = 0; i < inst.num_interfaces(); ++i)
      for (int j = 0; j < inst.num_services(); ++j)
        for (int k = 0; k < inst.num_resources(); ++k) {
          const int64_t over = BigM(inst, i, j, k) + 1;
          // Either demand or capacity rules out x = M + 1 by itself.
          const bool demand_blocks = over > inst.demand(j, k);
          const bool capacity_blocks =
              (Rational(1) + inst.overhead(i, j, k)) * Rational(over) >
              Rational(inst.capacity(i, k));
          EXPECT_TRUE(demand_blocks || capacity_blocks);
        }
  }
}

}  // namespace
}  // namespace sia
