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

#include <algorithm>

#include "sia/error.hpp"

namespace sia {
namespace {

std::string Index(std::initializer_list<int> idx) {
  std::string out;
  for (int v : idx) out += "_" + std::to_string(v + 1);
  return out;
}

bool Satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

}  // namespace

int MilpModel::FindVariable(std::string_view name) const {
  for (size_t v = 0; v < variables.size(); ++v) {
    if (variables[v].name == name) return static_cast<int>(v);
  }
  return -1;
}

Rational MilpModel::EvaluateObjective(std::span<const Rational> point) const {
  Rational total;
  for (const Term& t : objective) {
    if (!point[t.var].is_zero()) total += t.coef * point[t.var];
  }
  return total;
}

bool MilpModel::IsFeasible(std::span<const Rational> point) const {
  if (point.size() != variables.size()) return false;
  for (size_t v = 0; v < variables.size(); ++v) {
    const MilpVariable& var = variables[v];
    if (point[v] < var.lower) return false;
    if (var.upper && point[v] > *var.upper) return false;
    if (var.kind != VarKind::kContinuous && !point[v].is_integer()) return false;
  }
  for (const LinearConstraint& row : constraints) {
    Rational lhs;
    for (const Term& t : row.terms) {
      if (!point[t.var].is_zero()) lhs += t.coef * point[t.var];
    }
    if (!Satisfies(lhs, row.relation, row.rhs)) return false;
  }
  return true;
}

LpProblem MilpModel::Relaxation() const {
  LpProblem lp;
  lp.objective.assign(variables.size(), Rational());
  for (const Term& t : objective) lp.objective[t.var] += t.coef;
  for (const MilpVariable& var : variables) {
    lp.lower.push_back(var.lower);
    lp.upper.push_back(var.upper);
  }
  lp.rows = constraints;
  return lp;
}

int64_t BigM(const SiaInstance& instance, int i, int j, int k) {
  const Rational usable = Rational(instance.capacity(i, k)) /
                          (Rational(1) + instance.overhead(i, j, k));
  const int64_t cap = *usable.floor().to_int64();
  return std::min(instance.demand(j, k), cap);
}

MilpModel BuildMilp(const SiaInstance& instance) {
  const int ni = instance.num_interfaces();
  const int nj = instance.num_services();
  const int nk = instance.num_resources();
  MilpModel model;
  model.layout = SiaLayout{ni, nj, nk};
  const SiaLayout& at = *model.layout;
  model.variables.resize(at.num_x() + at.num_act());

  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      for (int k = 0; k < nk; ++k) {
        MilpVariable& x = model.variables[at.x(i, j, k)];
        x.name = "x" + Index({i, j, k});
        x.kind = VarKind::kInteger;
        x.lower = 0;
        x.upper = Rational(BigM(instance, i, j, k));
      }
      MilpVariable& act = model.variables[at.act(i, j)];
      act.name = "act" + Index({i, j});
      act.kind = VarKind::kBinary;
      act.lower = 0;
      act.upper = Rational(1);
    }
  }

  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      for (int k = 0; k < nk; ++k) {
        if (!instance.unit_cost(i, k).is_zero())
          model.objective.push_back({at.x(i, j, k), instance.unit_cost(i, k)});
      }
    }
  }
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      if (!instance.activation_cost(i).is_zero())
        model.objective.push_back({at.act(i, j), instance.activation_cost(i)});
    }
  }

  for (int j = 0; j < nj; ++j) {
    for (int k = 0; k < nk; ++k) {
      LinearConstraint row;
      row.name = "demand" + Index({j, k});
      for (int i = 0; i < ni; ++i) row.terms.push_back({at.x(i, j, k), 1});
      row.relation = Relation::kEqual;
      row.rhs = instance.demand(j, k);
      model.constraints.push_back(std::move(row));
    }
  }
  for (int i = 0; i < ni; ++i) {
    for (int k = 0; k < nk; ++k) {
      LinearConstraint row;
      row.name = "capacity" + Index({i, k});
      for (int j = 0; j < nj; ++j) {
        row.terms.push_back(
            {at.x(i, j, k), Rational(1) + instance.overhead(i, j, k)});
      }
      row.relation = Relation::kLessEqual;
      row.rhs = instance.capacity(i, k);
      model.constraints.push_back(std::move(row));
    }
  }
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      for (int k = 0; k < nk; ++k) {
        LinearConstraint row;
        row.name = "link" + Index({i, j, k});
        row.terms.push_back({at.x(i, j, k), 1});
        // With M = 0 the row just pins x to zero.
        if (const int64_t m = BigM(instance, i, j, k); m > 0) {
          row.terms.push_back({at.act(i, j), -Rational(m)});
        }
        row.relation = Relation::kLessEqual;
        row.rhs = 0;
        model.constraints.push_back(std::move(row));
      }
    }
  }
  return model;
}

std::vector<Rational> PointFromAllocation(const MilpModel& model,
                                          const Allocation& allocation) {
  if (!model.layout) {
    throw Error(ErrorCode::kDimensionMismatch, "model has no SIA layout");
  }
  const SiaLayout& at = *model.layout;
  if (allocation.num_interfaces() != at.interfaces ||
      allocation.num_services() != at.services ||
      allocation.num_resources() != at.resources) {
    throw Error(ErrorCode::kDimensionMismatch,
                "allocation shape does not match the model");
  }
  std::vector<Rational> point(model.variables.size());
  Activation act = ActivationOf(allocation);
  for (int i = 0; i < at.interfaces; ++i) {
    for (int j = 0; j < at.services; ++j) {
      for (int k = 0; k < at.resources; ++k)
        point[at.x(i, j, k)] = allocation.at(i, j, k);
      point[at.act(i, j)] = act.at(i, j) ? 1 : 0;
    }
  }
  return point;
}

std::optional<Allocation> AllocationFromPoint(const MilpModel& model,
                                              std::span<const Rational> point) {
  if (!model.layout) return std::nullopt;
  const SiaLayout& at = *model.layout;
  Allocation alloc(at.interfaces, at.services, at.resources);
  for (int i = 0; i < at.interfaces; ++i) {
    for (int j = 0; j < at.services; ++j) {
      for (int k = 0; k < at.resources; ++k) {
        auto v = point[at.x(i, j, k)].to_int64();
        if (!v || *v < 0) return std::nullopt;
        alloc.set(i, j, k, *v);
      }
    }
  }
  return alloc;
}

}  // namespace sia
