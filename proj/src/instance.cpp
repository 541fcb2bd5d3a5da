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

#include "sia/instance.hpp"

#include <algorithm>
#include <sstream>

#include "sia/error.hpp"

namespace sia {
namespace {

std::string Path(const char* field, std::initializer_list<size_t> idx) {
  std::ostringstream os;
  os << field;
  for (size_t v : idx) os << '[' << v << ']';
  return os.str();
}

void CheckRows(const char* field, size_t got, int64_t want) {
  if (static_cast<int64_t>(got) != want) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(field) + " has " + std::to_string(got) +
                    " rows, expected " + std::to_string(want));
  }
}

void CheckCols(const char* field, size_t row, size_t got, int64_t want) {
  if (static_cast<int64_t>(got) != want) {
    throw Error(ErrorCode::kDimensionMismatch,
                Path(field, {row}) + " has " + std::to_string(got) +
                    " entries, expected " + std::to_string(want));
  }
}

void CheckNonNegative(bool ok, const std::string& where) {
  if (!ok) throw Error(ErrorCode::kNegativeValue, where + " is negative");
}

void CheckShape(const Allocation& allocation, const SiaInstance& instance) {
  if (!allocation.MatchesShapeOf(instance)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "allocation shape does not match the instance");
  }
}

}  // namespace

SiaInstance SiaInstance::Validate(const RawInstance& raw) {
  const std::pair<const char*, int64_t> counts[] = {
      {"num_interfaces", raw.num_interfaces},
      {"num_services", raw.num_services},
      {"num_resources", raw.num_resources}};
  for (const auto& [name, value] : counts) {
    if (value == 0) {
      throw Error(ErrorCode::kEmptyDimension, std::string(name) + " is zero");
    }
    CheckNonNegative(value > 0, name);
  }
  const int64_t ni = raw.num_interfaces;
  const int64_t nj = raw.num_services;
  const int64_t nk = raw.num_resources;

  CheckRows("demand", raw.demand.size(), nj);
  for (size_t j = 0; j < raw.demand.size(); ++j)
    CheckCols("demand", j, raw.demand[j].size(), nk);
  CheckRows("capacity", raw.capacity.size(), ni);
  for (size_t i = 0; i < raw.capacity.size(); ++i)
    CheckCols("capacity", i, raw.capacity[i].size(), nk);
  CheckRows("unit_cost", raw.unit_cost.size(), ni);
  for (size_t i = 0; i < raw.unit_cost.size(); ++i)
    CheckCols("unit_cost", i, raw.unit_cost[i].size(), nk);
  CheckRows("activation_cost", raw.activation_cost.size(), ni);
  if (!raw.overhead.empty()) {
    CheckRows("overhead", raw.overhead.size(), ni);
    for (size_t i = 0; i < raw.overhead.size(); ++i) {
      CheckCols("overhead", i, raw.overhead[i].size(), nj);
      for (size_t j = 0; j < raw.overhead[i].size(); ++j) {
        if (static_cast<int64_t>(raw.overhead[i][j].size()) != nk) {
          throw Error(ErrorCode::kDimensionMismatch,
                      Path("overhead", {i, j}) + " has " +
                          std::to_string(raw.overhead[i][j].size()) +
                          " entries, expected " + std::to_string(nk));
        }
      }
    }
  }

  SiaInstance inst;
  inst.interfaces_ = static_cast<int>(ni);
  inst.services_ = static_cast<int>(nj);
  inst.resources_ = static_cast<int>(nk);
  for (size_t j = 0; j < raw.demand.size(); ++j) {
    for (size_t k = 0; k < raw.demand[j].size(); ++k) {
      CheckNonNegative(raw.demand[j][k] >= 0, Path("demand", {j, k}));
      inst.demand_.push_back(raw.demand[j][k]);
    }
  }
  for (size_t i = 0; i < raw.capacity.size(); ++i) {
    for (size_t k = 0; k < raw.capacity[i].size(); ++k) {
      CheckNonNegative(raw.capacity[i][k] >= 0, Path("capacity", {i, k}));
      inst.capacity_.push_back(raw.capacity[i][k]);
    }
  }
  for (size_t i = 0; i < raw.unit_cost.size(); ++i) {
    for (size_t k = 0; k < raw.unit_cost[i].size(); ++k) {
      CheckNonNegative(raw.unit_cost[i][k].sign() >= 0,
                       Path("unit_cost", {i, k}));
      inst.unit_cost_.push_back(raw.unit_cost[i][k]);
    }
  }
  for (size_t i = 0; i < raw.activation_cost.size(); ++i) {
    CheckNonNegative(raw.activation_cost[i].sign() >= 0,
                     Path("activation_cost", {i}));
    inst.activation_cost_.push_back(raw.activation_cost[i]);
  }
  inst.overhead_.assign(static_cast<size_t>(ni * nj * nk), Rational(0));
  for (size_t i = 0; i < raw.overhead.size(); ++i) {
    for (size_t j = 0; j < raw.overhead[i].size(); ++j) {
      for (size_t k = 0; k < raw.overhead[i][j].size(); ++k) {
        CheckNonNegative(raw.overhead[i][j][k].sign() >= 0,
                         Path("overhead", {i, j, k}));
        inst.overhead_[(i * nj + j) * nk + k] = raw.overhead[i][j][k];
      }
    }
  }
  return inst;
}

RawInstance SiaInstance::ToRaw() const {
  RawInstance raw;
  raw.num_interfaces = interfaces_;
  raw.num_services = services_;
  raw.num_resources = resources_;
  raw.demand.assign(services_, std::vector<int64_t>(resources_));
  for (int j = 0; j < services_; ++j)
    for (int k = 0; k < resources_; ++k) raw.demand[j][k] = demand(j, k);
  raw.capacity.assign(interfaces_, std::vector<int64_t>(resources_));
  raw.unit_cost.assign(interfaces_, std::vector<Rational>(resources_));
  for (int i = 0; i < interfaces_; ++i) {
    for (int k = 0; k < resources_; ++k) {
      raw.capacity[i][k] = capacity(i, k);
      raw.unit_cost[i][k] = unit_cost(i, k);
    }
  }
  raw.activation_cost = activation_cost_;
  bool any_overhead = std::any_of(overhead_.begin(), overhead_.end(),
                                  [](const Rational& a) { return !a.is_zero(); });
  if (any_overhead) {
    raw.overhead.assign(
        interfaces_, std::vector<std::vector<Rational>>(
                         services_, std::vector<Rational>(resources_)));
    for (int i = 0; i < interfaces_; ++i)
      for (int j = 0; j < services_; ++j)
        for (int k = 0; k < resources_; ++k)
          raw.overhead[i][j][k] = overhead(i, j, k);
  }
  return raw;
}

Allocation::Allocation(int interfaces, int services, int resources)
    : interfaces_(interfaces),
      services_(services),
      resources_(resources),
      x_(static_cast<size_t>(interfaces) * services * resources, 0) {}

Allocation Allocation::ZerosFor(const SiaInstance& instance) {
  return Allocation(instance.num_interfaces(), instance.num_services(),
                    instance.num_resources());
}

void Allocation::set(int i, int j, int k, int64_t v) {
  if (v < 0) {
    throw Error(ErrorCode::kNegativeValue,
                "allocation entry " + Path("x", {size_t(i), size_t(j), size_t(k)}));
  }
  x_[Offset(i, j, k)] = v;
}

bool Allocation::MatchesShapeOf(const SiaInstance& instance) const {
  return interfaces_ == instance.num_interfaces() &&
         services_ == instance.num_services() &&
         resources_ == instance.num_resources();
}

int Activation::InterfacesUsedBy(int j) const {
  int used = 0;
  for (int i = 0; i < interfaces_; ++i) used += at(i, j) ? 1 : 0;
  return used;
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kNodeLimit: return "NodeLimit";
    case SolveStatus::kTimeLimit: return "TimeLimit";
  }
  return "Unknown";
}

Solution MakeSolution(const SiaInstance& instance, Allocation allocation,
                      SolveStatus status, SolveStats stats) {
  Solution s;
  s.activation = ActivationOf(allocation);
  s.objective = Objective(instance, allocation);
  s.allocation = std::move(allocation);
  s.status = status;
  s.stats = std::move(stats);
  return s;
}

Activation ActivationOf(const Allocation& allocation) {
  Activation act(allocation.num_interfaces(), allocation.num_services());
  for (int i = 0; i < allocation.num_interfaces(); ++i) {
    for (int j = 0; j < allocation.num_services(); ++j) {
      for (int k = 0; k < allocation.num_resources(); ++k) {
        if (allocation.at(i, j, k) > 0) {
          act.set(i, j, true);
          break;
        }
      }
    }
  }
  return act;
}

Rational Objective(const SiaInstance& instance, const Allocation& allocation) {
  CheckShape(allocation, instance);
  Rational total;
  for (int i = 0; i < instance.num_interfaces(); ++i) {
    for (int k = 0; k < instance.num_resources(); ++k) {
      int64_t used = 0;
      for (int j = 0; j < instance.num_services(); ++j)
        used += allocation.at(i, j, k);
      if (used != 0) total += instance.unit_cost(i, k) * Rational(used);
    }
  }
  Activation act = ActivationOf(allocation);
  for (int i = 0; i < instance.num_interfaces(); ++i) {
    int64_t active = 0;
    for (int j = 0; j < instance.num_services(); ++j) active += act.at(i, j);
    if (active != 0) total += instance.activation_cost(i) * Rational(active);
  }
  return total;
}

bool ConstraintReport::demand_satisfied() const {
  return std::all_of(demand.begin(), demand.end(),
                     [](const DemandCheck& c) { return c.satisfied; });
}

bool ConstraintReport::capacity_satisfied() const {
  return std::all_of(capacity.begin(), capacity.end(),
                     [](const CapacityCheck& c) { return c.satisfied; });
}

ConstraintReport CheckConstraints(const SiaInstance& instance,
                                  const Allocation& allocation) {
  CheckShape(allocation, instance);
  ConstraintReport report;
  for (int j = 0; j < instance.num_services(); ++j) {
    for (int k = 0; k < instance.num_resources(); ++k) {
      int64_t assigned = 0;
      for (int i = 0; i < instance.num_interfaces(); ++i)
        assigned += allocation.at(i, j, k);
      bool ok = assigned == instance.demand(j, k);
      report.demand.push_back({j, k, assigned, instance.demand(j, k), ok});
      report.all_satisfied = report.all_satisfied && ok;
    }
  }
  for (int i = 0; i < instance.num_interfaces(); ++i) {
    for (int k = 0; k < instance.num_resources(); ++k) {
      Rational used;
      for (int j = 0; j < instance.num_services(); ++j) {
        int64_t x = allocation.at(i, j, k);
        if (x != 0) used += (Rational(1) + instance.overhead(i, j, k)) * x;
      }
      bool ok = used <= Rational(instance.capacity(i, k));
      report.capacity.push_back({i, k, used, instance.capacity(i, k), ok});
      report.all_satisfied = report.all_satisfied && ok;
    }
  }
  return report;
}

bool AggregateFeasibility(const SiaInstance& instance) {
  for (int k = 0; k < instance.num_resources(); ++k) {
    int64_t demand = 0;
    int64_t capacity = 0;
    for (int j = 0; j < instance.num_services(); ++j)
      demand += instance.demand(j, k);
    for (int i = 0; i < instance.num_interfaces(); ++i)
      capacity += instance.capacity(i, k);
    if (demand > capacity) return false;
  }
  return true;
}

int64_t SplitCount(const Activation& activation) {
  int64_t splits = 0;
  for (int j = 0; j < activation.num_services(); ++j) {
    splits += std::max(0, activation.InterfacesUsedBy(j) - 1);
  }
  return splits;
}

int64_t SplitCount(const Solution& solution) {
  return SplitCount(solution.activation);
}

}  // namespace sia
