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

#ifndef SIA_INSTANCE_HPP_
#define SIA_INSTANCE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sia/rational.hpp"

namespace sia {

// Unvalidated instance data, shaped exactly as it appears in an instance file.
struct RawInstance {
  int64_t num_interfaces = 0;
  int64_t num_services = 0;
  int64_t num_resources = 0;
  std::vector<std::vector<int64_t>> demand;          // [service][resource]
  std::vector<std::vector<int64_t>> capacity;        // [interface][resource]
  std::vector<std::vector<Rational>> unit_cost;      // [interface][resource]
  std::vector<Rational> activation_cost;             // [interface]
  std::vector<std::vector<std::vector<Rational>>> overhead;  // [i][j][k]; empty means all zero
};

// A validated service-to-interface assignment problem. Immutable once built;
// all indices are zero-based.
class SiaInstance {
 public:
  // Throws Error with kDimensionMismatch, kNegativeValue or kEmptyDimension.
  static SiaInstance Validate(const RawInstance& raw);

  int num_interfaces() const { return interfaces_; }
  int num_services() const { return services_; }
  int num_resources() const { return resources_; }

  int64_t demand(int j, int k) const { return demand_[j * resources_ + k]; }
  int64_t capacity(int i, int k) const {
    return capacity_[i * resources_ + k];
  }
  const Rational& unit_cost(int i, int k) const {
    return unit_cost_[i * resources_ + k];
  }
  const Rational& activation_cost(int i) const { return activation_cost_[i]; }
  const Rational& overhead(int i, int j, int k) const {
    return overhead_[(i * services_ + j) * resources_ + k];
  }

  RawInstance ToRaw() const;

 private:
  SiaInstance() = default;

  int interfaces_ = 0;
  int services_ = 0;
  int resources_ = 0;
  std::vector<int64_t> demand_;
  std::vector<int64_t> capacity_;
  std::vector<Rational> unit_cost_;
  std::vector<Rational> activation_cost_;
  std::vector<Rational> overhead_;
};

// Integer resource amounts x(i, j, k) granted to service j on interface i.
class Allocation {
 public:
  Allocation() = default;
  Allocation(int interfaces, int services, int resources);
  static Allocation ZerosFor(const SiaInstance& instance);

  int num_interfaces() const { return interfaces_; }
  int num_services() const { return services_; }
  int num_resources() const { return resources_; }

  int64_t at(int i, int j, int k) const { return x_[Offset(i, j, k)]; }
  // Throws kNegativeValue for v < 0.
  void set(int i, int j, int k, int64_t v);

  bool MatchesShapeOf(const SiaInstance& instance) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  size_t Offset(int i, int j, int k) const {
    return (static_cast<size_t>(i) * services_ + j) * resources_ + k;
  }

  int interfaces_ = 0;
  int services_ = 0;
  int resources_ = 0;
  std::vector<int64_t> x_;
};

// Binary interface-by-service activation indicator.
class Activation {
 public:
  Activation() = default;
  Activation(int interfaces, int services)
      : interfaces_(interfaces),
        services_(services),
        act_(static_cast<size_t>(interfaces) * services, 0) {}

  int num_interfaces() const { return interfaces_; }
  int num_services() const { return services_; }
  bool at(int i, int j) const { return act_[i * services_ + j] != 0; }
  void set(int i, int j, bool on) { act_[i * services_ + j] = on ? 1 : 0; }
  // Number of interfaces serving service j.
  int InterfacesUsedBy(int j) const;

  friend bool operator==(const Activation&, const Activation&) = default;

 private:
  int interfaces_ = 0;
  int services_ = 0;
  std::vector<uint8_t> act_;
};

enum class SolveStatus { kOptimal, kInfeasible, kNodeLimit, kTimeLimit };

std::string_view SolveStatusName(SolveStatus status);

struct SolveStats {
  int64_t nodes = 0;
  int64_t lp_iterations = 0;
  double wall_seconds = 0.0;
  std::optional<Rational> root_bound;  // LP relaxation value at the root
  std::optional<Rational> best_bound;  // proven lower bound on the optimum
};

struct Solution {
  Allocation allocation;
  Activation activation;
  Rational objective;
  SolveStatus status = SolveStatus::kOptimal;
  SolveStats stats;
  // False only when a limit was hit before any integer point was found.
  bool has_incumbent = true;
};

// Builds a Solution whose activation and objective are recomputed from the
// allocation.
Solution MakeSolution(const SiaInstance& instance, Allocation allocation,
                      SolveStatus status, SolveStats stats);

Activation ActivationOf(const Allocation& allocation);

// Utilization cost plus activation cost, with activation recomputed from the
// allocation. Throws kDimensionMismatch on a shape mismatch.
Rational Objective(const SiaInstance& instance, const Allocation& allocation);

struct DemandCheck {
  int service;
  int resource;
  int64_t assigned;
  int64_t demand;
  bool satisfied;
};

struct CapacityCheck {
  int interface;
  int resource;
  Rational used;  // sum over services of (1 + overhead) * x
  int64_t capacity;
  bool satisfied;
};

struct ConstraintReport {
  std::vector<DemandCheck> demand;      // one per (service, resource)
  std::vector<CapacityCheck> capacity;  // one per (interface, resource)
  bool all_satisfied = true;

  bool demand_satisfied() const;
  bool capacity_satisfied() const;
};

ConstraintReport CheckConstraints(const SiaInstance& instance,
                                  const Allocation& allocation);

// Total demand <= total capacity for every resource. Necessary, but not
// sufficient once overheads are nonzero.
bool AggregateFeasibility(const SiaInstance& instance);

// Sum over services of (interfaces used - 1), ignoring unserved services.
int64_t SplitCount(const Activation& activation);
int64_t SplitCount(const Solution& solution);

}  // namespace sia

#endif  // SIA_INSTANCE_HPP_
