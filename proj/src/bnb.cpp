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

#include "sia/bnb.hpp"

#include <chrono>
#include <queue>

#include "sia/error.hpp"

namespace sia {
namespace {

struct OpenNode {
  int64_t id;
  int64_t parent;
  int depth;
  Rational bound;  // parent LP value
  std::vector<BoundChange> changes;
};

struct WorseBound {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

class NodePool {
 public:
  explicit NodePool(SearchOrder order) : order_(order) {}

  bool empty() const { return heap_.empty() && stack_.empty(); }

  void Push(OpenNode node) {
    if (order_ == SearchOrder::kBestBound) {
      heap_.push(std::move(node));
    } else {
      stack_.push_back(std::move(node));
    }
  }

  OpenNode Pop() {
    if (order_ == SearchOrder::kBestBound) {
      OpenNode top = heap_.top();
      heap_.pop();
      return top;
    }
    OpenNode top = std::move(stack_.back());
    stack_.pop_back();
    return top;
  }

  std::optional<Rational> MinBound() const {
    std::optional<Rational> best;
    if (!heap_.empty()) best = heap_.top().bound;
    for (const OpenNode& n : stack_) {
      if (!best || n.bound < *best) best = n.bound;
    }
    return best;
  }

 private:
  SearchOrder order_;
  std::priority_queue<OpenNode, std::vector<OpenNode>, WorseBound> heap_;
  std::vector<OpenNode> stack_;
};

// Index of the variable to branch on, or -1 when the point is integral.
int SelectBranchVariable(const MilpModel& model,
                         std::span<const Rational> point, BranchRule rule) {
  const VarKind first = rule == BranchRule::kActFirstMostFractional
                            ? VarKind::kBinary
                            : VarKind::kInteger;
  const VarKind second =
      first == VarKind::kBinary ? VarKind::kInteger : VarKind::kBinary;
  const Rational half(1, 2);
  for (VarKind kind : {first, second}) {
    int best = -1;
    Rational best_score;
    for (int v = 0; v < model.num_vars(); ++v) {
      if (model.variables[v].kind != kind || point[v].is_integer()) continue;
      Rational frac = point[v] - point[v].floor();
      Rational score = frac < half ? frac : Rational(1) - frac;
      if (best < 0 || score > best_score) {
        best = v;
        best_score = std::move(score);
      }
    }
    if (best >= 0) return best;
  }
  return -1;
}


// Every integer point's objective is a multiple of the returned step when all
// objective terms sit on integer variables.
std::optional<Rational> ObjectiveStep(const MilpModel& model) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const Term& t : model.objective) {
    if (t.coef.is_zero()) continue;
    if (model.variables[t.var].kind == VarKind::kContinuous) return std::nullopt;
    mpq_class q = t.coef.to_mpq();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const Term& t : model.objective) {
    if (t.coef.is_zero()) continue;
    mpq_class q = t.coef.to_mpq();
    mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return std::nullopt;
  return Rational(mpq_class(num_gcd, den_lcm));
}

Rational RoundUpToStep(const Rational& value,
                       const std::optional<Rational>& step) {
  if (!step) return value;
  return (value / *step).ceil() * *step;
}

// Single-row activity bound tightening. Returns false when some variable's
// bounds cross, which proves the node infeasible.
bool PropagateBounds(const LpProblem& lp, const std::vector<bool>& integral,
                     std::vector<Rational>& lower,
                     std::vector<std::optional<Rational>>& upper) {
  constexpr int kMaxPasses = 4;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    for (const LinearConstraint& row : lp.rows) {
      // sum a x <= rhs  (also for equalities)
      if (row.relation != Relation::kGreaterEqual) {
        Rational min_activity;
        for (const Term& t : row.terms) {
          if (t.coef.sign() > 0) {
            min_activity += t.coef * lower[t.var];
          } else if (t.coef.sign() < 0) {
            if (!upper[t.var]) goto skip_le;
            min_activity += t.coef * *upper[t.var];
          }
        }
        for (const Term& t : row.terms) {
          const int v = t.var;
          if (t.coef.sign() > 0) {
            Rational limit =
                (row.rhs - (min_activity - t.coef * lower[v])) / t.coef;
            if (integral[v]) limit = limit.floor();
            if (!upper[v] || limit < *upper[v]) {
              upper[v] = std::move(limit);
              changed = true;
            }
          } else if (t.coef.sign() < 0) {
            Rational limit =
                (row.rhs - (min_activity - t.coef * *upper[v])) / t.coef;
            if (integral[v]) limit = limit.ceil();
            if (limit > lower[v]) {
              lower[v] = std::move(limit);
              changed = true;
            }
          }
          if (upper[v] && *upper[v] < lower[v]) return false;
        }
      }
    skip_le:
      // sum a x >= rhs  (also for equalities)
      if (row.relation != Relation::kLessEqual) {
        Rational max_activity;
        for (const Term& t : row.terms) {
          if (t.coef.sign() > 0) {
            if (!upper[t.var]) goto skip_ge;
            max_activity += t.coef * *upper[t.var];
          } else if (t.coef.sign() < 0) {
            max_activity += t.coef * lower[t.var];
          }
        }
        for (const Term& t : row.terms) {
          const int v = t.var;
          if (t.coef.sign() > 0) {
            Rational limit =
                (row.rhs - (max_activity - t.coef * *upper[v])) / t.coef;
            if (integral[v]) limit = limit.ceil();
            if (limit > lower[v]) {
              lower[v] = std::move(limit);
              changed = true;
            }
          } else if (t.coef.sign() < 0) {
            Rational limit =
                (row.rhs - (max_activity - t.coef * lower[v])) / t.coef;
            if (integral[v]) limit = limit.floor();
            if (!upper[v] || limit < *upper[v]) {
              upper[v] = std::move(limit);
              changed = true;
            }
          }
          if (upper[v] && *upper[v] < lower[v]) return false;
        }
      }
    skip_ge:;
    }
    if (!changed) break;
  }
  return true;
}

}  // namespace

void ValidateConfig(const BnbConfig& config) {
  if (config.node_limit <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "node limit must be positive");
  }
  if (!(config.time_limit_seconds > 0)) {
    throw Error(ErrorCode::kInvalidConfig, "time limit must be positive");
  }
  if (config.lp_iteration_cap <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "LP iteration cap must be positive");
  }
}

std::string_view BranchRuleName(BranchRule rule) {
  return rule == BranchRule::kActFirstMostFractional ? "act-first" : "x-first";
}

std::string_view SearchOrderName(SearchOrder order) {
  return order == SearchOrder::kBestBound ? "best-bound" : "depth-first";
}

std::string_view PivotRuleName(PivotRule rule) {
  return rule == PivotRule::kBland ? "bland" : "dantzig";
}

std::optional<BranchRule> ParseBranchRule(std::string_view text) {
  if (text == "act-first") return BranchRule::kActFirstMostFractional;
  if (text == "x-first") return BranchRule::kXMostFractional;
  return std::nullopt;
}

std::optional<SearchOrder> ParseSearchOrder(std::string_view text) {
  if (text == "best-bound") return SearchOrder::kBestBound;
  if (text == "depth-first") return SearchOrder::kDepthFirst;
  return std::nullopt;
}

std::optional<PivotRule> ParsePivotRule(std::string_view text) {
  if (text == "bland") return PivotRule::kBland;
  if (text == "dantzig") return PivotRule::kDantzig;
  return std::nullopt;
}

MilpResult SolveMilp(const MilpModel& model, const BnbConfig& config,
                     const IncumbentHook& hook, BnbTrace* trace) {
  ValidateConfig(config);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  LpProblem lp = model.Relaxation();
  const std::vector<Rational> root_lower = lp.lower;
  const std::vector<std::optional<Rational>> root_upper = lp.upper;
  std::vector<bool> integral(model.variables.size());
  for (size_t v = 0; v < model.variables.size(); ++v)
    integral[v] = model.variables[v].kind != VarKind::kContinuous;
  const std::optional<Rational> step = ObjectiveStep(model);
  LpOptions lp_options;
  lp_options.pivot_rule = config.pivot_rule;
  lp_options.iteration_cap = config.lp_iteration_cap;

  MilpResult result;
  std::optional<Rational> incumbent_value;
  auto offer = [&](std::vector<Rational> candidate) {
    if (!model.IsFeasible(candidate)) return;
    Rational value = model.EvaluateObjective(candidate);
    if (!incumbent_value || value < *incumbent_value) {
      incumbent_value = value;
      result.point = std::move(candidate);
    }
  };

  NodePool pool(config.search_order);
  int64_t next_id = 0;
  pool.Push(OpenNode{next_id++, -1, 0, Rational(), {}});
  bool root = true;
  std::optional<SolveStatus> stopped;

  while (!pool.empty()) {
    if (result.stats.nodes >= config.node_limit) {
      stopped = SolveStatus::kNodeLimit;
      break;
    }
    if (elapsed() >= config.time_limit_seconds) {
      stopped = SolveStatus::kTimeLimit;
      break;
    }
    OpenNode node = pool.Pop();
    NodeRecord record;
    record.id = node.id;
    record.parent = node.parent;
    if (!root) record.parent_bound = node.bound;

    if (config.prune_by_bound && !root && incumbent_value &&
        node.bound >= *incumbent_value) {
      record.pruned_by_bound = true;
      record.incumbent_at_prune = incumbent_value;
      if (trace) {
        record.changes = std::move(node.changes);
        trace->nodes.push_back(std::move(record));
      }
      continue;
    }

    lp.lower = root_lower;
    lp.upper = root_upper;
    for (const BoundChange& c : node.changes) {
      if (c.is_upper) {
        lp.upper[c.var] = c.value;
      } else {
        lp.lower[c.var] = c.value;
      }
    }
    LpResult relaxed;
    if (PropagateBounds(lp, integral, lp.lower, lp.upper)) {
      relaxed = SolveLp(lp, lp_options);
    } else {
      relaxed.status = LpStatus::kInfeasible;
    }
    ++result.stats.nodes;
    result.stats.lp_iterations += relaxed.iterations;
    if (relaxed.status == LpStatus::kUnbounded) {
      throw Error(ErrorCode::kMalformedProblem,
                  "LP relaxation is unbounded; every variable needs finite "
                  "bounds");
    }
    if (root && relaxed.status == LpStatus::kOptimal) {
      result.stats.root_bound = relaxed.value;
    }
    root = false;
    if (relaxed.status == LpStatus::kInfeasible) {
      if (trace) {
        record.changes = std::move(node.changes);
        trace->nodes.push_back(std::move(record));
      }
      continue;
    }
    record.lp_bound = relaxed.value;

    const int branch_var =
        SelectBranchVariable(model, relaxed.x, config.branch_rule);
    if (branch_var < 0) offer(relaxed.x);
    if (hook) {
      if (auto candidate = hook(relaxed.x)) offer(std::move(*candidate));
    }

    const Rational node_bound = RoundUpToStep(relaxed.value, step);
    const bool dominated = incumbent_value && node_bound >= *incumbent_value;
    if (branch_var >= 0 && !(config.prune_by_bound && dominated)) {
      const Rational& v = relaxed.x[branch_var];
      OpenNode down{0, node.id, node.depth + 1, node_bound, node.changes};
      down.changes.push_back({branch_var, true, v.floor()});
      OpenNode up{0, node.id, node.depth + 1, node_bound, node.changes};
      up.changes.push_back({branch_var, false, v.ceil()});
      // Depth-first explores the nearer rounding first (pushed last).
      const bool up_first = v - v.floor() >= Rational(1, 2);
      OpenNode& first = up_first ? up : down;
      OpenNode& second = up_first ? down : up;
      first.id = next_id++;
      second.id = next_id++;
      pool.Push(std::move(second));
      pool.Push(std::move(first));
    } else if (branch_var >= 0) {
      record.pruned_by_bound = true;
      record.incumbent_at_prune = incumbent_value;
    }
    if (trace) {
      record.changes = std::move(node.changes);
      trace->nodes.push_back(std::move(record));
    }
  }

  result.stats.wall_seconds = elapsed();
  result.objective = incumbent_value;
  if (stopped) {
    result.status = *stopped;
    std::optional<Rational> open = pool.MinBound();
    if (open && incumbent_value) {
      result.stats.best_bound = std::min(*open, *incumbent_value);
    } else {
      result.stats.best_bound = open ? open : incumbent_value;
    }
  } else if (incumbent_value) {
    result.status = SolveStatus::kOptimal;
    result.stats.best_bound = incumbent_value;
  } else {
    result.status = SolveStatus::kInfeasible;
  }
  return result;
}

std::optional<Allocation> RoundIncumbent(const SiaInstance& instance,
                                         const MilpModel& model,
                                         std::span<const Rational> lp_point) {
  if (!model.layout) return std::nullopt;
  const SiaLayout& at = *model.layout;
  const int ni = instance.num_interfaces();
  const int nj = instance.num_services();
  const int nk = instance.num_resources();

  if (auto integral = AllocationFromPoint(model, lp_point)) {
    if (CheckConstraints(instance, *integral).all_satisfied) return integral;
    return std::nullopt;
  }

  Allocation alloc(ni, nj, nk);
  std::vector<Rational> room(static_cast<size_t>(ni) * nk);
  for (int i = 0; i < ni; ++i)
    for (int k = 0; k < nk; ++k) room[i * nk + k] = instance.capacity(i, k);
  std::vector<bool> open(static_cast<size_t>(ni) * nj, false);
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      for (int k = 0; k < nk; ++k) {
        const Rational& x = lp_point[at.x(i, j, k)];
        if (x.sign() > 0) open[i * nj + j] = true;
        auto whole = x.sign() > 0 ? x.floor().to_int64() : std::optional<int64_t>(0);
        if (!whole) return std::nullopt;
        alloc.set(i, j, k, *whole);
        if (*whole > 0) {
          room[i * nk + k] -=
              (Rational(1) + instance.overhead(i, j, k)) * Rational(*whole);
        }
      }
    }
  }

  for (int j = 0; j < nj; ++j) {
    for (int k = 0; k < nk; ++k) {
      int64_t remaining = instance.demand(j, k);
      for (int i = 0; i < ni; ++i) remaining -= alloc.at(i, j, k);
      while (remaining > 0) {
        // Cheapest open interface with room for a unit, else the cheapest
        // closed one counting its activation cost.
        int pick = -1;
        bool pick_open = false;
        Rational pick_cost;
        for (int i = 0; i < ni; ++i) {
          const Rational unit = Rational(1) + instance.overhead(i, j, k);
          if (room[i * nk + k] < unit) continue;
          const bool is_open = open[i * nj + j];
          Rational cost = instance.unit_cost(i, k);
          if (!is_open) cost += instance.activation_cost(i);
          bool better = pick < 0 || (is_open && !pick_open) ||
                        (is_open == pick_open && cost < pick_cost);
          if (better) {
            pick = i;
            pick_open = is_open;
            pick_cost = std::move(cost);
          }
        }
        if (pick < 0) return std::nullopt;
        const Rational unit = Rational(1) + instance.overhead(pick, j, k);
        const int64_t fit = *(room[pick * nk + k] / unit).floor().to_int64();
        const int64_t take = std::min(remaining, fit);
        alloc.set(pick, j, k, alloc.at(pick, j, k) + take);
        room[pick * nk + k] -= unit * Rational(take);
        open[pick * nj + j] = true;
        remaining -= take;
      }
    }
  }
  if (!CheckConstraints(instance, alloc).all_satisfied) return std::nullopt;
  return alloc;
}

Solution Solve(const SiaInstance& instance, const BnbConfig& config,
               BnbTrace* trace) {
  const MilpModel model = BuildMilp(instance);
  IncumbentHook hook = [&](std::span<const Rational> lp_point)
      -> std::optional<std::vector<Rational>> {
    auto alloc = RoundIncumbent(instance, model, lp_point);
    if (!alloc) return std::nullopt;
    return PointFromAllocation(model, *alloc);
  };
  MilpResult milp = SolveMilp(model, config, hook, trace);
  if (milp.status == SolveStatus::kInfeasible) {
    throw Error(ErrorCode::kInfeasibleInstance,
                "no integer allocation meets every demand within capacity");
  }
  if (!milp.point) {
    Solution empty;
    empty.allocation = Allocation::ZerosFor(instance);
    empty.activation = ActivationOf(empty.allocation);
    empty.status = milp.status;
    empty.stats = milp.stats;
    empty.has_incumbent = false;
    return empty;
  }
  return MakeSolution(instance, *AllocationFromPoint(model, *milp.point),
                      milp.status, milp.stats);
}

std::optional<Rational> RelaxationBound(const SiaInstance& instance,
                                        const BnbConfig& config) {
  LpOptions options;
  options.pivot_rule = config.pivot_rule;
  options.iteration_cap = config.lp_iteration_cap;
  LpResult lp = SolveLp(BuildMilp(instance).Relaxation(), options);
  if (lp.status != LpStatus::kOptimal) return std::nullopt;
  return lp.value;
}

}  // namespace sia
