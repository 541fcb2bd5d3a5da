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

#include <limits>
#include <vector>

#include "sia/error.hpp"
#include "sia/milp.hpp"

namespace sia {
namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t SatAdd(uint64_t a, uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

uint64_t SatMul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

class Enumerator {
 public:
  explicit Enumerator(const SiaInstance& instance)
      : inst_(instance),
        ni_(instance.num_interfaces()),
        nj_(instance.num_services()),
        nk_(instance.num_resources()),
        current_(Allocation::ZerosFor(instance)),
        room_(static_cast<size_t>(ni_) * nk_) {
    for (int i = 0; i < ni_; ++i)
      for (int k = 0; k < nk_; ++k) room_[i * nk_ + k] = instance.capacity(i, k);
    bound_.resize(static_cast<size_t>(ni_) * nj_ * nk_);
    for (int i = 0; i < ni_; ++i)
      for (int j = 0; j < nj_; ++j)
        for (int k = 0; k < nk_; ++k)
          bound_[(i * nj_ + j) * nk_ + k] = BigM(instance, i, j, k);
  }

  bool Run(OracleResult& out) {
    Pair(0);
    if (!best_value_) return false;
    out.objective = *best_value_;
    out.allocation = best_;
    out.leaves = leaves_;
    return true;
  }

 private:
  void Pair(int p) {
    if (p == nj_ * nk_) {
      Leaf();
      return;
    }
    const int j = p / nk_;
    const int k = p % nk_;
    Part(p, j, k, 0, inst_.demand(j, k));
  }

  // Assigns x(i, j, k) for interface i onward with `remaining` units left.
  void Part(int p, int j, int k, int i, int64_t remaining) {
    const int64_t cap = bound_[(i * nj_ + j) * nk_ + k];
    const Rational unit = Rational(1) + inst_.overhead(i, j, k);
    Rational& room = room_[i * nk_ + k];
    const int64_t lo = i == ni_ - 1 ? remaining : 0;
    const int64_t hi = std::min(remaining, cap);
    for (int64_t v = lo; v <= hi; ++v) {
      const Rational use = unit * Rational(v);
      if (use > room) break;
      room -= use;
      current_.set(i, j, k, v);
      if (v > 0) utilization_ += inst_.unit_cost(i, k) * Rational(v);
      if (i == ni_ - 1) {
        Pair(p + 1);
      } else {
        Part(p, j, k, i + 1, remaining - v);
      }
      if (v > 0) utilization_ -= inst_.unit_cost(i, k) * Rational(v);
      current_.set(i, j, k, 0);
      room += use;
    }
  }

  void Leaf() {
    ++leaves_;
    Rational value = utilization_;
    for (int i = 0; i < ni_; ++i) {
      for (int j = 0; j < nj_; ++j) {
        for (int k = 0; k < nk_; ++k) {
          if (current_.at(i, j, k) > 0) {
            value += inst_.activation_cost(i);
            break;
          }
        }
      }
    }
    if (!best_value_ || value < *best_value_) {
      best_value_ = std::move(value);
      best_ = current_;
    }
  }

  const SiaInstance& inst_;
  const int ni_;
  const int nj_;
  const int nk_;
  Allocation current_;
  Allocation best_;
  std::optional<Rational> best_value_;
  std::vector<Rational> room_;
  std::vector<int64_t> bound_;
  Rational utilization_;
  uint64_t leaves_ = 0;
};

}  // namespace

uint64_t SearchSpaceSize(const SiaInstance& instance) {
  uint64_t total = 1;
  for (int j = 0; j < instance.num_services(); ++j) {
    for (int k = 0; k < instance.num_resources(); ++k) {
      const int64_t d = instance.demand(j, k);
      // ways[s]: ordered ways to reach s using the interfaces seen so far.
      std::vector<uint64_t> ways(static_cast<size_t>(d) + 1, 0);
      ways[0] = 1;
      for (int i = 0; i < instance.num_interfaces(); ++i) {
        const int64_t cap = BigM(instance, i, j, k);
        std::vector<uint64_t> next(ways.size(), 0);
        for (int64_t s = 0; s <= d; ++s) {
          for (int64_t t = 0; t <= std::min(cap, s); ++t)
            next[s] = SatAdd(next[s], ways[s - t]);
        }
        ways.swap(next);
      }
      total = SatMul(total, ways[d]);
    }
  }
  return total;
}

OracleResult BruteForceSolve(const SiaInstance& instance,
                             const OracleOptions& options) {
  const uint64_t space = SearchSpaceSize(instance);
  if (space > options.max_search_space) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "search space of " +
                    (space == kSaturated ? std::string("more than 2^64")
                                         : std::to_string(space)) +
                    " allocations exceeds the guard of " +
                    std::to_string(options.max_search_space));
  }
  OracleResult out;
  if (!Enumerator(instance).Run(out)) {
    throw Error(ErrorCode::kInfeasibleInstance,
                "no allocation meets every demand within capacity");
  }
  return out;
}

}  // namespace sia
