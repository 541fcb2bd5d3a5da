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

#ifndef SIA_ORACLE_HPP_
#define SIA_ORACLE_HPP_

#include <cstdint>

#include "sia/instance.hpp"
#include "sia/rational.hpp"

namespace sia {

struct OracleOptions {
  // Upper bound on the number of demand-meeting allocations enumerated.
  uint64_t max_search_space = 10'000'000;
};

struct OracleResult {
  Rational objective;
  // Lexicographically first minimizer, comparing entries in (j, k, i) order.
  Allocation allocation;
  uint64_t leaves = 0;  // complete allocations evaluated
};

// Product over (j, k) of the number of ways to write d_jk as an ordered sum of
// per-interface amounts, each at most BigM(i, j, k). Saturates at
// UINT64_MAX.
uint64_t SearchSpaceSize(const SiaInstance& instance);

// Exhaustive minimization. Throws kSearchSpaceTooLarge when the search space
// exceeds the guard and kInfeasibleInstance when no allocation fits.
OracleResult BruteForceSolve(const SiaInstance& instance,
                             const OracleOptions& options = {});

}  // namespace sia

#endif  // SIA_ORACLE_HPP_
