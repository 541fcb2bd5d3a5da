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


#ifndef SIA_SIMBENCH_HPP_
#define SIA_SIMBENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sia/bnb.hpp"
#include "sia/instance.hpp"
#include "sia/rational.hpp"

namespace sia {

enum class DemandClass { kLow, kHigh, kMixedRandom };
enum class ActivationRegime { kLowF, kHighF, kMixedF };

std::string_view DemandClassName(DemandClass c);
std::string_view ActivationRegimeName(ActivationRegime r);

struct IntRange {
  int64_t lo = 0;
  int64_t hi = 0;
};

struct Scenario {
  DemandClass demand_class = DemandClass::kMixedRandom;
  ActivationRegime regime = ActivationRegime::kLowF;
  // "<demand>/<regime>", e.g. "MixedRandom/HighF".
  std::string name() const;
};

struct ScenarioSpec {
  IntRange num_services{3, 10};
  int num_interfaces = 4;
  int num_resources = 3;
  IntRange low_demand{1, 3};
  IntRange high_demand{6, 10};
  // Chance that a MixedRandom service draws from the high range.
  Rational mixed_high_probability{1, 2};
  // [interface][resource]; must be num_interfaces x num_resources.
  std::vector<std::vector<Rational>> unit_cost;
  Rational low_activation_cost{1};
  // HighF sets F to this multiple of the costliest single-service
  // utilization the demand ranges allow.
  Rational high_activation_multiplier{10};
  // Chance that an interface gets the high F under MixedF.
  Rational mixed_f_high_probability{1, 2};
  // b_ik = ceil(capacity_factor * total_k / num_interfaces).
  Rational capacity_factor{4};
  int64_t replications = 1000;
  uint64_t seed = 0;
  std::vector<Scenario> scenarios;
};

// The shipped defaults: the five scenario series and a non-uniform cost
// matrix. Identical to configs/default_bench.json.
ScenarioSpec DefaultScenarioSpec();

// Throws kInvalidConfig.
void ValidateSpec(const ScenarioSpec& spec);

// The F used under HighF, a constant of the spec.
Rational HighActivationCost(const ScenarioSpec& spec);

// Pure function of (spec, demand class, regime, J, index). Demands depend
// only on the demand class, so scenarios sharing a class see the same
// demands and capacities and differ only in F. The services of a smaller J
// are a prefix of those of a larger J for the same index.
SiaInstance GenerateInstance(const ScenarioSpec& spec, const Scenario& scenario,
                             int num_services, int64_t index);

struct ReplicationRecord {
  int num_services = 0;
  int scenario = 0;  // index into spec.scenarios
  int64_t index = 0;
  SolveStatus status = SolveStatus::kOptimal;
  Rational objective;
  int64_t splits = 0;
  int64_t nodes = 0;
};

struct BenchRow {
  int num_services = 0;
  std::string scenario;
  Rational mean_cost;
  Rational mean_splits;
  int64_t replications = 0;  // solved to optimality
  int64_t unsolved = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // J-major, then scenario order
  std::vector<ReplicationRecord> records;
  std::vector<std::string> scenario_names;
  int64_t total_unsolved = 0;
  int64_t total_replications = 0;
  // More than 1% of replications hit a solver limit.
  bool too_many_unsolved = false;
};

struct BenchOptions {
  int jobs = 1;
};

BenchReport RunBenchmark(const ScenarioSpec& spec, const BnbConfig& config,
                         const BenchOptions& options = {});

std::string ReportCsv(const BenchReport& report);

enum class ChartMetric { kCost, kSplits };
std::string ReportSvg(const BenchReport& report, ChartMetric metric);

// Writes report.csv, cost_vs_services.svg and splits_vs_services.svg.
// Throws kIoFailure.
void WriteReport(const BenchReport& report, const std::filesystem::path& dir);

// Config file I/O. The solver section, when present, fills *config.
ScenarioSpec ParseScenarioSpec(const std::string& text,
                               BnbConfig* config = nullptr);
ScenarioSpec LoadScenarioSpec(const std::filesystem::path& path,
                              BnbConfig* config = nullptr);
std::string ScenarioSpecToJson(const ScenarioSpec& spec,
                               const BnbConfig& config);

}  // namespace sia

#endif  // SIA_SIMBENCH_HPP_
