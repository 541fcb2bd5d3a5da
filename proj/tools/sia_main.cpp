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


// Command-line front end: solve, oracle, reduce, bench, export-lp.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sia/bnb.hpp"
#include "sia/error.hpp"
#include "sia/instance.hpp"
#include "sia/instance_io.hpp"
#include "sia/milp.hpp"
#include "sia/oracle.hpp"
#include "sia/reduction.hpp"
#include "sia/simbench.hpp"

namespace sia {
namespace {

// Stable exit codes. Keep in sync with the table in README.md.
enum Exit : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInfeasible = 2,
  kExitLimit = 3,
  kExitSearchSpace = 4,
  kExitIo = 5,
  kExitTooManyUnsolved = 6,
  kExitNonDecimal = 7,
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleInstance:
      return kExitInfeasible;
    case ErrorCode::kSolverLimitHit:
    case ErrorCode::kHardCapExceeded:
      return kExitLimit;
    case ErrorCode::kSearchSpaceTooLarge:
      return kExitSearchSpace;
    case ErrorCode::kIoFailure:
      return kExitIo;
    case ErrorCode::kTooManyUnsolved:
      return kExitTooManyUnsolved;
    case ErrorCode::kNonDecimalRational:
      return kExitNonDecimal;
    default:
      return kExitParse;
  }
}

constexpr const char* kSchemas = R"(File formats
  Instance (JSON object; unknown fields are rejected):
    num_interfaces, num_services, num_resources   positive integers I, J, K
    demand           J x K nonnegative integers
    capacity         I x K nonnegative integers
    unit_cost        I x K rationals
    activation_cost  I rationals
    overhead         optional I x J x K rationals (default all zero)
  Rationals are JSON integers or strings "p", "p/q" or finite decimals.

  Bench config (JSON object; see configs/default_bench.json):
    num_services [lo, hi], num_interfaces, num_resources,
    demand {low [lo, hi], high [lo, hi], mixed_high_probability},
    unit_cost I x K, activation_cost {low, high_multiplier,
    mixed_high_probability}, capacity_factor, replications, seed,
    scenarios ["<Low|High|MixedRandom>/<LowF|HighF|MixedF>", ...],
    solver {node_limit, time_limit, branch_rule, search_order, pivot_rule}
    (solver is optional).

Exit codes
  0 success   1 parse/validation error   2 infeasible   3 solver limit hit
  4 oracle search space too large   5 I/O failure
  6 too many unsolved bench replications   7 coefficient not decimal)";

struct SolverFlags {
  int64_t node_limit = BnbConfig{}.node_limit;
  double time_limit = BnbConfig{}.time_limit_seconds;
  std::string branch_rule{BranchRuleName(BnbConfig{}.branch_rule)};
  std::string search_order{SearchOrderName(BnbConfig{}.search_order)};
  std::string pivot_rule{PivotRuleName(BnbConfig{}.pivot_rule)};
};

void AddSolverFlags(CLI::App* cmd, SolverFlags* flags) {
  cmd->add_option("--node-limit", flags->node_limit,
                  "Branch-and-bound node limit")
      ->capture_default_str();
  cmd->add_option("--time-limit", flags->time_limit,
                  "Wall-clock limit in seconds")
      ->capture_default_str();
  cmd->add_option("--branch-rule", flags->branch_rule,
                  "act-first or x-first")
      ->check(CLI::IsMember({"act-first", "x-first"}))
      ->capture_default_str();
  cmd->add_option("--search-order", flags->search_order,
                  "best-bound or depth-first")
      ->check(CLI::IsMember({"best-bound", "depth-first"}))
      ->capture_default_str();
  cmd->add_option("--pivot-rule", flags->pivot_rule, "bland or dantzig")
      ->check(CLI::IsMember({"bland", "dantzig"}))
      ->capture_default_str();
}

BnbConfig ToConfig(const SolverFlags& flags) {
  BnbConfig config;
  config.node_limit = flags.node_limit;
  config.time_limit_seconds = flags.time_limit;
  config.branch_rule = *ParseBranchRule(flags.branch_rule);
  config.search_order = *ParseSearchOrder(flags.search_order);
  config.pivot_rule = *ParsePivotRule(flags.pivot_rule);
  ValidateConfig(config);
  return config;
}

std::string Decimal(const Rational& r) { return r.to_fixed(6); }

std::string StatusKey(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kNodeLimit:
      return "node_limit";
    case SolveStatus::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

// "service_2: 1=[3,0] 2=[2,1]" lists the units each used interface carries,
// one entry per resource, interfaces 1-based.
void PrintAssignments(const SiaInstance& instance,
                      const Allocation& allocation) {
  for (int j = 0; j < instance.num_services(); ++j) {
    std::cout << "service_" << j + 1 << ":";
    for (int i = 0; i < instance.num_interfaces(); ++i) {
      bool used = false;
      for (int k = 0; k < instance.num_resources(); ++k) {
        used = used || allocation.at(i, j, k) > 0;
      }
      if (!used) continue;
      std::cout << ' ' << i + 1 << "=[";
      for (int k = 0; k < instance.num_resources(); ++k) {
        std::cout << (k ? "," : "") << allocation.at(i, j, k);
      }
      std::cout << ']';
    }
    std::cout << '\n';
  }
}

void PrintOptional(const char* key, const std::optional<Rational>& value) {
  std::cout << key << ": " << (value ? value->to_fraction_string() : "none")
            << '\n';
}

int RunSolve(const std::string& path, const SolverFlags& flags,
             bool relax_integrality) {
  SiaInstance instance = LoadInstance(path);
  BnbConfig config = ToConfig(flags);
  if (relax_integrality) {
    std::optional<Rational> bound = RelaxationBound(instance, config);
    if (!bound) {
      std::cout << "status: infeasible\n";
      return kExitInfeasible;
    }
    std::cout << "status: lp_optimal\n"
              << "lp_bound_exact: " << bound->to_fraction_string() << '\n'
              << "lp_bound_decimal: " << Decimal(*bound) << '\n';
    return kExitOk;
  }
  Solution sol;
  try {
    sol = Solve(instance, config);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleInstance) throw;
    std::cout << "status: infeasible\n";
    return kExitInfeasible;
  }
  std::cout << "status: " << StatusKey(sol.status) << '\n';
  if (sol.has_incumbent) {
    std::cout << "objective_exact: " << sol.objective.to_fraction_string()
              << '\n'
              << "objective_decimal: " << Decimal(sol.objective) << '\n'
              << "split_count: " << SplitCount(sol) << '\n';
    PrintAssignments(instance, sol.allocation);
  } else {
    std::cout << "objective_exact: none\n";
  }
  std::cout << "nodes: " << sol.stats.nodes << '\n'
            << "lp_iterations: " << sol.stats.lp_iterations << '\n';
  PrintOptional("root_bound", sol.stats.root_bound);
  PrintOptional("best_bound", sol.stats.best_bound);
  std::cout << "wall_seconds: " << std::fixed << std::setprecision(6)
            << sol.stats.wall_seconds << '\n';
  return sol.status == SolveStatus::kOptimal ? kExitOk : kExitLimit;
}

int RunOracle(const std::string& path, uint64_t max_search_space) {
  SiaInstance instance = LoadInstance(path);
  OracleOptions options;
  options.max_search_space = max_search_space;
  OracleResult result;
  try {
    result = BruteForceSolve(instance, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleInstance) throw;
    std::cout << "status: infeasible\n";
    return kExitInfeasible;
  }
  std::cout << "status: optimal\n"
            << "objective_exact: " << result.objective.to_fraction_string()
            << '\n'
            << "objective_decimal: " << Decimal(result.objective) << '\n'
            << "split_count: "
            << SplitCount(ActivationOf(result.allocation)) << '\n';
  PrintAssignments(instance, result.allocation);
  std::cout << "leaves: " << result.leaves << '\n';
  return kExitOk;
}

int RunReduce(const std::vector<std::string>& args, const SolverFlags& flags) {
  std::vector<int64_t> elements;
  for (const std::string& a : args) {
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(a, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.size() || a.empty()) {
      throw Error(ErrorCode::kParseError, "not an integer: '" + a + "'");
    }
    elements.push_back(v);
  }
  PartitionInstance pp(std::move(elements));
  BnbConfig config = ToConfig(flags);
  std::cout << "elements: " << pp.size() << '\n' << "sum: " << pp.sum() << '\n';
  PartitionDecision decision =
      AnalyzePartition(pp, [&config](const SiaInstance& instance) {
        return Solve(instance, config);
      });
  if (decision.odd_sum) {
    std::cout << "odd_sum: yes\n" << "partition: no\n";
    return kExitOk;
  }
  std::cout << "odd_sum: no\n"
            << "instance: interfaces=2 services=" << pp.size()
            << " resources=1 capacity=" << pp.sum() / 2
            << " unit_cost=0 activation_cost=1\n"
            << "optimum: " << decision.solution->objective.to_fraction_string()
            << '\n'
            << "split_count: " << SplitCount(*decision.solution) << '\n'
            << "partition: " << (decision.partition_exists ? "yes" : "no")
            << '\n';
  return kExitOk;
}

int RunBench(const std::string& config_path, const std::string& out_dir,
             int jobs, std::optional<uint64_t> seed,
             std::optional<int64_t> replications) {
  BnbConfig config;
  ScenarioSpec spec = LoadScenarioSpec(config_path, &config);
  if (seed) spec.seed = *seed;
  if (replications) spec.replications = *replications;
  ValidateSpec(spec);
  BenchOptions options;
  options.jobs = jobs;
  BenchReport report = RunBenchmark(spec, config, options);
  WriteReport(report, out_dir);

  std::cout << std::left << std::setw(4) << "J" << std::setw(22) << "scenario"
            << std::right << std::setw(14) << "mean_cost" << std::setw(12)
            << "mean_splits" << std::setw(8) << "solved" << std::setw(10)
            << "unsolved" << '\n';
  for (const BenchRow& row : report.rows) {
    std::cout << std::left << std::setw(4) << row.num_services << std::setw(22)
              << row.scenario << std::right << std::setw(14)
              << row.mean_cost.to_fixed(3) << std::setw(12)
              << row.mean_splits.to_fixed(3) << std::setw(8)
              << row.replications << std::setw(10) << row.unsolved << '\n';
  }
  std::cout << "replications: " << spec.replications << '\n'
            << "unsolved: " << report.total_unsolved << '\n'
            << "report: " << (std::filesystem::path(out_dir) / "report.csv")
                                 .string()
            << '\n';
  if (report.too_many_unsolved) {
    throw Error(ErrorCode::kTooManyUnsolved,
                std::to_string(report.total_unsolved) + " of " +
                    std::to_string(report.total_replications) +
                    " replications hit a solver limit (more than 1%)");
  }
  return kExitOk;
}

int RunExportLp(const std::string& path, const std::string& out_path) {
  SiaInstance instance = LoadInstance(path);
  const std::string text =
      ExportLp(BuildMilp(instance), std::filesystem::path(path).filename().string());
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + out_path);
  std::cout << "wrote: " << out_path << '\n';
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact service-to-interface assignment solver", "sia"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  SolverFlags flags;
  std::string instance_path;
  bool relax = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  AddSolverFlags(solve, &flags);
  solve->add_flag("--relax-integrality", relax,
                  "Only solve the LP relaxation and report its bound");

  uint64_t max_space = OracleOptions{}.max_search_space;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Exhaustive enumeration for tiny instances");
  oracle->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  oracle->add_option("--max-search-space", max_space,
                     "Refuse instances with more candidate allocations")
      ->capture_default_str();

  std::vector<std::string> integers;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Decide a partition instance through the SIA reduction");
  reduce->add_option("integers", integers, "Positive integers")->required();
  AddSolverFlags(reduce, &flags);

  std::string config_path;
  std::string out_dir;
  int jobs = 1;
  std::optional<uint64_t> seed;
  std::optional<int64_t> replications;
  CLI::App* bench =
      app.add_subcommand("bench", "Run the simulation benchmark");
  bench->add_option("config", config_path, "Bench config JSON file")
      ->required();
  bench->add_option("output_dir", out_dir, "Directory for report files")
      ->required();
  bench->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", seed, "Override the config seed");
  bench->add_option("--replications", replications,
                    "Override the config replication count");

  std::string lp_out;
  CLI::App* export_lp =
      app.add_subcommand("export-lp", "Write the MILP in LP file format");
  export_lp->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  export_lp->add_option("output", lp_out, "LP file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*solve) return RunSolve(instance_path, flags, relax);
    if (*oracle) return RunOracle(instance_path, max_space);
    if (*reduce) return RunReduce(integers, flags);
    if (*bench) {
      return RunBench(config_path, out_dir, jobs, seed, replications);
    }
    if (*export_lp) return RunExportLp(instance_path, lp_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitParse;
}

}  // namespace
}  // namespace sia

int main(int argc, char** argv) { return sia::Main(argc, argv); }
