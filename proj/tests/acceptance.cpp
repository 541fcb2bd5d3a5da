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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
//
//   acceptance [--replications N]
//
// --replications overrides the benchmark replication count used by
// criteria 6 and 7 (default: the shipped config, 1000). Use 200 on machines
// where the full run exceeds the 15 minute budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sia/bnb.hpp"
#include "sia/error.hpp"
#include "sia/milp.hpp"
#include "sia/oracle.hpp"
#include "sia/reduction.hpp"
#include "sia/simbench.hpp"
#include "test_util.hpp"

namespace sia {
namespace {

namespace fs = std::filesystem;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared state: instances and optima from criterion 1, plus every Optimal
// solution returned in criteria 1-3 for the constraint audit.
struct Shared {
  std::vector<SiaInstance> oracle_instances;
  std::vector<Rational> oracle_optima;
  std::vector<std::pair<SiaInstance, Solution>> optimal_solutions;
  std::optional<BenchReport> bench;
  double bench_seconds = 0;
  int64_t bench_replications = 0;
};

void Record(Shared& shared, const SiaInstance& inst, const Solution& sol) {
  if (sol.status == SolveStatus::kOptimal) {
    shared.optimal_solutions.emplace_back(inst, sol);
  }
}

Outcome OracleEquivalence(Shared& shared) {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  testing::RandomInstanceLimits limits;
  limits.max_interfaces = 3;
  limits.max_services = 3;
  limits.max_resources = 2;
  limits.max_demand = 4;
  limits.max_capacity = 4;
  limits.overheads = {Rational(0), Rational(1, 4), Rational(1, 2)};
  int mismatches = 0;
  int infeasible = 0;
  while (shared.oracle_instances.size() < 200) {
    SiaInstance inst = testing::RandomInstance(rng, limits);
    std::optional<Rational> truth;
    try {
      truth = BruteForceSolve(inst).objective;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasibleInstance) throw;
    }
    std::optional<Solution> sol;
    try {
      sol = Solve(inst);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasibleInstance) throw;
    }
    if (!truth) {
      ++infeasible;
      if (sol) ++mismatches;  // both must agree the instance is infeasible
      continue;
    }
    if (!sol || sol->status != SolveStatus::kOptimal ||
        sol->objective != *truth) {
      ++mismatches;
    }
    if (sol) Record(shared, inst, *sol);
    shared.oracle_instances.push_back(inst);
    shared.oracle_optima.push_back(*truth);
  }
  const double secs = Seconds(start);
  Outcome out;
  out.pass = mismatches == 0 && secs < 60;
  std::ostringstream d;
  d << shared.oracle_instances.size() << " feasible + " << infeasible
    << " infeasible instances, " << mismatches << " mismatches, " << secs
    << " s";
  out.detail = d.str();
  return out;
}

Outcome PartitionReduction(Shared& shared) {
  const auto start = Clock::now();
  std::vector<std::vector<int64_t>> cases = {
      {1, 2, 3}, {3, 1}, {2, 2, 2, 2}, {1, 1}, {1, 1, 1}};
  // Every multiset of size 1..6 over 1..8, as nondecreasing sequences.
  std::vector<int64_t> cur;
  std::function<void(int64_t)> grow = [&](int64_t from) {
    if (!cur.empty()) cases.push_back(cur);
    if (cur.size() == 6) return;
    for (int64_t v = from; v <= 8; ++v) {
      cur.push_back(v);
      grow(v);
      cur.pop_back();
    }
  };
  grow(1);
  int wrong = 0;
  int in_between = 0;
  for (const auto& elements : cases) {
    PartitionInstance pp(elements);
    PartitionDecision d = AnalyzePartition(pp, [&](const SiaInstance& inst) {
      Solution sol = Solve(inst);
      Record(shared, inst, sol);
      return sol;
    });
    if (d.partition_exists != testing::SubsetSumPartitionExists(elements)) {
      ++wrong;
    }
    if (d.solution) {
      const Rational J(static_cast<int64_t>(elements.size()));
      const Rational& v = d.solution->objective;
      if (v < J || (v > J && v < J + Rational(1))) ++in_between;
    }
  }
  const double secs = Seconds(start);
  Outcome out;
  out.pass = wrong == 0 && in_between == 0 && secs < 120;
  std::ostringstream d;
  d << cases.size() << " multisets, " << wrong << " wrong decisions, "
    << in_between << " optima outside {J} or [J+1, inf), " << secs << " s";
  out.detail = d.str();
  return out;
}

Outcome WorkedOptima(Shared& shared) {
  struct Case {
    std::string name;
    SiaInstance inst;
    Rational expected;
  };
  std::vector<Case> cases = {
      {"E1", testing::InstanceE1(), Rational(27)},
      {"{1,2,3}", PartitionToSia(PartitionInstance({1, 2, 3})), Rational(3)},
      {"{3,1}", PartitionToSia(PartitionInstance({3, 1})), Rational(3)},
  };
  Outcome out;
  std::ostringstream d;
  for (const Case& c : cases) {
    Solution sol = Solve(c.inst);
    Record(shared, c.inst, sol);
    const Rational oracle = BruteForceSolve(c.inst).objective;
    const bool ok = sol.status == SolveStatus::kOptimal &&
                    sol.objective == c.expected && oracle == c.expected;
    out.pass = out.pass && ok;
    d << c.name << " -> " << sol.objective.to_string() << " (oracle "
      << oracle.to_string() << ")" << (ok ? "" : " MISMATCH") << "; ";
  }
  out.detail = d.str();
  return out;
}

Outcome ConstraintExactness(const Shared& shared) {
  int bad = 0;
  for (const auto& [inst, sol] : shared.optimal_solutions) {
    if (!CheckConstraints(inst, sol.allocation).all_satisfied ||
        sol.activation != ActivationOf(sol.allocation) ||
        sol.objective != Objective(inst, sol.allocation)) {
      ++bad;
    }
  }
  Outcome out;
  out.pass = bad == 0 && !shared.optimal_solutions.empty();
  out.detail = std::to_string(shared.optimal_solutions.size()) +
               " optimal solutions audited, " + std::to_string(bad) +
               " violations";
  return out;
}

Outcome LpBoundDominance(const Shared& shared) {
  int bad = 0;
  for (size_t n = 0; n < shared.oracle_instances.size(); ++n) {
    std::optional<Rational> bound =
        RelaxationBound(shared.oracle_instances[n]);
    if (!bound || *bound > shared.oracle_optima[n]) ++bad;
  }
  Outcome out;
  out.pass = bad == 0 && !shared.oracle_instances.empty();
  out.detail = std::to_string(shared.oracle_instances.size()) +
               " instances, " + std::to_string(bad) +
               " root LP bounds above the optimum";
  return out;
}

void EnsureBench(Shared& shared, std::optional<int64_t> replications) {
  if (shared.bench) return;
  BnbConfig config;
  ScenarioSpec spec =
      LoadScenarioSpec(SIA_SOURCE_DIR "/configs/default_bench.json", &config);
  if (replications) spec.replications = *replications;
  const auto start = Clock::now();
  shared.bench = RunBenchmark(spec, config);
  shared.bench_seconds = Seconds(start);
  shared.bench_replications = spec.replications;
}

const BenchRow* FindRow(const BenchReport& report, int j,
                        const std::string& scenario) {
  for (const BenchRow& row : report.rows) {
    if (row.num_services == j && row.scenario == scenario) return &row;
  }
  return nullptr;
}

Outcome RegimeOrdering(Shared& shared, std::optional<int64_t> replications) {
  EnsureBench(shared, replications);
  const BenchReport& report = *shared.bench;
  Outcome out;
  std::ostringstream d;
  int points = 0;
  for (int j = 3; j <= 10; ++j) {
    const BenchRow* low = FindRow(report, j, "MixedRandom/LowF");
    const BenchRow* high = FindRow(report, j, "MixedRandom/HighF");
    if (low == nullptr || high == nullptr) {
      out.pass = false;
      d << "missing series at J=" << j << "; ";
      continue;
    }
    ++points;
    if (high->mean_splits > low->mean_splits) {
      out.pass = false;
      d << "J=" << j << " HighF " << high->mean_splits.to_fixed(3)
        << " > LowF " << low->mean_splits.to_fixed(3) << "; ";
    }
    if (high->mean_splits > Rational(1)) {
      out.pass = false;
      d << "J=" << j << " HighF mean splits " << high->mean_splits.to_fixed(3)
        << " > 1; ";
    }
  }
  const bool in_budget = shared.bench_seconds < 15 * 60;
  out.pass = out.pass && !report.too_many_unsolved && in_budget &&
             shared.bench_replications >= 200;
  d << points << " J values, " << shared.bench_replications
    << " replications, " << report.total_unsolved << " unsolved, bench "
    << shared.bench_seconds << " s" << (in_budget ? "" : " (over budget)");
  out.detail = d.str();
  return out;
}

Outcome CostTrend(Shared& shared, std::optional<int64_t> replications) {
  EnsureBench(shared, replications);
  const BenchReport& report = *shared.bench;
  Outcome out;
  std::ostringstream d;
  for (const std::string& name : report.scenario_names) {
    std::optional<Rational> prev;
    for (int j = 3; j <= 10; ++j) {
      const BenchRow* row = FindRow(report, j, name);
      if (row == nullptr || row->replications == 0) {
        out.pass = false;
        d << name << " has no data at J=" << j << "; ";
        continue;
      }
      if (prev && row->mean_cost < *prev) {
        out.pass = false;
        d << name << " drops at J=" << j << "; ";
      }
      prev = row->mean_cost;
    }
  }
  d << report.scenario_names.size() << " series checked";
  // Informational: Low/LowF split growth.
  std::optional<Rational> prev;
  bool grows = true;
  for (int j = 3; j <= 10; ++j) {
    const BenchRow* row = FindRow(report, j, "Low/LowF");
    if (row == nullptr) continue;
    if (prev && row->mean_splits < *prev) grows = false;
    prev = row->mean_splits;
  }
  d << "; Low/LowF splits " << (grows ? "nondecreasing" : "not monotone");
  out.detail = d.str();
  return out;
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc Run(const std::string& args) {
  const std::string cmd = std::string(SIA_CLI_PATH) + " " + args + " 2>&1";
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return p;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) p.out.append(buf, n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string NodesLine(const std::string& out) {
  size_t p = out.find("\nnodes: ");
  if (p == std::string::npos) return "";
  return out.substr(p + 1, out.find('\n', p + 1) - p - 1);
}

Outcome Determinism() {
  const fs::path dir = fs::temp_directory_path() / "sia_acceptance";
  fs::remove_all(dir);
  const std::string config = SIA_SOURCE_DIR "/configs/default_bench.json";
  // The shipped config with fewer replications keeps this quick; the
  // generator and solver paths are the same.
  Proc a = Run("bench " + config + " " + (dir / "a").string() +
               " --replications 100");
  Proc b = Run("bench " + config + " " + (dir / "b").string() +
               " --replications 100 --jobs 2");
  const std::string csv_a = Slurp(dir / "a" / "report.csv");
  const std::string csv_b = Slurp(dir / "b" / "report.csv");
  const bool csv_same = a.code == 0 && b.code == 0 && !csv_a.empty() &&
                        csv_a == csv_b;

  const std::string e1 = SIA_SOURCE_DIR "/data/instances/e1.json";
  Proc s1 = Run("solve " + e1);
  Proc s2 = Run("solve " + e1);
  const std::string n1 = NodesLine(s1.out);
  const std::string n2 = NodesLine(s2.out);
  const bool nodes_same = s1.code == 0 && s2.code == 0 && !n1.empty() &&
                          n1 == n2;
  fs::remove_all(dir);
  Outcome out;
  out.pass = csv_same && nodes_same;
  out.detail = std::string("bench CSV ") +
               (csv_same ? "byte-identical" : "DIFFERS") + " (" +
               std::to_string(csv_a.size()) + " bytes); E1 " + n1 + " vs " +
               n2;
  return out;
}

Outcome LpRoundTrip(const Shared& shared) {
  int bad = 0;
  const size_t count = std::min<size_t>(20, shared.oracle_instances.size());
  for (size_t n = 0; n < count; ++n) {
    const SiaInstance& inst = shared.oracle_instances[n];
    MilpModel back = ReadLp(ExportLp(BuildMilp(inst), "roundtrip"));
    MilpResult r = SolveMilp(back, {});
    if (r.status != SolveStatus::kOptimal ||
        *r.objective != shared.oracle_optima[n]) {
      ++bad;
    }
  }
  Outcome out;
  out.pass = bad == 0 && count == 20;
  out.detail = std::to_string(count) + " exported models re-read and solved, " +
               std::to_string(bad) + " mismatches";
  return out;
}

int Main(int argc, char** argv) {
  std::optional<int64_t> replications;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--replications" && a + 1 < argc) {
      replications = std::stoll(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--replications N]\n";
      return 2;
    }
  }

  Shared shared;
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "oracle equivalence", [&] { return OracleEquivalence(shared); }},
      {2, "partition reduction", [&] { return PartitionReduction(shared); }},
      {3, "worked exact optima", [&] { return WorkedOptima(shared); }},
      {4, "constraint exactness", [&] { return ConstraintExactness(shared); }},
      {5, "LP bound dominance", [&] { return LpBoundDominance(shared); }},
      {6, "regime ordering",
       [&] { return RegimeOrdering(shared, replications); }},
      {7, "cost trend", [&] { return CostTrend(shared, replications); }},
      {8, "determinism", [] { return Determinism(); }},
      {9, "LP export round-trip", [&] { return LpRoundTrip(shared); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.number
              << " (" << c.name << "): " << out.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: ") ;
  if (failed) std::cout << failed;
  std::cout << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sia

int main(int argc, char** argv) { return sia::Main(argc, argv); }
