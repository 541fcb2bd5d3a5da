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


#include "sia/simbench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "json_util.hpp"
#include "sia/error.hpp"

namespace sia {

using nlohmann::json;

namespace {

constexpr uint64_t kFStreamTag = 0xF;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidConfig, message);
}

// mt19937_64 is fully specified by the standard, and so is seed_seq. The
// standard distributions are not, so the draws below are done by hand to keep
// instances identical across standard libraries.
class Stream {
 public:
  Stream(uint64_t seed, int64_t index, uint64_t tag) {
    const auto idx = static_cast<uint64_t>(index);
    std::seed_seq seq{static_cast<uint32_t>(seed),
                      static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(idx),
                      static_cast<uint32_t>(idx >> 32),
                      static_cast<uint32_t>(tag)};
    engine_.seed(seq);
  }

  // Uniform on [lo, hi].
  int64_t Uniform(int64_t lo, int64_t hi) {
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(engine_());
    const uint64_t threshold = (0 - range) % range;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw < threshold);
    return lo + static_cast<int64_t>(draw % range);
  }

  bool Bernoulli(const Rational& p) {
    constexpr int64_t kScale = int64_t{1} << 32;
    return Rational(Uniform(0, kScale - 1)) < p * Rational(kScale);
  }

 private:
  std::mt19937_64 engine_;
};

uint64_t DemandTag(DemandClass c) { return static_cast<uint64_t>(c) + 1; }

void CheckRange(const IntRange& r, const char* what, int64_t min_lo) {
  if (r.lo < min_lo || r.hi < r.lo) {
    Invalid(std::string(what) + " range [" + std::to_string(r.lo) + ", " +
            std::to_string(r.hi) + "] is empty or below " +
            std::to_string(min_lo));
  }
}

void CheckProbability(const Rational& p, const char* what) {
  if (p < Rational(0) || p > Rational(1)) {
    Invalid(std::string(what) + " must lie in [0, 1], got " + p.to_string());
  }
}

const IntRange& RangeFor(const ScenarioSpec& spec, bool high) {
  return high ? spec.high_demand : spec.low_demand;
}

}  // namespace

std::string_view DemandClassName(DemandClass c) {
  switch (c) {
    case DemandClass::kLow:
      return "Low";
    case DemandClass::kHigh:
      return "High";
    case DemandClass::kMixedRandom:
      return "MixedRandom";
  }
  return "?";
}

std::string_view ActivationRegimeName(ActivationRegime r) {
  switch (r) {
    case ActivationRegime::kLowF:
      return "LowF";
    case ActivationRegime::kHighF:
      return "HighF";
    case ActivationRegime::kMixedF:
      return "MixedF";
  }
  return "?";
}

std::string Scenario::name() const {
  return std::string(DemandClassName(demand_class)) + "/" +
         std::string(ActivationRegimeName(regime));
}

ScenarioSpec DefaultScenarioSpec() {
  ScenarioSpec spec;
  spec.unit_cost = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}, {2, 2, 2}};
  spec.seed = 20140601;
  spec.scenarios = {
      {DemandClass::kLow, ActivationRegime::kLowF},
      {DemandClass::kHigh, ActivationRegime::kLowF},
      {DemandClass::kMixedRandom, ActivationRegime::kLowF},
      {DemandClass::kMixedRandom, ActivationRegime::kHighF},
      {DemandClass::kMixedRandom, ActivationRegime::kMixedF},
  };
  return spec;
}

void ValidateSpec(const ScenarioSpec& spec) {
  CheckRange(spec.num_services, "num_services", 1);
  CheckRange(spec.low_demand, "low demand", 0);
  CheckRange(spec.high_demand, "high demand", 0);
  if (spec.num_interfaces < 1) Invalid("num_interfaces must be positive");
  if (spec.num_resources < 1) Invalid("num_resources must be positive");
  CheckProbability(spec.mixed_high_probability, "mixed_high_probability");
  CheckProbability(spec.mixed_f_high_probability,
                   "activation mixed_high_probability");
  if (spec.unit_cost.size() != static_cast<size_t>(spec.num_interfaces)) {
    Invalid("unit_cost must have one row per interface");
  }
  for (const auto& row : spec.unit_cost) {
    if (row.size() != static_cast<size_t>(spec.num_resources)) {
      Invalid("unit_cost rows must have one entry per resource");
    }
    for (const auto& c : row) {
      if (c.sign() < 0) Invalid("unit_cost entries must be nonnegative");
    }
  }
  if (spec.low_activation_cost.sign() < 0) {
    Invalid("low activation cost must be nonnegative");
  }
  if (spec.high_activation_multiplier.sign() < 0) {
    Invalid("high activation multiplier must be nonnegative");
  }
  // With no overheads, total capacity >= total demand per resource makes
  // every instance solvable, since demands may be split freely.
  if (spec.capacity_factor < Rational(1)) {
    Invalid("capacity_factor must be at least 1");
  }
  if (spec.replications < 1) Invalid("replications must be positive");
  if (spec.scenarios.empty()) Invalid("at least one scenario is required");
}

Rational HighActivationCost(const ScenarioSpec& spec) {
  const int64_t top = std::max(spec.low_demand.hi, spec.high_demand.hi);
  Rational worst;
  for (int k = 0; k < spec.num_resources; ++k) {
    Rational most = 0;
    for (int i = 0; i < spec.num_interfaces; ++i) {
      most = std::max(most, spec.unit_cost[i][k]);
    }
    worst += most * Rational(top);
  }
  return spec.high_activation_multiplier * worst;
}

SiaInstance GenerateInstance(const ScenarioSpec& spec, const Scenario& scenario,
                             int num_services, int64_t index) {
  const int I = spec.num_interfaces;
  const int K = spec.num_resources;
  RawInstance raw;
  raw.num_interfaces = I;
  raw.num_services = num_services;
  raw.num_resources = K;

  // The streams ignore J on purpose: replication r with J services is the
  // J-prefix of replication r with more services, and its F draws are the
  // same. Neighbouring points of a series then differ only by the added
  // services, which keeps per-J means comparable at modest replication counts.
  Stream demand_rng(spec.seed, index, DemandTag(scenario.demand_class));
  std::vector<int64_t> total(K, 0);
  for (int j = 0; j < num_services; ++j) {
    bool high = scenario.demand_class == DemandClass::kHigh;
    if (scenario.demand_class == DemandClass::kMixedRandom) {
      high = demand_rng.Bernoulli(spec.mixed_high_probability);
    }
    const IntRange& range = RangeFor(spec, high);
    std::vector<int64_t> d(K);
    for (int k = 0; k < K; ++k) {
      d[k] = demand_rng.Uniform(range.lo, range.hi);
      total[k] += d[k];
    }
    raw.demand.push_back(std::move(d));
  }

  const Rational high_f = HighActivationCost(spec);
  Stream f_rng(spec.seed, index, kFStreamTag);
  for (int i = 0; i < I; ++i) {
    std::vector<int64_t> b(K);
    for (int k = 0; k < K; ++k) {
      b[k] = *(spec.capacity_factor * Rational(total[k]) / Rational(I))
                  .ceil()
                  .to_int64();
    }
    raw.capacity.push_back(std::move(b));
    raw.unit_cost.push_back(spec.unit_cost[i]);
    switch (scenario.regime) {
      case ActivationRegime::kLowF:
        raw.activation_cost.push_back(spec.low_activation_cost);
        break;
      case ActivationRegime::kHighF:
        raw.activation_cost.push_back(high_f);
        break;
      case ActivationRegime::kMixedF:
        raw.activation_cost.push_back(
            f_rng.Bernoulli(spec.mixed_f_high_probability)
                ? high_f
                : spec.low_activation_cost);
        break;
    }
  }
  return SiaInstance::Validate(raw);
}

BenchReport RunBenchmark(const ScenarioSpec& spec, const BnbConfig& config,
                         const BenchOptions& options) {
  ValidateSpec(spec);
  ValidateConfig(config);
  if (options.jobs < 1) Invalid("jobs must be positive");

  const int num_j =
      static_cast<int>(spec.num_services.hi - spec.num_services.lo + 1);
  const int num_s = static_cast<int>(spec.scenarios.size());
  const int64_t reps = spec.replications;

  BenchReport report;
  for (const auto& s : spec.scenarios) report.scenario_names.push_back(s.name());
  report.records.resize(static_cast<size_t>(num_j) * num_s * reps);

  // Records are laid out J-major, then scenario, then replication, so the
  // result does not depend on which worker ran which task.
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t t = next++; t < report.records.size(); t = next++) {
      const int64_t rep = static_cast<int64_t>(t % reps);
      const int s = static_cast<int>((t / reps) % num_s);
      const int J =
          static_cast<int>(spec.num_services.lo) + static_cast<int>(t / reps / num_s);
      SiaInstance instance = GenerateInstance(spec, spec.scenarios[s], J, rep);
      Solution sol = Solve(instance, config);
      ReplicationRecord& rec = report.records[t];
      rec.num_services = J;
      rec.scenario = s;
      rec.index = rep;
      rec.status = sol.status;
      rec.nodes = sol.stats.nodes;
      if (sol.has_incumbent) {
        rec.objective = sol.objective;
        rec.splits = SplitCount(sol);
      }
    }
  };
  if (options.jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < options.jobs; ++w) pool.emplace_back(worker);
  }

  for (int jj = 0; jj < num_j; ++jj) {
    for (int s = 0; s < num_s; ++s) {
      BenchRow row;
      row.num_services = static_cast<int>(spec.num_services.lo) + jj;
      row.scenario = report.scenario_names[s];
      Rational cost;
      Rational splits;
      const size_t base = (static_cast<size_t>(jj) * num_s + s) * reps;
      for (int64_t r = 0; r < reps; ++r) {
        const ReplicationRecord& rec = report.records[base + r];
        if (rec.status != SolveStatus::kOptimal) {
          ++row.unsolved;
          continue;
        }
        ++row.replications;
        cost += rec.objective;
        splits += Rational(rec.splits);
      }
      if (row.replications > 0) {
        row.mean_cost = cost / Rational(row.replications);
        row.mean_splits = splits / Rational(row.replications);
      }
      report.total_unsolved += row.unsolved;
      report.total_replications += reps;
      report.rows.push_back(std::move(row));
    }
  }
  report.too_many_unsolved =
      report.total_unsolved * 100 > report.total_replications;
  return report;
}

std::string ReportCsv(const BenchReport& report) {
  std::ostringstream out;
  out << "num_services,scenario,mean_cost,mean_splits,replications,unsolved\n";
  for (const BenchRow& row : report.rows) {
    out << row.num_services << ',' << row.scenario << ','
        << row.mean_cost.to_fixed(6) << ',' << row.mean_splits.to_fixed(6)
        << ',' << row.replications << ',' << row.unsolved << '\n';
  }
  return out.str();
}

namespace {

std::string XmlEscape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Smallest of 1, 2, 5 times a power of ten that is >= v.
double NiceCeiling(double v) {
  if (v <= 0) return 1.0;
  double step = 1.0;
  while (step < v) step *= 10.0;
  while (step / 10.0 >= v) step /= 10.0;
  for (double m : {0.1, 0.2, 0.5}) {
    if (step * m >= v) return step * m;
  }
  return step;
}

}  // namespace

std::string ReportSvg(const BenchReport& report, ChartMetric metric) {
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#ff7f0e", "#8c564b",
                                            "#e377c2", "#7f7f7f"};
  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 70, kRight = 190, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const bool cost = metric == ChartMetric::kCost;

  int j_lo = std::numeric_limits<int>::max();
  int j_hi = std::numeric_limits<int>::min();
  double y_max = 0;
  for (const BenchRow& row : report.rows) {
    j_lo = std::min(j_lo, row.num_services);
    j_hi = std::max(j_hi, row.num_services);
    const Rational& v = cost ? row.mean_cost : row.mean_splits;
    y_max = std::max(y_max, v.to_double());
  }
  if (report.rows.empty()) j_lo = j_hi = 0;
  y_max = NiceCeiling(y_max);
  auto px = [&](int j) {
    return j_hi == j_lo
               ? kLeft + plot_w / 2
               : kLeft + plot_w * (j - j_lo) / static_cast<double>(j_hi - j_lo);
  };
  auto py = [&](double v) { return kTop + plot_h * (1.0 - v / y_max); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << Num(kLeft + plot_w / 2) << "\" y=\"24\" "
      << "text-anchor=\"middle\" font-size=\"15\">"
      << (cost ? "Total cost vs number of services"
               : "Number of splits vs number of services")
      << "</text>\n";

  // Axes, ticks and grid.
  out << "<g stroke=\"black\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
      << kLeft + plot_w << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "</g>\n";
  if (!report.rows.empty()) {
    for (int j = j_lo; j <= j_hi; ++j) {
      out << "<text x=\"" << Num(px(j)) << "\" y=\"" << Num(kTop + plot_h + 18)
          << "\" text-anchor=\"middle\">" << j << "</text>\n";
    }
  }
  for (int t = 0; t <= 5; ++t) {
    const double v = y_max * t / 5.0;
    out << "<line x1=\"" << kLeft << "\" y1=\"" << Num(py(v)) << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << Num(py(v))
        << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << Num(py(v) + 4)
        << "\" text-anchor=\"end\">" << Num(v) << "</text>\n";
  }
  out << "<text x=\"" << Num(kLeft + plot_w / 2) << "\" y=\""
      << kHeight - 16 << "\" text-anchor=\"middle\">Number of services</text>\n"
      << "<text transform=\"translate(18," << Num(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">"
      << (cost ? "Mean total cost" : "Mean number of splits") << "</text>\n";

  // One polyline per scenario, in report order.
  for (size_t s = 0; s < report.scenario_names.size(); ++s) {
    const char* color = kColors[s % std::size(kColors)];
    std::string points;
    std::string marks;
    for (const BenchRow& row : report.rows) {
      if (row.scenario != report.scenario_names[s] || row.replications == 0) {
        continue;
      }
      const double v = (cost ? row.mean_cost : row.mean_splits).to_double();
      const std::string x = Num(px(row.num_services));
      const std::string y = Num(py(v));
      if (!points.empty()) points += ' ';
      points += x + "," + y;
      marks += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"3\" fill=\"" +
               color + "\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"" << points << "\"/>\n"
        << marks;
    const double ly = kTop + 10 + 20.0 * s;
    out << "<line x1=\"" << kWidth - kRight + 15 << "\" y1=\"" << Num(ly)
        << "\" x2=\"" << kWidth - kRight + 40 << "\" y2=\"" << Num(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 46 << "\" y=\"" << Num(ly + 4)
        << "\">" << XmlEscape(report.scenario_names[s]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void WriteReport(const BenchReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot create " + dir.string() + ": " + ec.message());
  }
  auto write = [&dir](const char* name, const std::string& text) {
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  };
  write("report.csv", ReportCsv(report));
  write("cost_vs_services.svg", ReportSvg(report, ChartMetric::kCost));
  write("splits_vs_services.svg", ReportSvg(report, ChartMetric::kSplits));
}

namespace {

IntRange ParseRange(const json& value, const std::string& where) {
  std::vector<int64_t> v = IntVector(value, where);
  if (v.size() != 2) {
    throw Error(ErrorCode::kParseError, where + ": expected [lo, hi]");
  }
  return {v[0], v[1]};
}

Scenario ParseScenario(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw Error(ErrorCode::kParseError, where + ": expected a string");
  }
  const std::string text = value.get<std::string>();
  for (DemandClass c : {DemandClass::kLow, DemandClass::kHigh,
                        DemandClass::kMixedRandom}) {
    for (ActivationRegime r : {ActivationRegime::kLowF,
                               ActivationRegime::kHighF,
                               ActivationRegime::kMixedF}) {
      Scenario s{c, r};
      if (s.name() == text) return s;
    }
  }
  throw Error(ErrorCode::kParseError,
              where + ": unknown scenario '" + text +
                  "' (expected <Low|High|MixedRandom>/<LowF|HighF|MixedF>)");
}

std::string RequireString(const json& obj, const char* field) {
  const json& v = Require(obj, field);
  if (!v.is_string()) {
    throw Error(ErrorCode::kParseError,
                std::string(field) + ": expected a string");
  }
  return v.get<std::string>();
}

void ParseSolver(const json& obj, BnbConfig* config) {
  if (!obj.is_object()) {
    throw Error(ErrorCode::kParseError, "solver: expected an object");
  }
  RejectUnknownFields(obj, {"node_limit", "time_limit", "branch_rule",
                            "search_order", "pivot_rule"});
  if (obj.contains("node_limit")) {
    config->node_limit = RequireInt(obj, "node_limit");
  }
  if (obj.contains("time_limit")) {
    const json& v = obj["time_limit"];
    if (!v.is_number()) {
      throw Error(ErrorCode::kParseError, "time_limit: expected a number");
    }
    config->time_limit_seconds = v.get<double>();
  }
  if (obj.contains("branch_rule")) {
    auto rule = ParseBranchRule(RequireString(obj, "branch_rule"));
    if (!rule) throw Error(ErrorCode::kParseError, "branch_rule: unknown value");
    config->branch_rule = *rule;
  }
  if (obj.contains("search_order")) {
    auto order = ParseSearchOrder(RequireString(obj, "search_order"));
    if (!order) {
      throw Error(ErrorCode::kParseError, "search_order: unknown value");
    }
    config->search_order = *order;
  }
  if (obj.contains("pivot_rule")) {
    auto rule = ParsePivotRule(RequireString(obj, "pivot_rule"));
    if (!rule) throw Error(ErrorCode::kParseError, "pivot_rule: unknown value");
    config->pivot_rule = *rule;
  }
}

}  // namespace

ScenarioSpec ParseScenarioSpec(const std::string& text, BnbConfig* config) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "bench config must be a JSON object");
  }
  RejectUnknownFields(doc, {"num_services", "num_interfaces", "num_resources",
                            "demand", "unit_cost", "activation_cost",
                            "capacity_factor", "replications", "seed",
                            "scenarios", "solver"});
  ScenarioSpec spec;
  spec.num_services = ParseRange(Require(doc, "num_services"), "num_services");
  spec.num_interfaces = static_cast<int>(RequireInt(doc, "num_interfaces"));
  spec.num_resources = static_cast<int>(RequireInt(doc, "num_resources"));

  const json& demand = Require(doc, "demand");
  if (!demand.is_object()) {
    throw Error(ErrorCode::kParseError, "demand: expected an object");
  }
  RejectUnknownFields(demand, {"low", "high", "mixed_high_probability"});
  spec.low_demand = ParseRange(Require(demand, "low"), "demand.low");
  spec.high_demand = ParseRange(Require(demand, "high"), "demand.high");
  spec.mixed_high_probability =
      AsRational(Require(demand, "mixed_high_probability"),
                 "demand.mixed_high_probability");

  spec.unit_cost = RationalMatrix(Require(doc, "unit_cost"), "unit_cost");

  const json& fixed = Require(doc, "activation_cost");
  if (!fixed.is_object()) {
    throw Error(ErrorCode::kParseError, "activation_cost: expected an object");
  }
  RejectUnknownFields(fixed,
                      {"low", "high_multiplier", "mixed_high_probability"});
  spec.low_activation_cost =
      AsRational(Require(fixed, "low"), "activation_cost.low");
  spec.high_activation_multiplier = AsRational(
      Require(fixed, "high_multiplier"), "activation_cost.high_multiplier");
  spec.mixed_f_high_probability =
      AsRational(Require(fixed, "mixed_high_probability"),
                 "activation_cost.mixed_high_probability");

  spec.capacity_factor =
      AsRational(Require(doc, "capacity_factor"), "capacity_factor");
  spec.replications = RequireInt(doc, "replications");
  const json& seed = Require(doc, "seed");
  if (!seed.is_number_unsigned()) {
    throw Error(ErrorCode::kParseError, "seed: expected a nonnegative integer");
  }
  spec.seed = seed.get<uint64_t>();

  const json& scenarios = Require(doc, "scenarios");
  if (!scenarios.is_array()) {
    throw Error(ErrorCode::kParseError, "scenarios: expected an array");
  }
  for (size_t s = 0; s < scenarios.size(); ++s) {
    spec.scenarios.push_back(
        ParseScenario(scenarios[s], "scenarios[" + std::to_string(s) + "]"));
  }
  if (doc.contains("solver") && config != nullptr) {
    ParseSolver(doc["solver"], config);
  }
  ValidateSpec(spec);
  if (config != nullptr) ValidateConfig(*config);
  return spec;
}

ScenarioSpec LoadScenarioSpec(const std::filesystem::path& path,
                              BnbConfig* config) {
  return ParseScenarioSpec(ReadFile(path), config);
}

std::string ScenarioSpecToJson(const ScenarioSpec& spec,
                               const BnbConfig& config) {
  json doc = json::object();
  doc["num_services"] = {spec.num_services.lo, spec.num_services.hi};
  doc["num_interfaces"] = spec.num_interfaces;
  doc["num_resources"] = spec.num_resources;
  doc["demand"] = {
      {"low", {spec.low_demand.lo, spec.low_demand.hi}},
      {"high", {spec.high_demand.lo, spec.high_demand.hi}},
      {"mixed_high_probability", RationalToJson(spec.mixed_high_probability)}};
  json cost = json::array();
  for (const auto& row : spec.unit_cost) {
    json r = json::array();
    for (const auto& c : row) r.push_back(RationalToJson(c));
    cost.push_back(r);
  }
  doc["unit_cost"] = cost;
  doc["activation_cost"] = {
      {"low", RationalToJson(spec.low_activation_cost)},
      {"high_multiplier", RationalToJson(spec.high_activation_multiplier)},
      {"mixed_high_probability",
       RationalToJson(spec.mixed_f_high_probability)}};
  doc["capacity_factor"] = RationalToJson(spec.capacity_factor);
  doc["replications"] = spec.replications;
  doc["seed"] = spec.seed;
  json names = json::array();
  for (const auto& s : spec.scenarios) names.push_back(s.name());
  doc["scenarios"] = names;
  doc["solver"] = {{"node_limit", config.node_limit},
                   {"time_limit", config.time_limit_seconds},
                   {"branch_rule", BranchRuleName(config.branch_rule)},
                   {"search_order", SearchOrderName(config.search_order)},
                   {"pivot_rule", PivotRuleName(config.pivot_rule)}};
  return doc.dump(2) + "\n";
}

}  // namespace sia
