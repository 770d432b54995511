// Copyright 2026 The Authors.
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

#include "substream/harness/experiment.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "substream/baselines.hpp"
#include "substream/error.hpp"
#include "substream/guess_driver.hpp"
#include "substream/rng.hpp"

namespace substream::harness {

using nlohmann::ordered_json;

bool IsKnownAlgorithm(const std::string& name) {
  return name == "branching" || name == "greedy" || name == "sieve" || name == "store-all";
}

AccessPolicy PolicyFor(const std::string& algorithm, const Instance& instance) {
  if (algorithm == "greedy") return AccessPolicy::Strong();
  if (algorithm == "branching") return AccessPolicy::Weak(instance.constraint);
  return AccessPolicy::ElementStore(instance.constraint);
}

std::unique_ptr<StreamingAlgorithm> MakeAlgorithm(const std::string& algorithm,
                                                  const Instance& instance,
                                                  const Rational& epsilon,
                                                  std::optional<std::size_t> budget) {
  if (algorithm == "branching") {
    GuessOptions options;
    options.kind = instance.constraint->kind() == MatroidKind::kUniform
                       ? BranchingKind::kCardinality
                       : BranchingKind::kMatroid;
    options.epsilon = epsilon;
    options.constraint = instance.constraint;
    return std::make_unique<GuessDriver>(options);
  }
  if (algorithm == "sieve") {
    SieveOptions options;
    options.epsilon = epsilon;
    options.budget = budget;
    return std::make_unique<SieveStreaming>(instance.constraint, options);
  }
  if (algorithm == "store-all") return std::make_unique<StoreAllAlgorithm>(instance.constraint);
  if (algorithm == "greedy") return nullptr;
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + algorithm + "'");
}

AlgReport RunOnce(const std::string& algorithm, const Instance& instance,
                  std::span<const ElementId> order, const Rational& epsilon,
                  std::optional<std::size_t> budget, OracleSession& session) {
  std::unique_ptr<StreamingAlgorithm> alg = MakeAlgorithm(algorithm, instance, epsilon, budget);
  if (alg) return RunStreaming(*alg, session, order, instance.constraint.get());
  // Offline greedy sees the whole ground set at once.
  const Solution s = GreedyOverPool(session, *instance.constraint, order);
  AlgReport report;
  report.solution = s.set;
  report.value = session.truth().Evaluate(s.set);
  report.queries = session.audit().query_count;
  report.max_stored = order.size();
  report.max_distinct_stored = order.size();
  report.violations = session.audit().rejected_queries.size();
  report.feasible = instance.constraint->IsIndependent(s.set);
  return report;
}

std::size_t RunReport::completed() const {
  std::size_t count = 0;
  for (const TrialResult& t : trials) count += t.error.empty();
  return count;
}

double RunReport::mean_ratio() const {
  double sum = 0;
  std::size_t count = 0;
  for (const TrialResult& t : trials) {
    if (!t.error.empty()) continue;
    sum += ToDouble(t.ratio);
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

std::optional<Rational> RunReport::min_ratio() const {
  std::optional<Rational> out;
  for (const TrialResult& t : trials) {
    if (t.error.empty() && (!out || t.ratio < *out)) out = t.ratio;
  }
  return out;
}

std::size_t RunReport::total_violations() const {
  std::size_t total = 0;
  for (const TrialResult& t : trials) total += t.violations;
  return total;
}

std::size_t RunReport::infeasible() const {
  std::size_t count = 0;
  for (const TrialResult& t : trials) count += t.error.empty() && !t.feasible;
  return count;
}

RunReport RunExperiment(const ExperimentConfig& raw) {
  RunReport report;
  report.config = raw;
  ExperimentConfig& config = report.config;
  config.instance = raw.instance.Normalized();
  if (!IsKnownAlgorithm(config.algorithm)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + config.algorithm + "'");
  }
  if (config.trials < 0) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 0");
  if (!config.distribution) config.distribution = DefaultDistribution(config.instance.kind);

  const Instance instance = BuildInstance(config.instance);
  report.optimum = ExactOptimum(instance);
  for (int i = 0; i < config.trials; ++i) {
    TrialResult trial;
    trial.seed = DeriveSeed(config.seed, static_cast<std::uint64_t>(i));
    try {
      const StreamSample sample = SampleStream(instance, *config.distribution, trial.seed);
      OracleSession session(instance.oracle, PolicyFor(config.algorithm, instance));
      const AlgReport r = RunOnce(config.algorithm, instance, sample.order, config.epsilon,
                                  config.budget, session);
      trial.value = r.value;
      trial.ratio = report.optimum == 0 ? Rational(1) : Rational(r.value, report.optimum);
      trial.queries = r.queries;
      trial.max_stored = r.max_stored;
      trial.violations = r.violations;
      trial.feasible = r.feasible;
    } catch (const Error& e) {
      trial.error = e.what();
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

namespace {

ordered_json ValueJson(const Value& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return ToString(v);
}

}  // namespace

std::string ReportToJson(const RunReport& report) {
  const ExperimentConfig& c = report.config;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json config;
  config["instance"] = ordered_json::parse(c.instance.ToJson());
  config["algorithm"] = c.algorithm;
  config["epsilon"] = ToString(c.epsilon);
  config["trials"] = c.trials;
  config["seed"] = c.seed;
  config["distribution"] = c.distribution ? DistributionName(*c.distribution) : "default";
  if (c.budget) config["budget"] = *c.budget;
  j["config"] = config;
  ordered_json trials = ordered_json::array();
  for (const TrialResult& t : report.trials) {
    ordered_json row;
    row["seed"] = t.seed;
    if (!t.error.empty()) {
      row["error"] = t.error;
      trials.push_back(row);
      continue;
    }
    row["value"] = ValueJson(t.value);
    row["ratio"] = ToDouble(t.ratio);
    row["ratio_exact"] = ToString(t.ratio);
    row["queries"] = t.queries;
    row["max_stored"] = t.max_stored;
    row["violations"] = t.violations;
    row["feasible"] = t.feasible;
    trials.push_back(row);
  }
  j["trials"] = trials;
  ordered_json agg;
  agg["optimum"] = ValueJson(report.optimum);
  agg["completed"] = report.completed();
  agg["mean_ratio"] = report.mean_ratio();
  const auto min_ratio = report.min_ratio();
  agg["min_ratio"] = min_ratio ? ordered_json(ToDouble(*min_ratio)) : ordered_json(nullptr);
  agg["min_ratio_exact"] = min_ratio ? ordered_json(ToString(*min_ratio)) : ordered_json(nullptr);
  agg["violations"] = report.total_violations();
  agg["infeasible"] = report.infeasible();
  j["aggregates"] = agg;
  return j.dump(2) + "\n";
}

std::string ReportToCsv(const RunReport& report) {
  std::ostringstream out;
  out << "kind,algorithm,trials,completed,optimum,mean_ratio,min_ratio,violations,infeasible\n";
  const auto min_ratio = report.min_ratio();
  out << InstanceKindName(report.config.instance.kind) << ',' << report.config.algorithm << ','
      << report.config.trials << ',' << report.completed() << ',' << ToString(report.optimum)
      << ',' << report.mean_ratio() << ',' << (min_ratio ? ToString(*min_ratio) : "") << ','
      << report.total_violations() << ',' << report.infeasible() << '\n';
  return out.str();
}

}  // namespace substream::harness
