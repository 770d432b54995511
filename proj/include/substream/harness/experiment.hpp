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

// Seeded experiment runs with schema-versioned reports.
#ifndef SUBSTREAM_HARNESS_EXPERIMENT_HPP_
#define SUBSTREAM_HARNESS_EXPERIMENT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "substream/access.hpp"
#include "substream/harness/instance.hpp"
#include "substream/harness/sampler.hpp"
#include "substream/numeric.hpp"
#include "substream/stream.hpp"

namespace substream::harness {

inline constexpr int kReportSchemaVersion = 1;

// "branching", "greedy", "sieve" or "store-all".
bool IsKnownAlgorithm(const std::string& name);

// The policy each algorithm runs under: branching is weak-oracle, the stream
// baselines are element-store, offline greedy is strong.
AccessPolicy PolicyFor(const std::string& algorithm, const Instance& instance);

// Null for "greedy", which is offline. Throws kInvalidArgument for unknown
// names. Branching picks the cardinality tree for uniform constraints and
// the matroid tree otherwise.
std::unique_ptr<StreamingAlgorithm> MakeAlgorithm(const std::string& algorithm,
                                                  const Instance& instance,
                                                  const Rational& epsilon,
                                                  std::optional<std::size_t> budget);

// Runs one algorithm over one ordering.
AlgReport RunOnce(const std::string& algorithm, const Instance& instance,
                  std::span<const ElementId> order, const Rational& epsilon,
                  std::optional<std::size_t> budget, OracleSession& session);

struct ExperimentConfig {
  InstanceSpec instance;
  std::string algorithm = "branching";
  Rational epsilon{1, 10};
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<Distribution> distribution;  // default by instance kind
  std::optional<std::size_t> budget;         // sieve only
};

struct TrialResult {
  std::uint64_t seed = 0;
  Value value;
  Rational ratio;
  std::int64_t queries = 0;
  std::size_t max_stored = 0;
  std::size_t violations = 0;
  bool feasible = true;
  std::string error;  // empty unless the trial failed
};

struct RunReport {
  ExperimentConfig config;
  Value optimum;
  std::vector<TrialResult> trials;

  std::size_t completed() const;
  double mean_ratio() const;
  std::optional<Rational> min_ratio() const;
  std::size_t total_violations() const;
  std::size_t infeasible() const;
};

// Trial i uses seed DeriveSeed(config.seed, i) for its stream ordering.
RunReport RunExperiment(const ExperimentConfig& config);

std::string ReportToJson(const RunReport& report);
std::string ReportToCsv(const RunReport& report);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_EXPERIMENT_HPP_
