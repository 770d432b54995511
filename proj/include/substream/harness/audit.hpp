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

// Canonical-process audit for the lower-bound instances.
//
// The reference execution runs the same algorithm against a shadow oracle
// that reads every red element of the first classes as blue. By the
// indistinguishability of the hard functions, the real run holds exactly the
// shadow's stored sets until two reds meet in one window. Per trial:
//   X_t  the shadow's stored set after step t - 1 holds a red and e_t is red
//   Y    the shadow's stored set after step n - 1 holds a red
// A trial deviates if any X_t or Y occurs. The audit sees the hidden
// coloring; algorithms never do.
#ifndef SUBSTREAM_HARNESS_AUDIT_HPP_
#define SUBSTREAM_HARNESS_AUDIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "substream/harness/instance.hpp"
#include "substream/numeric.hpp"

namespace substream::harness {

struct Proportion {
  std::size_t hits = 0;
  std::size_t trials = 0;
  // 95% Wilson score interval.
  double lo = 0;
  double hi = 1;

  double rate() const { return trials == 0 ? 0.0 : double(hits) / double(trials); }
};

Proportion WilsonInterval(std::size_t hits, std::size_t trials, double z = 1.959963984540054);

// True if the interval at 2m meets half the interval at m.
bool HalvingConsistent(const Proportion& at_m, const Proportion& at_2m);

struct CanonicalAuditConfig {
  InstanceSpec instance;  // cardinality or matroid
  std::string algorithm = "sieve";
  std::optional<std::size_t> budget;
  Rational epsilon{1, 10};
  int trials = 100;
  std::uint64_t seed = 0;
};

struct AuditTrial {
  std::uint64_t seed = 0;
  bool any_x = false;
  bool y = false;
  // The real run held the shadow's stored set after every step up to n - 1.
  bool followed = false;
  Value value;
  Value max_seen;
  std::size_t max_stored = 0;
  std::size_t violations = 0;

  bool deviated() const { return any_x || y; }
};

struct CanonicalAudit {
  CanonicalAuditConfig config;
  Value optimum;
  Value output_bound;
  std::vector<AuditTrial> trials;
  Proportion deviation;
  Proportion over_bound;  // returned value above the output bound
  // Largest answered query value over trials that did not deviate.
  std::optional<Value> non_deviating_max_seen;
  std::size_t followed_mismatches = 0;  // non-deviating trials that left the shadow
  std::size_t budget_overruns = 0;
  double mean_ratio = 0;
  // K^2 s / n for cardinality, K s / m for matroid.
  double predicted_scale = 0;
};

// Throws kIncompatibleDistribution for coverage instances.
CanonicalAudit RunCanonicalAudit(const CanonicalAuditConfig& config);

std::string AuditToJson(const CanonicalAudit& audit);
std::string AuditToCsv(const CanonicalAudit& audit);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_AUDIT_HPP_
