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

// Reference optima and comparison baselines.
#ifndef SUBSTREAM_BASELINES_HPP_
#define SUBSTREAM_BASELINES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>

#include "substream/access.hpp"
#include "substream/element_set.hpp"
#include "substream/matroid.hpp"
#include "substream/oracle.hpp"
#include "substream/stream.hpp"

namespace substream {

struct Solution {
  ElementSet set;
  Value value;
};

struct BruteForceOptions {
  int max_uniform_n = 20;
  int max_general_n = 16;
};

// Exact maximizer over all independent sets; the first maximizer in
// depth-first include-before-exclude order wins ties. Throws
// kGroundSetTooLarge past the limits.
Solution BruteForceOptimum(const ValueOracle& f, const Matroid& constraint,
                           BruteForceOptions options = {});

// Offline greedy with a strong oracle: add the feasible element of largest
// marginal (smallest id on ties) until no positive marginal remains.
Solution OfflineGreedy(const ValueOracle& f, const Matroid& constraint);

// The same greedy restricted to `pool`, through a policy-gated session.
// Refused queries count as unavailable elements.
Solution GreedyOverPool(OracleSession& session, const Matroid& constraint,
                        std::span<const ElementId> pool);

struct SieveOptions {
  Rational epsilon{1, 10};
  // Element budget. Caps the number of live thresholds at max(1, budget / K),
  // keeping the lowest thresholds that are at least m.
  std::optional<std::size_t> budget;
};

// Threshold streaming: one candidate set per v = (1 + eps)^i in [m, 2 K m];
// e joins S_v if |S_v| < K, S_v + e is independent and its marginal is at
// least (v/2 - f(S_v)) / (K - |S_v|).
class SieveStreaming final : public StreamingAlgorithm {
 public:
  SieveStreaming(MatroidPtr constraint, SieveOptions options = {});
  std::string name() const override { return "sieve"; }
  void Process(ElementId e, OracleSession& session) override;
  ElementSet Solution() const override;
  ElementSet Stored() const override;
  std::size_t Retained() const override;
  std::size_t live_thresholds() const { return buckets_.size(); }

 private:
  struct Bucket {
    ElementSet set;
    Value gain;  // f(set) - f(empty)
  };
  MatroidPtr constraint_;
  SieveOptions options_;
  int rank_;
  GeometricGrid grid_;
  std::optional<Value> empty_value_;
  Value m_{0};
  std::map<int, Bucket> buckets_;
};

// Keeps every arrival and runs GreedyOverPool at the end of the stream.
class StoreAllAlgorithm final : public StreamingAlgorithm {
 public:
  explicit StoreAllAlgorithm(MatroidPtr constraint);
  std::string name() const override { return "store-all"; }
  void Process(ElementId e, OracleSession& session) override;
  void Finish(OracleSession& session) override;
  ElementSet Solution() const override { return solution_; }
  ElementSet Stored() const override { return stored_; }

 private:
  MatroidPtr constraint_;
  ElementSet stored_;
  std::vector<ElementId> arrivals_;
  ElementSet solution_;
};

}  // namespace substream

#endif  // SUBSTREAM_BASELINES_HPP_
