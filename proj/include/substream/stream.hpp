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

// Single-pass stream plumbing shared by every streaming algorithm.
#ifndef SUBSTREAM_STREAM_HPP_
#define SUBSTREAM_STREAM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "substream/access.hpp"
#include "substream/element_set.hpp"
#include "substream/matroid.hpp"
#include "substream/numeric.hpp"

namespace substream {

struct AlgReport {
  ElementSet solution;
  Value value;  // truth value of `solution`, not an audited query
  std::int64_t queries = 0;
  std::size_t max_stored = 0;
  std::size_t max_distinct_stored = 0;
  std::int64_t branches_spawned = 0;
  std::optional<Rational> v_used;
  std::size_t violations = 0;
  bool feasible = true;
};

class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;
  virtual std::string name() const = 0;
  // One arrival. The session window is already open on `e`.
  virtual void Process(ElementId e, OracleSession& session) = 0;
  // Called once after the last arrival.
  virtual void Finish(OracleSession& /*session*/) {}
  virtual ElementSet Solution() const = 0;
  // Distinct elements currently held.
  virtual ElementSet Stored() const = 0;
  // Elements held summed over live state; duplicates across branches count.
  virtual std::size_t Retained() const { return Stored().size(); }
  virtual void FillReport(AlgReport& /*report*/) const {}
};

// Feeds `order` through `alg` one element at a time, reporting the stored set
// after every step, then scores the solution against `constraint` (may be
// null for unconstrained runs).
AlgReport RunStreaming(StreamingAlgorithm& alg, OracleSession& session,
                       std::span<const ElementId> order,
                       const Matroid* constraint);

// Answers repeated queries within one arrival from a local memo so that
// branches sharing a pinned set pay for f(P + e) once.
class StepCache {
 public:
  std::optional<Value> Get(OracleSession& session, const ElementSet& set);

 private:
  std::int64_t step_ = -1;
  std::map<ElementSet, std::optional<Value>> memo_;
};

// Exact powers base^i, i in Z, with index search. base must exceed 1.
class GeometricGrid {
 public:
  explicit GeometricGrid(Rational base);
  const Rational& base() const { return base_; }
  const Rational& Power(int i);
  // Smallest i with base^i >= x, and largest i with base^i <= x; x > 0.
  int SmallestIndexAtLeast(const Rational& x);
  int LargestIndexAtMost(const Rational& x);

 private:
  Rational base_;
  std::map<int, Rational> powers_;
};

}  // namespace substream

#endif  // SUBSTREAM_STREAM_HPP_
