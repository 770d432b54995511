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

// Instance descriptions for the harness. A description carries only the
// kind, its parameters and a seed; everything else is re-derived.
#ifndef SUBSTREAM_HARNESS_INSTANCE_HPP_
#define SUBSTREAM_HARNESS_INSTANCE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "substream/hard_cardinality.hpp"
#include "substream/hard_matroid.hpp"
#include "substream/matroid.hpp"
#include "substream/numeric.hpp"
#include "substream/oracle.hpp"

namespace substream::harness {

enum class InstanceKind { kCardinality, kMatroid, kCoverage };

const char* InstanceKindName(InstanceKind kind);
InstanceKind ParseInstanceKind(const std::string& name);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kCardinality;
  int K = 0;
  int h = 0;  // cardinality only; 0 means K
  int m = 0;  // matroid only; 0 means 2(K - 1)
  int n = 0;  // cardinality and coverage
  std::uint64_t seed = 0;
  // Coverage only.
  int universe = 0;  // 0 means 2n
  bool partition = false;  // K unit-capacity classes, e % K

  // Fills defaults and checks ranges. Throws kInvalidParams.
  InstanceSpec Normalized() const;

  std::string ToJson() const;
  // Throws kInvalidArgument on malformed input.
  static InstanceSpec FromJson(const std::string& text);
};

struct Instance {
  InstanceSpec spec;
  OraclePtr oracle;
  MatroidPtr constraint;
  std::optional<CardHardInstance> card;
  std::optional<MatHardInstance> mat;

  int n() const { return oracle->ground_size(); }
};

Instance BuildInstance(const InstanceSpec& spec);

// Weighted coverage: element i covers each item with probability 1/3, item
// weights uniform in 1..9.
OraclePtr GenerateCoverage(int n, int universe, std::uint64_t seed);

// Closed form for the hard instances, brute force otherwise.
Value ExactOptimum(const Instance& instance);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_INSTANCE_HPP_
