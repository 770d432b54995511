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

// Stream orderings for the lower-bound distributions.
#ifndef SUBSTREAM_HARNESS_SAMPLER_HPP_
#define SUBSTREAM_HARNESS_SAMPLER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "substream/element_set.hpp"
#include "substream/harness/instance.hpp"

namespace substream::harness {

// card-D: uniform order with the purple element last.
// matroid-D: class blocks in class order, uniform order inside each block.
enum class Distribution { kCardD, kMatroidD, kUniform };

const char* DistributionName(Distribution d);
Distribution ParseDistribution(const std::string& name);
// card-D for cardinality instances, matroid-D for matroid ones, uniform else.
Distribution DefaultDistribution(InstanceKind kind);

struct StreamSample {
  std::vector<ElementId> order;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::kUniform;
};

// Throws kIncompatibleDistribution when the distribution needs a hidden
// structure the instance does not have.
StreamSample SampleStream(const Instance& instance, Distribution d, std::uint64_t seed);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_SAMPLER_HPP_
