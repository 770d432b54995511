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

#include "substream/harness/sampler.hpp"

#include <span>

#include "substream/error.hpp"
#include "substream/rng.hpp"

namespace substream::harness {

const char* DistributionName(Distribution d) {
  switch (d) {
    case Distribution::kCardD: return "card-D";
    case Distribution::kMatroidD: return "matroid-D";
    case Distribution::kUniform: return "uniform";
  }
  return "unknown";
}

Distribution ParseDistribution(const std::string& name) {
  if (name == "card-D") return Distribution::kCardD;
  if (name == "matroid-D") return Distribution::kMatroidD;
  if (name == "uniform") return Distribution::kUniform;
  throw Error(ErrorCode::kInvalidArgument, "unknown distribution '" + name + "'");
}

Distribution DefaultDistribution(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kCardinality: return Distribution::kCardD;
    case InstanceKind::kMatroid: return Distribution::kMatroidD;
    case InstanceKind::kCoverage: return Distribution::kUniform;
  }
  return Distribution::kUniform;
}

StreamSample SampleStream(const Instance& instance, Distribution d, std::uint64_t seed) {
  StreamSample out;
  out.seed = seed;
  out.distribution = d;
  Rng rng(seed);
  const int n = instance.n();
  switch (d) {
    case Distribution::kUniform: {
      out.order.resize(n);
      for (int i = 0; i < n; ++i) out.order[i] = i;
      rng.Shuffle(std::span<ElementId>(out.order));
      break;
    }
    case Distribution::kCardD: {
      if (!instance.card) {
        throw Error(ErrorCode::kIncompatibleDistribution, "card-D needs a cardinality instance");
      }
      const ElementId purple = instance.card->purple();
      for (int i = 0; i < n; ++i) {
        if (i != purple) out.order.push_back(i);
      }
      rng.Shuffle(std::span<ElementId>(out.order));
      out.order.push_back(purple);
      break;
    }
    case Distribution::kMatroidD: {
      if (!instance.mat) {
        throw Error(ErrorCode::kIncompatibleDistribution, "matroid-D needs a matroid instance");
      }
      // Classes occupy consecutive id ranges already; shuffle inside each.
      const int m = instance.spec.m;
      for (int i = 0; i < n; ++i) out.order.push_back(i);
      for (int c = 0; c + 1 < instance.spec.K; ++c) {
        rng.Shuffle(std::span<ElementId>(out.order.data() + c * m, m));
      }
      break;
    }
  }
  return out;
}

}  // namespace substream::harness
