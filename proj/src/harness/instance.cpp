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

#include "substream/harness/instance.hpp"

#include <json.hpp>

#include "substream/baselines.hpp"
#include "substream/error.hpp"
#include "substream/rng.hpp"

namespace substream::harness {

using nlohmann::ordered_json;

const char* InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kCardinality: return "cardinality";
    case InstanceKind::kMatroid: return "matroid";
    case InstanceKind::kCoverage: return "coverage";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(const std::string& name) {
  if (name == "cardinality") return InstanceKind::kCardinality;
  if (name == "matroid") return InstanceKind::kMatroid;
  if (name == "coverage") return InstanceKind::kCoverage;
  throw Error(ErrorCode::kInvalidArgument, "unknown instance kind '" + name + "'");
}

InstanceSpec InstanceSpec::Normalized() const {
  InstanceSpec out = *this;
  switch (kind) {
    case InstanceKind::kCardinality:
      if (out.h == 0) out.h = out.K;
      if (out.n == 0) out.n = 2 * out.K;
      CardHardParams{out.n, out.K, out.h}.Validate();
      break;
    case InstanceKind::kMatroid: {
      if (out.m == 0) out.m = MatHardParams::WithDefaultM(out.K).m;
      const MatHardParams p{out.K, out.m};
      p.Validate();
      out.n = p.n();
      break;
    }
    case InstanceKind::kCoverage:
      if (out.universe == 0) out.universe = 2 * out.n;
      if (out.n < 1 || out.K < 1 || out.universe < 1) {
        throw Error(ErrorCode::kInvalidParams, "coverage needs n, K, universe >= 1");
      }
      break;
  }
  return out;
}

std::string InstanceSpec::ToJson() const {
  const InstanceSpec s = Normalized();
  ordered_json j;
  j["kind"] = InstanceKindName(s.kind);
  j["K"] = s.K;
  if (s.kind == InstanceKind::kCardinality) j["h"] = s.h;
  if (s.kind == InstanceKind::kMatroid) j["m"] = s.m;
  j["n"] = s.n;
  if (s.kind == InstanceKind::kCoverage) {
    j["universe"] = s.universe;
    j["constraint"] = s.partition ? "partition" : "uniform";
  }
  j["seed"] = s.seed;
  j["prng"] = kPrngName;
  return j.dump(2) + "\n";
}

InstanceSpec InstanceSpec::FromJson(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    InstanceSpec s;
    s.kind = ParseInstanceKind(j.at("kind").get<std::string>());
    s.K = j.at("K").get<int>();
    s.h = j.value("h", 0);
    s.m = j.value("m", 0);
    s.n = j.value("n", 0);
    s.seed = j.value("seed", std::uint64_t{0});
    s.universe = j.value("universe", 0);
    s.partition = j.value("constraint", std::string("uniform")) == "partition";
    if (j.contains("prng") && j["prng"].get<std::string>() != kPrngName) {
      throw Error(ErrorCode::kInvalidArgument,
                  "instance was written with PRNG " + j["prng"].get<std::string>());
    }
    return s.Normalized();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad instance file: ") + e.what());
  }
}

OraclePtr GenerateCoverage(int n, int universe, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> covers(n);
  for (auto& c : covers) {
    for (int item = 0; item < universe; ++item) {
      if (rng.Bernoulli(1, 3)) c.push_back(item);
    }
  }
  std::vector<Value> weights(universe);
  for (auto& w : weights) w = rng.UniformInt(1, 9);
  return std::make_shared<CoverageOracle>(std::move(covers), std::move(weights));
}

Instance BuildInstance(const InstanceSpec& raw) {
  Instance inst;
  inst.spec = raw.Normalized();
  const InstanceSpec& s = inst.spec;
  switch (s.kind) {
    case InstanceKind::kCardinality: {
      inst.card = CardHardInstance::Instantiate({s.n, s.K, s.h}, s.seed);
      inst.oracle = inst.card->oracle();
      inst.constraint = std::make_shared<UniformMatroid>(s.n, s.K);
      break;
    }
    case InstanceKind::kMatroid: {
      inst.mat = MatHardInstance::Instantiate({s.K, s.m}, s.seed);
      inst.oracle = inst.mat->oracle();
      inst.constraint = inst.mat->matroid();
      break;
    }
    case InstanceKind::kCoverage: {
      inst.oracle = GenerateCoverage(s.n, s.universe, s.seed);
      if (s.partition) {
        std::vector<int> class_of(s.n);
        for (int e = 0; e < s.n; ++e) class_of[e] = e % s.K;
        inst.constraint = std::make_shared<PartitionMatroid>(
            std::move(class_of), std::vector<int>(s.K, 1));
      } else {
        inst.constraint = std::make_shared<UniformMatroid>(s.n, s.K);
      }
      break;
    }
  }
  return inst;
}

Value ExactOptimum(const Instance& instance) {
  if (instance.card) return CardOptimalValue(instance.card->params());
  if (instance.mat) return MatOptimalValue(instance.spec.K);
  return BruteForceOptimum(*instance.oracle, *instance.constraint).value;
}

}  // namespace substream::harness
