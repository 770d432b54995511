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

#include "substream/harness/audit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "substream/access.hpp"
#include "substream/error.hpp"
#include "substream/harness/experiment.hpp"
#include "substream/harness/sampler.hpp"
#include "substream/rng.hpp"

namespace substream::harness {

using nlohmann::ordered_json;

Proportion WilsonInterval(std::size_t hits, std::size_t trials, double z) {
  Proportion out;
  out.hits = hits;
  out.trials = trials;
  if (trials == 0) return out;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // Exact endpoints at the extremes; the formula leaves rounding residue.
  out.lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
  out.hi = hits == trials ? 1.0 : std::min(1.0, center + half);
  return out;
}

bool HalvingConsistent(const Proportion& at_m, const Proportion& at_2m) {
  return at_2m.lo <= at_m.hi / 2 && at_m.lo / 2 <= at_2m.hi;
}

namespace {

// Oracle on the same ground set that reads red elements of the first
// classes as blue.
OraclePtr ShadowOracle(const Instance& inst) {
  if (inst.card) {
    const CardHardParams& p = inst.card->params();
    // Room for every non-purple element as a blue.
    auto table = std::make_shared<const CardProfileTable>(CardHardParams{p.n - 1 + p.K, p.K, p.h});
    const ElementId purple = inst.card->purple();
    return std::make_shared<FunctionOracle>(p.n, [table, purple](const ElementSet& s) {
      const int p_count = s.Contains(purple) ? 1 : 0;
      return table->At({static_cast<int>(s.size()) - p_count, 0, p_count});
    });
  }
  const int K = inst.spec.K;
  auto table = std::make_shared<const MatProfileTable>(K);
  const MatHardInstance mat = *inst.mat;
  return std::make_shared<FunctionOracle>(mat.n(), [table, mat, K](const ElementSet& s) {
    std::vector<int> red(K, 0), blue(K, 0);
    for (ElementId e : s) {
      const int c = mat.ClassOf(e);
      if (c == K - 1) {
        red[c] = 1;
      } else {
        ++blue[c];
      }
    }
    return table->At(red, blue);
  });
}

bool IsRed(const Instance& inst, ElementId e) {
  if (inst.card) return inst.card->ColorOf(e) == Color::kRed;
  return inst.mat->IsRed(e) && inst.mat->ClassOf(e) + 1 < inst.spec.K;
}

bool HoldsRed(const Instance& inst, const ElementSet& s) {
  return std::any_of(s.begin(), s.end(), [&](ElementId e) { return IsRed(inst, e); });
}

}  // namespace

CanonicalAudit RunCanonicalAudit(const CanonicalAuditConfig& raw) {
  CanonicalAudit audit;
  audit.config = raw;
  audit.config.instance = raw.instance.Normalized();
  const CanonicalAuditConfig& config = audit.config;
  if (config.instance.kind == InstanceKind::kCoverage) {
    throw Error(ErrorCode::kIncompatibleDistribution, "the audit needs a hard instance");
  }
  const Instance inst = BuildInstance(config.instance);
  const OraclePtr shadow = ShadowOracle(inst);
  const Distribution dist = DefaultDistribution(config.instance.kind);
  audit.optimum = ExactOptimum(inst);
  audit.output_bound = inst.card ? CardOutputBound(inst.card->params())
                                 : MatOutputBound(config.instance.K);
  const double s = config.budget ? static_cast<double>(*config.budget) : inst.n();
  const double K = config.instance.K;
  audit.predicted_scale = inst.card ? K * K * s / inst.n() : K * s / config.instance.m;

  std::size_t deviated = 0, over = 0;
  double ratio_sum = 0;
  const int n = inst.n();
  for (int i = 0; i < config.trials; ++i) {
    AuditTrial trial;
    trial.seed = DeriveSeed(config.seed, static_cast<std::uint64_t>(i));
    const StreamSample sample = SampleStream(inst, dist, trial.seed);

    OracleSession real(inst.oracle, PolicyFor(config.algorithm, inst));
    real.EnableQueryLog();
    const AlgReport r =
        RunOnce(config.algorithm, inst, sample.order, config.epsilon, config.budget, real);
    OracleSession ref(shadow, PolicyFor(config.algorithm, inst));
    ref.EnableQueryLog();
    RunOnce(config.algorithm, inst, sample.order, config.epsilon, config.budget, ref);

    const std::vector<ElementSet>& real_hist = real.stored_history();
    const std::vector<ElementSet>& ref_hist = ref.stored_history();
    trial.followed = real_hist.size() >= static_cast<std::size_t>(n) &&
                     ref_hist.size() >= static_cast<std::size_t>(n);
    for (int t = 1; t <= n - 1 && t < static_cast<int>(ref_hist.size()); ++t) {
      if (!trial.any_x && IsRed(inst, sample.order[t - 1]) && HoldsRed(inst, ref_hist[t - 1])) {
        trial.any_x = true;
      }
      if (trial.followed && real_hist[t] != ref_hist[t]) trial.followed = false;
    }
    trial.y = static_cast<int>(ref_hist.size()) > n - 1 && HoldsRed(inst, ref_hist[n - 1]);
    trial.value = r.value;
    trial.max_seen = real.audit().max_value_seen.value_or(Value(0));
    trial.max_stored = r.max_distinct_stored;
    trial.violations = r.violations;

    deviated += trial.deviated();
    over += trial.value > audit.output_bound;
    ratio_sum += ToDouble(Rational(trial.value, audit.optimum));
    if (!trial.deviated()) {
      if (!audit.non_deviating_max_seen || trial.max_seen > *audit.non_deviating_max_seen) {
        audit.non_deviating_max_seen = trial.max_seen;
      }
      if (!trial.followed) ++audit.followed_mismatches;
    }
    if (config.budget && trial.max_stored > *config.budget) ++audit.budget_overruns;
    audit.trials.push_back(std::move(trial));
  }
  audit.deviation = WilsonInterval(deviated, audit.trials.size());
  audit.over_bound = WilsonInterval(over, audit.trials.size());
  audit.mean_ratio = audit.trials.empty() ? 0.0 : ratio_sum / audit.trials.size();
  return audit;
}

namespace {

ordered_json ProportionJson(const Proportion& p) {
  ordered_json j;
  j["hits"] = p.hits;
  j["trials"] = p.trials;
  j["rate"] = p.rate();
  j["ci95"] = {p.lo, p.hi};
  return j;
}

}  // namespace

std::string AuditToJson(const CanonicalAudit& audit) {
  const CanonicalAuditConfig& c = audit.config;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json config;
  config["instance"] = ordered_json::parse(c.instance.ToJson());
  config["algorithm"] = c.algorithm;
  config["budget"] = c.budget ? ordered_json(*c.budget) : ordered_json(nullptr);
  config["epsilon"] = ToString(c.epsilon);
  config["trials"] = c.trials;
  config["seed"] = c.seed;
  j["config"] = config;
  ordered_json trials = ordered_json::array();
  for (const AuditTrial& t : audit.trials) {
    ordered_json row;
    row["seed"] = t.seed;
    row["x"] = t.any_x;
    row["y"] = t.y;
    row["followed"] = t.followed;
    row["value"] = ToString(t.value);
    row["max_seen"] = ToString(t.max_seen);
    row["max_stored"] = t.max_stored;
    row["violations"] = t.violations;
    trials.push_back(row);
  }
  j["trials"] = trials;
  ordered_json agg;
  agg["optimum"] = ToString(audit.optimum);
  agg["output_bound"] = ToString(audit.output_bound);
  agg["deviation"] = ProportionJson(audit.deviation);
  agg["over_bound"] = ProportionJson(audit.over_bound);
  agg["non_deviating_max_seen"] = audit.non_deviating_max_seen
                                      ? ordered_json(ToString(*audit.non_deviating_max_seen))
                                      : ordered_json(nullptr);
  agg["followed_mismatches"] = audit.followed_mismatches;
  agg["budget_overruns"] = audit.budget_overruns;
  agg["mean_ratio"] = audit.mean_ratio;
  agg["predicted_scale"] = audit.predicted_scale;
  j["aggregates"] = agg;
  return j.dump(2) + "\n";
}

std::string AuditToCsv(const CanonicalAudit& audit) {
  std::ostringstream out;
  out << "kind,algorithm,trials,deviation_rate,deviation_lo,deviation_hi,over_bound_rate,"
         "over_bound_lo,over_bound_hi,non_deviating_max_seen,output_bound,mean_ratio,"
         "budget_overruns\n";
  out << InstanceKindName(audit.config.instance.kind) << ',' << audit.config.algorithm << ','
      << audit.trials.size() << ',' << audit.deviation.rate() << ',' << audit.deviation.lo << ','
      << audit.deviation.hi << ',' << audit.over_bound.rate() << ',' << audit.over_bound.lo
      << ',' << audit.over_bound.hi << ','
      << (audit.non_deviating_max_seen ? ToString(*audit.non_deviating_max_seen) : "") << ','
      << ToString(audit.output_bound) << ',' << audit.mean_ratio << ','
      << audit.budget_overruns << '\n';
  return out.str();
}

}  // namespace substream::harness
