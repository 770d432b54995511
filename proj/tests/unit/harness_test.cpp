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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "substream/baselines.hpp"
#include "substream/hard_cardinality.hpp"
#include "substream/hard_matroid.hpp"
#include "substream/harness/audit.hpp"
#include "substream/harness/cli.hpp"
#include "substream/harness/experiment.hpp"
#include "substream/harness/instance.hpp"
#include "substream/harness/sampler.hpp"
#include "substream/harness/tables.hpp"
#include "support/expect_error.hpp"

namespace substream::harness {
namespace {

InstanceSpec CardSpec(int K, int h, int n, std::uint64_t seed = 1) {
  InstanceSpec spec;
  spec.kind = InstanceKind::kCardinality;
  spec.K = K;
  spec.h = h;
  spec.n = n;
  spec.seed = seed;
  return spec.Normalized();
}

InstanceSpec MatSpec(int K, int m, std::uint64_t seed = 1) {
  InstanceSpec spec;
  spec.kind = InstanceKind::kMatroid;
  spec.K = K;
  spec.m = m;
  spec.seed = seed;
  return spec.Normalized();
}

InstanceSpec CoverageSpec(int K, int n, std::uint64_t seed = 1) {
  InstanceSpec spec;
  spec.kind = InstanceKind::kCoverage;
  spec.K = K;
  spec.n = n;
  spec.seed = seed;
  return spec.Normalized();
}

int Cli(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

TEST(InstanceTest, Defaults) {
  EXPECT_EQ(CardSpec(3, 0, 0).h, 3);
  EXPECT_EQ(CardSpec(3, 0, 0).n, 6);
  EXPECT_EQ(MatSpec(3, 0).m, 4);
  EXPECT_EQ(CoverageSpec(2, 7).universe, 14);
}

TEST(InstanceTest, JsonRoundTrip) {
  for (const InstanceSpec& spec : {CardSpec(3, 5, 12, 9), MatSpec(2, 5, 4), CoverageSpec(2, 7, 3)}) {
    const InstanceSpec back = InstanceSpec::FromJson(spec.ToJson());
    EXPECT_EQ(back.ToJson(), spec.ToJson());
  }
}

TEST(InstanceTest, RejectsForeignPrng) {
  std::string text = CardSpec(2, 2, 6).ToJson();
  text.replace(text.find("mt19937_64"), 10, "xorshift64");
  EXPECT_ERROR_CODE(InstanceSpec::FromJson(text), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(InstanceSpec::FromJson("[1, 2"), ErrorCode::kInvalidArgument);
}

TEST(InstanceTest, SameSeedSameInstance) {
  const Instance a = BuildInstance(CoverageSpec(2, 6, 5));
  const Instance b = BuildInstance(CoverageSpec(2, 6, 5));
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    ElementSet s;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) s.Insert(i);
    }
    ASSERT_EQ(a.oracle->Evaluate(s), b.oracle->Evaluate(s));
  }
}

// The closed forms must agree with enumeration wherever enumeration is cheap.
TEST(InstanceTest, ExactOptimumMatchesBruteForce) {
  for (int K = 2; K <= 3; ++K) {
    for (int h : {K, K + 1, 2 * K}) {
      const Instance inst = BuildInstance(CardSpec(K, h, 2 * K + 3));
      EXPECT_EQ(ExactOptimum(inst), BruteForceOptimum(*inst.oracle, *inst.constraint).value);
      EXPECT_EQ(ExactOptimum(inst), CardOptimalValue(inst.card->params()));
    }
    for (int m = 1; m <= 3; ++m) {
      const Instance inst = BuildInstance(MatSpec(K, m));
      EXPECT_EQ(ExactOptimum(inst), BruteForceOptimum(*inst.oracle, *inst.constraint).value);
      EXPECT_EQ(ExactOptimum(inst), MatOptimalValue(K));
    }
  }
}

TEST(SamplerTest, CardDPutsPurpleLast) {
  const Instance inst = BuildInstance(CardSpec(3, 4, 15));
  std::set<std::vector<ElementId>> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StreamSample s = SampleStream(inst, Distribution::kCardD, seed);
    ASSERT_EQ(s.order.size(), 15u);
    EXPECT_EQ(s.order.back(), inst.card->purple());
    std::vector<ElementId> sorted = s.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 15; ++i) ASSERT_EQ(sorted[i], ElementId(i));
    seen.insert(s.order);
  }
  EXPECT_GT(seen.size(), 90u);
}

TEST(SamplerTest, MatroidDKeepsClassBlocks) {
  const int K = 3, m = 5;
  const Instance inst = BuildInstance(MatSpec(K, m));
  std::set<std::vector<ElementId>> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StreamSample s = SampleStream(inst, Distribution::kMatroidD, seed);
    ASSERT_EQ(s.order.size(), std::size_t((K - 1) * m + 1));
    for (std::size_t pos = 0; pos < s.order.size(); ++pos) {
      const int want = std::min<int>(int(pos) / m, K - 1);
      ASSERT_EQ(inst.mat->ClassOf(s.order[pos]), want) << "position " << pos;
    }
    seen.insert(s.order);
  }
  EXPECT_GT(seen.size(), 50u);
}

TEST(SamplerTest, IncompatibleDistribution) {
  const Instance coverage = BuildInstance(CoverageSpec(2, 6));
  EXPECT_ERROR_CODE(SampleStream(coverage, Distribution::kCardD, 0),
                    ErrorCode::kIncompatibleDistribution);
  EXPECT_ERROR_CODE(SampleStream(BuildInstance(CardSpec(2, 2, 6)), Distribution::kMatroidD, 0),
                    ErrorCode::kIncompatibleDistribution);
  EXPECT_NO_THROW(SampleStream(coverage, Distribution::kUniform, 0));
}

TEST(ExperimentTest, ReportsAreByteIdentical) {
  ExperimentConfig config;
  config.instance = CoverageSpec(2, 7, 11);
  config.trials = 4;
  config.seed = 99;
  const std::string first = ReportToJson(RunExperiment(config));
  EXPECT_EQ(first, ReportToJson(RunExperiment(config)));
  config.seed = 100;
  EXPECT_NE(first, ReportToJson(RunExperiment(config)));
}

TEST(ExperimentTest, BranchingOnHardMatroid) {
  ExperimentConfig config;
  config.instance = MatSpec(3, 4);
  config.epsilon = Rational(1, 20);
  config.trials = 20;
  const RunReport report = RunExperiment(config);
  ASSERT_EQ(report.completed(), 20u);
  EXPECT_EQ(report.total_violations(), 0u);
  EXPECT_EQ(report.infeasible(), 0u);
  ASSERT_TRUE(report.min_ratio());
  EXPECT_GE(*report.min_ratio(), Rational(1, 2));
}

TEST(ExperimentTest, GreedyOnHardCardinality) {
  ExperimentConfig config;
  config.instance = CardSpec(4, 4, 40);
  config.algorithm = "greedy";
  const RunReport report = RunExperiment(config);
  ASSERT_EQ(report.trials.size(), 1u);
  EXPECT_EQ(report.trials[0].value, 31);
  EXPECT_EQ(report.optimum, CardOptimalValue({40, 4, 4}));
}

TEST(ExperimentTest, UnknownAlgorithm) {
  EXPECT_FALSE(IsKnownAlgorithm("lazy"));
  ExperimentConfig config;
  config.instance = CoverageSpec(2, 5);
  config.algorithm = "lazy";
  EXPECT_ERROR_CODE(RunExperiment(config), ErrorCode::kInvalidArgument);
}

TEST(AuditTest, WilsonInterval) {
  const Proportion none = WilsonInterval(0, 100);
  EXPECT_EQ(none.lo, 0.0);
  EXPECT_NEAR(none.hi, 0.0370, 1e-4);
  const Proportion half = WilsonInterval(50, 100);
  EXPECT_NEAR(half.lo, 0.4038, 1e-4);
  EXPECT_NEAR(half.hi, 0.5962, 1e-4);
  EXPECT_EQ(WilsonInterval(7, 7).hi, 1.0);
}

TEST(AuditTest, HalvingConsistency) {
  EXPECT_TRUE(HalvingConsistent(WilsonInterval(40, 100), WilsonInterval(20, 100)));
  EXPECT_FALSE(HalvingConsistent(WilsonInterval(80, 100), WilsonInterval(80, 100)));
  EXPECT_TRUE(HalvingConsistent(WilsonInterval(0, 100), WilsonInterval(0, 100)));
}

// Storing everything lets two reds meet, so every trial leaves the shadow.
TEST(AuditTest, StoreAllAlwaysDeviates) {
  CanonicalAuditConfig config;
  config.instance = CardSpec(3, 3, 30);
  config.algorithm = "store-all";
  config.trials = 10;
  const CanonicalAudit audit = RunCanonicalAudit(config);
  EXPECT_EQ(audit.deviation.hits, 10u);
  EXPECT_EQ(audit.over_bound.hits, 10u);
}

TEST(AuditTest, SmallBudgetSieveStaysCanonical) {
  CanonicalAuditConfig config;
  config.instance = MatSpec(3, 200);
  config.budget = 4;
  config.trials = 30;
  const CanonicalAudit audit = RunCanonicalAudit(config);
  EXPECT_EQ(audit.budget_overruns, 0u);
  EXPECT_EQ(audit.followed_mismatches, 0u);
  EXPECT_LE(audit.deviation.rate(), 0.2);
  for (const AuditTrial& t : audit.trials) {
    if (!t.deviated()) EXPECT_LE(t.value, audit.output_bound);
  }
  if (audit.non_deviating_max_seen) {
    EXPECT_LE(*audit.non_deviating_max_seen, audit.output_bound);
  }
}

TEST(AuditTest, RejectsCoverage) {
  CanonicalAuditConfig config;
  config.instance = CoverageSpec(2, 6);
  EXPECT_ERROR_CODE(RunCanonicalAudit(config), ErrorCode::kIncompatibleDistribution);
}

TEST(TablesTest, Landmarks) {
  const std::string t3 = EmitTable(3);
  const std::string t4 = EmitTable(4);
  EXPECT_NE(t3.find("\n0,0,2,"), std::string::npos);
  EXPECT_EQ(EmitTable(2).substr(0, 36), "b,f_r0,dr_r0,f_r1,dr_r1,f_r2,dr_r2,f");
  EXPECT_ERROR_CODE(EmitTable(5), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(DiffCsv(t3, t3).empty());
  EXPECT_FALSE(DiffCsv(t3, t4).empty());
}

TEST(TablesTest, DiffNamesTheCell) {
  const std::vector<std::string> diffs = DiffCsv("a,b\n1,2\n", "a,b\n1,3\n");
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_NE(diffs[0].find('2'), std::string::npos);
  EXPECT_NE(diffs[0].find('3'), std::string::npos);
}

TEST(CliTest, TablesMatchGolden) {
  for (const char* which : {"2", "3", "4"}) {
    std::string err;
    EXPECT_EQ(Cli({"tables", "--which", which, "--check"}, nullptr, &err), kExitOk) << err;
  }
}

TEST(CliTest, TablesCheckDetectsDrift) {
  const std::string dir = ::testing::TempDir() + "/golden_drift";
  std::string t3;
  ASSERT_EQ(Cli({"tables", "--which", "3"}, &t3), kExitOk);
  std::filesystem::create_directories(dir);
  t3[t3.find("92")] = '8';
  std::ofstream(dir + "/table3.csv") << t3;
  std::string err;
  EXPECT_EQ(Cli({"tables", "--which", "3", "--check", "--golden", dir}, nullptr, &err),
            kExitMismatch);
  EXPECT_NE(err.find("mismatch"), std::string::npos);
}

TEST(CliTest, VerifyExhaustive) {
  std::string out;
  EXPECT_EQ(Cli({"verify", "--constraint", "matroid", "--K", "3", "--m", "3", "--exhaustive"},
                &out),
            kExitOk);
  EXPECT_NE(out.find("exhaustive"), std::string::npos);
  EXPECT_EQ(Cli({"verify", "--constraint", "cardinality", "--K", "3", "--n", "9", "--exhaustive"}),
            kExitOk);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"run", "--kind", "coverage", "--K", "2", "--n", "5", "--alg", "lazy"}),
            kExitUsage);
  EXPECT_EQ(Cli({}), kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Cli({"tables"}), kExitUsage);
  EXPECT_EQ(Cli({"--format", "xml", "sweep"}), kExitUsage);
  EXPECT_EQ(Cli({"gen", "--kind", "cardinality", "--K", "0"}), kExitUsage);
  EXPECT_EQ(Cli({"--help"}), kExitOk);
}

TEST(CliTest, GenThenRunFromFile) {
  const std::string path = ::testing::TempDir() + "/inst.json";
  ASSERT_EQ(Cli({"--seed", "7", "--out", path, "gen", "--kind", "coverage", "--K", "2", "--n",
                 "6"}),
            kExitOk);
  std::string csv;
  EXPECT_EQ(Cli({"--format", "csv", "run", "--instance", path, "--trials", "3"}, &csv), kExitOk);
  EXPECT_EQ(csv.substr(0, 5), "kind,");
  EXPECT_NE(csv.find("\ncoverage,branching,3,3,"), std::string::npos);
}

TEST(CliTest, SeedChangesTrialSeeds) {
  std::string a, b;
  Cli({"--seed", "1", "run", "--kind", "coverage", "--K", "2", "--n", "6", "--trials", "2"}, &a);
  Cli({"--seed", "2", "run", "--kind", "coverage", "--K", "2", "--n", "6", "--trials", "2"}, &b);
  EXPECT_NE(a, b);
}

}  // namespace
}  // namespace substream::harness
