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

#include <memory>

#include "substream/access.hpp"
#include "substream/hard_cardinality.hpp"
#include "substream/matroid.hpp"
#include "substream/oracle.hpp"
#include "substream/rng.hpp"
#include "support/expect_error.hpp"
#include "support/reference.hpp"

namespace substream {
namespace {

OraclePtr Additive(std::vector<int> weights) {
  std::vector<Value> w(weights.begin(), weights.end());
  return std::make_shared<AdditiveOracle>(std::move(w));
}

TEST(OracleTest, AdditiveSumsWeights) {
  auto f = Additive({3, 2, 5});
  EXPECT_EQ(f->Evaluate({}), 0);
  EXPECT_EQ(f->Evaluate({0, 2}), 8);
  EXPECT_EQ(f->ground_size(), 3);
}

TEST(OracleTest, CoverageCountsEachItemOnce) {
  CoverageOracle f({{0, 1}, {1, 2}, {}}, {Value(4), Value(2), Value(1)});
  EXPECT_EQ(f.Evaluate({0}), 6);
  EXPECT_EQ(f.Evaluate({0, 1}), 7);
  EXPECT_EQ(f.Evaluate({2}), 0);
}

TEST(MarginalTest, EmptyAdditionIsZero) {
  auto f = Additive({3, 2});
  EXPECT_EQ(Marginal(*f, {}, {0}), 0);
  EXPECT_EQ(Marginal(*f, {1}, {0}), 2);
}

TEST(MarginalTest, RedOnTopOfFourBlues) {
  const CardHardParams params{12, 4, 4};
  const auto inst = CardHardInstance::Instantiate(params, 5);
  std::vector<ElementId> blues;
  ElementId red = -1;
  for (ElementId e = 0; e < params.n; ++e) {
    if (inst.ColorOf(e) == Color::kBlue && blues.size() < 4) blues.push_back(e);
    if (inst.ColorOf(e) == Color::kRed) red = e;
  }
  EXPECT_EQ(Marginal(*inst.oracle(), {red}, ElementSet(blues)), 3);
}

TEST(RestrictTest, EmptyPinIsIdentity) {
  Rng rng(1);
  auto f = testing::RandomCoverage(5, 8, rng);
  auto g = Restrict(f, {});
  for (const ElementSet& s : testing::SubsetsUpTo(5, 5)) {
    EXPECT_EQ(g->Evaluate(s), f->Evaluate(s));
  }
}

TEST(RestrictTest, NestingMatchesUnionOnAllSubsets) {
  Rng rng(2);
  auto f = testing::RandomCoverage(6, 10, rng);
  auto twice = Restrict(Restrict(f, {0, 1}), {1, 4});
  auto once = Restrict(f, {0, 1, 4});
  for (const ElementSet& s : testing::SubsetsUpTo(6, 6)) {
    ASSERT_EQ(twice->Evaluate(s), once->Evaluate(s)) << s.ToString();
  }
  // Flattened onto the original base.
  auto* residual = dynamic_cast<const ResidualOracle*>(twice.get());
  ASSERT_NE(residual, nullptr);
  EXPECT_EQ(residual->base(), f);
  EXPECT_EQ(residual->pinned(), (ElementSet{0, 1, 4}));
}

TEST(RestrictTest, ResidualMatchesDefinitionOnRandomSets) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testing::RandomCoverage(10, 12, rng);
    ElementSet s, t;
    for (int e = 0; e < 10; ++e) {
      if (rng.Bernoulli(1, 3)) s.Insert(e);
      if (rng.Bernoulli(1, 2)) t.Insert(e);
    }
    auto g = Restrict(f, s);
    EXPECT_EQ(g->Evaluate(t), f->Evaluate(t.Union(s)) - f->Evaluate(s));
  }
}

TEST(RestrictTest, BlueResidualMatchesBlueGain) {
  const CardHardParams params{12, 4, 4};
  const auto inst = CardHardInstance::Instantiate(params, 9);
  std::vector<ElementId> blues;
  for (ElementId e = 0; e < params.n; ++e) {
    if (inst.ColorOf(e) == Color::kBlue) blues.push_back(e);
  }
  auto g = Restrict(inst.oracle(), {blues[0]});
  EXPECT_EQ(g->Evaluate({blues[1]}), DeltaBlue(1, 0, params));
}

TEST(AccessTest, StrongAnswersAndCounts) {
  OracleSession session(Additive({1, 2, 3}), AccessPolicy::Strong());
  EXPECT_EQ(session.Query({0, 1, 2}), Value(6));
  EXPECT_EQ(session.audit().query_count, 1);
  EXPECT_TRUE(session.audit().compliant());
}

TEST(AccessTest, WeakRejectsInfeasibleSets) {
  auto m = std::make_shared<UniformMatroid>(3, 2);
  OracleSession session(Additive({1, 2, 3}), AccessPolicy::Weak(m));
  EXPECT_EQ(session.Query({0, 1}), Value(3));
  EXPECT_FALSE(session.Query({0, 1, 2}).has_value());
  ASSERT_EQ(session.audit().rejected_queries.size(), 1u);
  EXPECT_EQ(session.audit().rejected_queries[0].reason, "weak: infeasible query");
  EXPECT_EQ(session.audit().query_count, 1);
  EXPECT_FALSE(session.audit().compliant());
}

TEST(AccessTest, WeakNeedsConstraint) {
  EXPECT_ERROR_CODE(AccessPolicy::Weak(nullptr), ErrorCode::kInvalidArgument);
}

TEST(AccessTest, ElementStoreWindowIsStoredPlusArrival) {
  // a=0, b=1, c=2, d=3.
  OracleSession session(Additive({1, 1, 1, 1}), AccessPolicy::ElementStore());
  session.BeginArrival(0);
  session.ReportStored({0}, 1);
  session.BeginArrival(1);
  session.ReportStored({0, 1}, 2);
  session.BeginArrival(2);
  EXPECT_TRUE(session.Query({0, 2}).has_value());
  EXPECT_FALSE(session.Query({0, 3}).has_value());
  ASSERT_EQ(session.audit().rejected_queries.size(), 1u);
  EXPECT_EQ(session.audit().rejected_queries[0].step, 3);
  session.ReportStored({2}, 1);
  session.EndStream();
  EXPECT_TRUE(session.Query({2}).has_value());
  EXPECT_FALSE(session.Query({0}).has_value());
  EXPECT_EQ(session.audit().max_distinct_stored, 2u);
  EXPECT_EQ(session.audit().max_stored, 2u);
}

TEST(AccessTest, RejectedQueryNeverRevealsValue) {
  auto m = std::make_shared<UniformMatroid>(4, 1);
  OracleSession session(Additive({5, 7, 1, 1}), AccessPolicy::Weak(m));
  EXPECT_FALSE(session.Query({0, 1}).has_value());
  EXPECT_FALSE(session.audit().max_value_seen.has_value());
  EXPECT_EQ(session.Query({1}), Value(7));
  EXPECT_EQ(session.audit().max_value_seen, Value(7));
}

TEST(AccessTest, OutOfRangeElementIsRejected) {
  OracleSession session(Additive({1}), AccessPolicy::Strong());
  EXPECT_FALSE(session.Query({3}).has_value());
}

TEST(AccessTest, QueryLogReplaysInsideWindow) {
  OracleSession session(Additive({1, 2, 3, 4}), AccessPolicy::ElementStore());
  session.EnableQueryLog();
  ElementSet stored;
  for (ElementId e = 0; e < 4; ++e) {
    session.BeginArrival(e);
    session.Query(stored.With(e));
    if (e % 2 == 0) stored.Insert(e);
    session.ReportStored(stored, stored.size());
  }
  const auto& history = session.stored_history();
  ASSERT_EQ(history.size(), 5u);
  for (const LoggedQuery& q : session.query_log()) {
    const ElementSet window = history[q.step - 1].With(static_cast<ElementId>(q.step - 1));
    EXPECT_TRUE(q.set.IsSubsetOf(window));
  }
  EXPECT_EQ(session.audit().max_aux_words, 0u);
  session.ReportAuxWords(12);
  EXPECT_EQ(session.audit().max_aux_words, 12u);
}

}  // namespace
}  // namespace substream
