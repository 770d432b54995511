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
#include <memory>
#include <vector>

#include "substream/access.hpp"
#include "substream/baselines.hpp"
#include "substream/branch_tree.hpp"
#include "substream/error.hpp"
#include "substream/hard_cardinality.hpp"
#include "substream/matroid.hpp"
#include "substream/oracle.hpp"
#include "substream/rng.hpp"
#include "support/expect_error.hpp"
#include "support/reference.hpp"

namespace substream {
namespace {

using testing::RefCardinality;
using testing::RefMatroid;

Pin PinOf(const ValueOracle& f, const ElementSet& set) { return {set, f.Evaluate(set)}; }

// Feeds `order` into `tree` through `session`.
BranchResult Feed(BranchTree& tree, OracleSession& session, const std::vector<ElementId>& order) {
  StepCache cache;
  for (ElementId e : order) {
    session.BeginArrival(e);
    tree.Process(e, session, cache);
  }
  session.EndStream();
  return tree.Result();
}

std::vector<ElementId> Shuffled(int n, Rng& rng) {
  std::vector<ElementId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.Shuffle(std::span<ElementId>(order));
  return order;
}

// Best g(T) = f(P + T) - f(P) over T drawn from `pool` with |T| <= k and
// P + T independent in `m` (null: no constraint).
Value BestResidual(const ValueOracle& f, const ElementSet& pinned,
                   const std::vector<ElementId>& pool, int k, const Matroid* m,
                   bool exact_size = false) {
  const Value base = f.Evaluate(pinned);
  Value best = -1;
  const int n = static_cast<int>(pool.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElementSet t = pinned;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) t.Insert(pool[i]);
    }
    const int size = static_cast<int>(t.size() - pinned.size());
    if (size > k || (exact_size && size != k)) continue;
    if (m != nullptr && !m->IsIndependent(t)) continue;
    best = std::max(best, f.Evaluate(t) - base);
  }
  return best;
}

TEST(CardinalityTreeTest, AdditiveExample) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{3, 2, 2});
  OracleSession session(f, AccessPolicy::Strong());
  CardinalityTree tree(2, 2, Rational(5), PinOf(*f, {}));
  const BranchResult r = Feed(tree, session, {0, 1, 2});
  EXPECT_EQ(r.solution, (ElementSet{0, 1}));
  EXPECT_EQ(r.gain, 5);
  EXPECT_TRUE(tree.single_pass_ok());
}

TEST(CardinalityTreeTest, EmptyStream) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{3});
  OracleSession session(f, AccessPolicy::Strong());
  const BranchResult r = CardinalityBranch(session, {}, 2, 2, Rational(5), PinOf(*f, {}));
  EXPECT_TRUE(r.solution.empty());
  EXPECT_EQ(r.gain, 0);
  EXPECT_ERROR_CODE(CardinalityTree(0, 1, Rational(1), PinOf(*f, {})),
                    ErrorCode::kInvalidArgument);
}

TEST(CardinalityTreeTest, UnitBudgetKeepsEarliestBest) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{1, 4, 2, 4});
  for (auto [k, s] : {std::pair{1, 3}, std::pair{3, 1}}) {
    OracleSession session(f, AccessPolicy::Strong());
    const std::vector<ElementId> order{2, 3, 0, 1};
    const BranchResult r = CardinalityBranch(session, order, k, s, Rational(100),
                                             PinOf(*f, {}));
    EXPECT_EQ(r.solution, (ElementSet{3}));
    EXPECT_EQ(r.gain, 4);
  }
}

// Every branch fires when v is tiny, so the node count meets the recurrence
// N(k, s) = N(k - 1, s) + N(k, s - 1) + 1 with N = 1 on the borders.
TEST(CardinalityTreeTest, SaturatedNodeCount) {
  auto count = [](auto&& self, int k, int s) -> std::int64_t {
    if (k == 1 || s == 1) return 1;
    return self(self, k - 1, s) + self(self, k, s - 1) + 1;
  };
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>(8, Value(10)));
  for (int k = 1; k <= 4; ++k)
    for (int s = 1; s <= 4; ++s) {
      CardinalityTree tree(k, s, Rational(1), PinOf(*f, {}));
      OracleSession session(f, AccessPolicy::Strong());
      Feed(tree, session, {0, 1, 2, 3, 4, 5, 6, 7});
      EXPECT_EQ(tree.nodes(), count(count, k, s)) << k << "," << s;
    }
  CardinalityTree tree(3, 3, Rational(1), PinOf(*f, {}));
  OracleSession session(f, AccessPolicy::Strong());
  Feed(tree, session, {0, 1, 2, 3});
  EXPECT_EQ(tree.nodes(), 11);
}

// Per run the count is capped by the saturated count; the worst case over a
// random suite obeys the recurrence.
TEST(CardinalityTreeTest, NodeCountRespectsRecurrence) {
  constexpr std::int64_t kSaturated[4][4] = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 3, 5}, {0, 1, 5, 11}};
  std::int64_t worst[4][4] = {};
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    OraclePtr f = testing::RandomCoverage(8, 10, rng);
    const auto order = Shuffled(8, rng);
    const Rational v(static_cast<int>(rng.UniformInt(1, 60)));
    for (int k = 1; k <= 3; ++k)
      for (int s = 1; s <= 3; ++s) {
        CardinalityTree tree(k, s, v, PinOf(*f, {}));
        OracleSession session(f, AccessPolicy::Strong());
        Feed(tree, session, order);
        EXPECT_LE(tree.nodes(), kSaturated[k][s]);
        worst[k][s] = std::max(worst[k][s], tree.nodes());
      }
  }
  for (int k = 2; k <= 3; ++k)
    for (int s = 2; s <= 3; ++s) {
      EXPECT_LE(worst[k][s], worst[k - 1][s] + worst[k][s - 1] + 1) << k << "," << s;
    }
}

TEST(CardinalityTreeTest, MatchesDirectRecursion) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 8));
    OraclePtr f = testing::RandomCoverage(n, 8, rng);
    auto order = Shuffled(n, rng);
    ElementSet pinned;
    if (n > 2 && rng.Bernoulli(1, 2)) {
      pinned.Insert(order.back());
      order.pop_back();
    }
    const int k = static_cast<int>(rng.UniformInt(1, 3));
    const int s = static_cast<int>(rng.UniformInt(1, 3));
    const Rational v(rng.UniformInt(0, 80), rng.UniformInt(1, 3));
    OracleSession session(f, AccessPolicy::Strong());
    CardinalityTree tree(k, s, v, PinOf(*f, pinned));
    const BranchResult got = Feed(tree, session, order);
    const testing::RefResult want = RefCardinality(*f, pinned, order, k, s, v);
    EXPECT_EQ(got.solution, want.solution) << "trial " << trial;
    EXPECT_EQ(got.gain, want.gain) << "trial " << trial;
    EXPECT_EQ(got.gain, f->Evaluate(pinned.Union(got.solution)) - f->Evaluate(pinned));
    EXPECT_TRUE(tree.single_pass_ok());
  }
}

// Whenever some T with |T| <= k and g(T) >= v exists in the suffix, the
// tree returns S with |S| <= s and g(S) >= s / (k + s - 1) v.
TEST(CardinalityTreeTest, GuaranteeWhenTargetReachable) {
  Rng rng(17);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 9));
    OraclePtr f;
    if (trial % 3 == 2) {
      const int K = static_cast<int>(rng.UniformInt(1, std::min(4, n / 2)));
      const int h = static_cast<int>(rng.UniformInt(K, 2 * K));
      f = CardHardInstance::Instantiate({n, K, h}, rng.Next()).oracle();
    } else {
      f = testing::RandomCoverage(n, 9, rng);
    }
    const auto order = Shuffled(n, rng);
    for (int k = 1; k <= 3; ++k)
      for (int s = 1; s <= 3; ++s) {
        const Value opt = BestResidual(*f, {}, order, k, nullptr);
        // Any v up to the best value is reachable.
        const Rational v = Rational(opt) * Rational(rng.UniformInt(1, 4), 4);
        OracleSession session(f, AccessPolicy::Weak(std::make_shared<UniformMatroid>(n, s)));
        CardinalityTree tree(k, s, v, PinOf(*f, {}));
        const BranchResult r = Feed(tree, session, order);
        EXPECT_LE(static_cast<int>(r.solution.size()), s);
        EXPECT_GE(Rational(r.gain) * (k + s - 1), v * s)
            << "trial " << trial << " k=" << k << " s=" << s;
        EXPECT_TRUE(session.audit().compliant());
        ++checked;
      }
  }
  EXPECT_EQ(checked, 120 * 9);
}

TEST(MatroidTreeTest, Guardrails) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>(6, Value(1)));
  auto part = std::make_shared<PartitionMatroid>(PartitionMatroid::UnitCapacity({0, 0, 1, 1, 2, 2}));
  EXPECT_ERROR_CODE(MatroidTree(part, 3, 2, Rational(1), PinOf(*f, {0, 1})),
                    ErrorCode::kDependentInput);
  EXPECT_ERROR_CODE(MatroidTree(part, 3, 0, Rational(1), PinOf(*f, {})),
                    ErrorCode::kInvalidArgument);
  auto wide = std::make_shared<UniformMatroid>(6, 5);
  EXPECT_ERROR_CODE(MatroidTree(wide, 5, 1, Rational(1), PinOf(*f, {})),
                    ErrorCode::kRankTooLarge);
  MatroidTreeOptions options;
  options.allow_large_rank = true;
  MatroidTree allowed(wide, 5, 1, Rational(1), PinOf(*f, {}), options);
  EXPECT_EQ(allowed.beta(), 312);
  EXPECT_EQ(MatroidTree(part, 3, 1, Rational(1), PinOf(*f, {})).beta(), 40);
  EXPECT_EQ(MatroidTree(part, 2, 1, Rational(1), PinOf(*f, {})).beta(), 8);
}

TEST(MatroidTreeTest, SingleStepKeepsBestIndependentSingleton) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{5, 9, 7, 9});
  auto part = std::make_shared<PartitionMatroid>(PartitionMatroid::UnitCapacity({0, 0, 1, 1}));
  OracleSession session(f, AccessPolicy::Weak(part));
  // Element 1 shares a class with the pinned element 0.
  const BranchResult r = MatroidBranch(session, std::vector<ElementId>{1, 2, 3}, part, 2, 1,
                                       Rational(100), PinOf(*f, {0}));
  EXPECT_EQ(r.solution, (ElementSet{3}));
  EXPECT_EQ(r.gain, 9);
  EXPECT_TRUE(session.audit().compliant());
}

TEST(MatroidTreeTest, ModularTwoClassesTakesBothMaxima) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{10, 1, 3, 10, 2});
  auto part = std::make_shared<PartitionMatroid>(
      PartitionMatroid::UnitCapacity({0, 0, 1, 1, 1}));
  const Solution opt = BruteForceOptimum(*f, *part);
  OracleSession session(f, AccessPolicy::Weak(part));
  const BranchResult r = MatroidBranch(session, std::vector<ElementId>{0, 1, 2, 3, 4}, part,
                                       2, 2, Rational(opt.value), PinOf(*f, {}));
  EXPECT_EQ(r.solution, (ElementSet{0, 3}));
  EXPECT_EQ(r.gain, opt.value);
}

TEST(MatroidTreeTest, EmptyStream) {
  auto f = std::make_shared<AdditiveOracle>(std::vector<Value>{1, 2});
  auto u = std::make_shared<UniformMatroid>(2, 2);
  OracleSession session(f, AccessPolicy::Weak(u));
  const BranchResult r = MatroidBranch(session, {}, u, 2, 2, Rational(3), PinOf(*f, {}));
  EXPECT_TRUE(r.solution.empty());
  EXPECT_EQ(r.gain, 0);
}

MatroidPtr RandomPartition(int n, int classes, Rng& rng) {
  std::vector<int> class_of(n);
  for (int& c : class_of) c = static_cast<int>(rng.UniformInt(0, classes - 1));
  // Make sure every class is used so the rank equals `classes`.
  for (int c = 0; c < classes && c < n; ++c) class_of[c] = c;
  return std::make_shared<PartitionMatroid>(PartitionMatroid::UnitCapacity(class_of));
}

TEST(MatroidTreeTest, MatchesDirectRecursion) {
  Rng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 7));
    const int K = static_cast<int>(rng.UniformInt(1, std::min(3, n)));
    OraclePtr f = testing::RandomCoverage(n, 8, rng);
    MatroidPtr m = rng.Bernoulli(1, 2) ? RandomPartition(n, K, rng)
                                       : MatroidPtr(std::make_shared<UniformMatroid>(n, K));
    auto order = Shuffled(n, rng);
    ElementSet pinned;
    int k = static_cast<int>(rng.UniformInt(1, K));
    if (K > 1 && k == K && rng.Bernoulli(1, 2)) {
      pinned.Insert(order.back());
      order.pop_back();
      --k;
    }
    const Rational v(rng.UniformInt(0, 120), rng.UniformInt(1, 3));
    OracleSession session(f, AccessPolicy::Weak(m));
    MatroidTree tree(m, K, k, v, PinOf(*f, pinned));
    const BranchResult got = Feed(tree, session, order);
    const testing::RefResult want = RefMatroid(*f, *m, K, pinned, order, k, v);
    EXPECT_EQ(got.solution, want.solution) << "trial " << trial;
    EXPECT_EQ(got.gain, want.gain) << "trial " << trial;
    EXPECT_TRUE(m->IsIndependent(pinned.Union(got.solution)));
    EXPECT_TRUE(tree.single_pass_ok());
    EXPECT_TRUE(session.audit().compliant());
  }
}

// With T of size k, I + T independent and g(T) >= v in the suffix, the
// tree returns S with I + S independent and g(S) >= (1 - 1/(2K - k)) v / 2.
TEST(MatroidTreeTest, GuaranteeWhenTargetReachable) {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(3, 8));
    const int K = static_cast<int>(rng.UniformInt(2, 3));
    OraclePtr f = testing::RandomCoverage(n, 9, rng);
    MatroidPtr m = RandomPartition(n, K, rng);
    auto order = Shuffled(n, rng);
    ElementSet pinned;
    if (rng.Bernoulli(1, 2)) {
      pinned.Insert(order.back());
      order.pop_back();
    }
    const int k = K - static_cast<int>(pinned.size());
    const Value opt = BestResidual(*f, pinned, order, k, m.get(), /*exact_size=*/true);
    if (opt < 0) continue;  // no independent completion of size k
    const Rational v = Rational(opt) * Rational(rng.UniformInt(2, 4), 4);
    OracleSession session(f, AccessPolicy::Weak(m));
    MatroidTree tree(m, K, k, v, PinOf(*f, pinned));
    const BranchResult r = Feed(tree, session, order);
    EXPECT_TRUE(m->IsIndependent(pinned.Union(r.solution)));
    EXPECT_GE(Rational(r.gain) * 2 * (2 * K - k), v * (2 * K - k - 1))
        << "trial " << trial;
    EXPECT_TRUE(session.audit().compliant());
  }
}

}  // namespace
}  // namespace substream
