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

// Event-driven branch trees for the two weak-oracle streaming algorithms.
//
// The recursive procedures are unrolled over one physical pass: every arrival
// is dispatched to all live nodes, and a node that accepts e spawns its child
// so that the child first sees the element after e. Values compose bottom-up
// through residual gains, so returning a result needs no extra queries.
//
// Cardinality(k, s, v, g)
//   k = 1 or s = 1: keep argmax_e g(e).
//   otherwise:
//     branch 1: the first e with g(e) >= v / (k + s - 1) spawns
//               Cardinality(k, s - 1, v - g(e), g(. | e)) on the elements after e.
//     branch 2: Cardinality(k - 1, s, (k + s - 2) / (k + s - 1) v, g) on all
//               elements, created together with its parent.
//     return the better of {e} + S' and S2.
//
// Matroid(k, v, g, I), with K the rank and beta = floor(K^4 / 2)
//   for every b in 0..beta, while |I u T_b| < K: an arrival e with
//   I u T_b + e independent and g(e) >= b v / K^4 joins T_b and spawns
//   Matroid(k - 1, (1 - 1/K^4) v - 2 g(e), g(. | e), I + e) on the elements
//   after e (only when k > 1). Branch 0 keeps argmax g(e) over e with I + e
//   independent. Return the best of all branches.
//
// A child of the matroid tree depends on e but not on b, so equal children
// spawned by different b are run once and carry a multiplicity; space is
// accounted as if every copy were kept.
#ifndef SUBSTREAM_BRANCH_TREE_HPP_
#define SUBSTREAM_BRANCH_TREE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "substream/access.hpp"
#include "substream/element_set.hpp"
#include "substream/matroid.hpp"
#include "substream/numeric.hpp"
#include "substream/stream.hpp"

namespace substream {

// The residual g = f(. | set) of a node, with f(set) already known.
struct Pin {
  ElementSet set;
  Value value;
};

// Queries f(empty set) to pin the unrestricted function.
Pin RootPin(OracleSession& session, StepCache& cache);

struct BranchResult {
  ElementSet solution;  // excludes the pinned set
  Value gain;           // g(solution)
};

class BranchTree {
 public:
  virtual ~BranchTree() = default;
  virtual void Process(ElementId e, OracleSession& session, StepCache& cache) = 0;
  virtual BranchResult Result() const = 0;
  virtual std::size_t Retained() const = 0;
  virtual void CollectStored(std::vector<ElementId>& out) const = 0;
  // Nodes actually instantiated, and branches counted with multiplicity.
  virtual std::int64_t nodes() const = 0;
  virtual std::int64_t branches() const = 0;
  // False if any node saw an element twice or out of stream order.
  virtual bool single_pass_ok() const = 0;
};

class CardinalityTree final : public BranchTree {
 public:
  // Throws kInvalidArgument unless k >= 1 and s >= 1.
  CardinalityTree(int k, int s, Rational v, Pin pin);
  ~CardinalityTree() override;
  void Process(ElementId e, OracleSession& session, StepCache& cache) override;
  BranchResult Result() const override;
  std::size_t Retained() const override;
  void CollectStored(std::vector<ElementId>& out) const override;
  std::int64_t nodes() const override { return nodes_; }
  std::int64_t branches() const override { return nodes_; }
  bool single_pass_ok() const override { return single_pass_ok_; }

 private:
  struct Node;
  std::unique_ptr<Node> NewNode(int k, int s, Rational v, Pin pin);
  void Dispatch(Node& node, ElementId e, OracleSession& session, StepCache& cache);
  std::unique_ptr<Node> root_;
  std::int64_t nodes_ = 0;
  bool single_pass_ok_ = true;
};

struct MatroidTreeOptions {
  // Trees with rank above this are refused unless allow_large_rank is set.
  static constexpr int kMaxDefaultRank = 4;
  bool allow_large_rank = false;
};

class MatroidTree final : public BranchTree {
 public:
  // `rank` is the global K. Throws kDependentInput if pin.set is dependent,
  // kRankTooLarge past the guardrail, kInvalidArgument unless k >= 1.
  MatroidTree(MatroidPtr matroid, int rank, int k, Rational v, Pin pin,
              MatroidTreeOptions options = {});
  ~MatroidTree() override;
  void Process(ElementId e, OracleSession& session, StepCache& cache) override;
  BranchResult Result() const override;
  std::size_t Retained() const override;
  void CollectStored(std::vector<ElementId>& out) const override;
  std::int64_t nodes() const override { return nodes_; }
  std::int64_t branches() const override { return branches_; }
  bool single_pass_ok() const override { return single_pass_ok_; }
  int beta() const { return beta_; }

 private:
  struct Node;
  std::unique_ptr<Node> NewNode(int k, Rational v, Pin pin, std::uint64_t multiplicity);
  void Dispatch(Node& node, ElementId e, OracleSession& session, StepCache& cache);
  MatroidPtr matroid_;
  int rank_;
  Value k4_;  // K^4
  int beta_;
  std::unique_ptr<Node> root_;
  std::int64_t nodes_ = 0;
  std::int64_t branches_ = 0;
  bool single_pass_ok_ = true;
};

// One-shot runs over a stream suffix. Each call advances the session once per
// element and reports the tree's stored set after every step.
BranchResult CardinalityBranch(OracleSession& session, std::span<const ElementId> suffix,
                               int k, int s, const Rational& v, const Pin& pin);
BranchResult MatroidBranch(OracleSession& session, std::span<const ElementId> suffix,
                           MatroidPtr matroid, int rank, int k, const Rational& v,
                           const Pin& pin, MatroidTreeOptions options = {});

}  // namespace substream

#endif  // SUBSTREAM_BRANCH_TREE_HPP_
