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

#include "substream/branch_tree.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "substream/error.hpp"

namespace substream {

namespace {

constexpr std::int64_t kNotStarted = std::numeric_limits<std::int64_t>::min();

// g(e) = f(P + e) - f(P), or nullopt if the policy refused the query.
std::optional<Value> Gain(const Pin& pin, ElementId e, OracleSession& session,
                          StepCache& cache) {
  std::optional<Value> with = cache.Get(session, pin.set.With(e));
  if (!with) return std::nullopt;
  return *with - pin.value;
}

// Marks the node as having seen the current step; false on a repeat.
bool Advance(std::int64_t& last_step, std::int64_t step) {
  const bool ok = step > last_step;
  last_step = step;
  return ok;
}

}  // namespace

Pin RootPin(OracleSession& session, StepCache& cache) {
  std::optional<Value> empty = cache.Get(session, ElementSet());
  return Pin{ElementSet(), empty.value_or(Value(0))};
}

// ---------------------------------------------------------------------------
// Cardinality

struct CardinalityTree::Node {
  int k = 1;
  int s = 1;
  Rational v;
  Pin pin;
  bool leaf = true;
  std::int64_t last_step = kNotStarted;
  // Leaf state.
  std::optional<ElementId> best;
  Value best_gain;
  // Branch 1: the accepted element and the recursion after it.
  std::optional<ElementId> accepted;
  Value accepted_gain;
  std::unique_ptr<Node> branch1;
  // Branch 2 runs alongside from the start.
  std::unique_ptr<Node> branch2;
};

CardinalityTree::CardinalityTree(int k, int s, Rational v, Pin pin) {
  if (k < 1 || s < 1) throw Error(ErrorCode::kInvalidArgument, "need k >= 1 and s >= 1");
  root_ = NewNode(k, s, std::move(v), std::move(pin));
}

CardinalityTree::~CardinalityTree() = default;

std::unique_ptr<CardinalityTree::Node> CardinalityTree::NewNode(int k, int s, Rational v,
                                                                Pin pin) {
  ++nodes_;
  auto node = std::make_unique<Node>();
  node->k = k;
  node->s = s;
  node->leaf = k == 1 || s == 1;
  if (!node->leaf) {
    node->branch2 = NewNode(k - 1, s, v * (k + s - 2) / (k + s - 1), pin);
  }
  node->v = std::move(v);
  node->pin = std::move(pin);
  return node;
}

void CardinalityTree::Process(ElementId e, OracleSession& session, StepCache& cache) {
  Dispatch(*root_, e, session, cache);
}

void CardinalityTree::Dispatch(Node& node, ElementId e, OracleSession& session,
                               StepCache& cache) {
  if (!Advance(node.last_step, session.step())) single_pass_ok_ = false;
  if (node.leaf) {
    std::optional<Value> g = Gain(node.pin, e, session, cache);
    if (g && (!node.best || *g > node.best_gain)) {
      node.best = e;
      node.best_gain = *g;
    }
    return;
  }
  Dispatch(*node.branch2, e, session, cache);
  if (node.branch1) {
    Dispatch(*node.branch1, e, session, cache);
    return;
  }
  std::optional<Value> g = Gain(node.pin, e, session, cache);
  if (!g || Rational(*g) * (node.k + node.s - 1) < node.v) return;
  node.accepted = e;
  node.accepted_gain = *g;
  node.branch1 = NewNode(node.k, node.s - 1, node.v - *g,
                         Pin{node.pin.set.With(e), node.pin.value + *g});
  // The child and its branch-2 chain start with the element after e.
  std::vector<Node*> stack{node.branch1.get()};
  while (!stack.empty()) {
    Node* n = stack.back();
    stack.pop_back();
    n->last_step = session.step();
    if (n->branch2) stack.push_back(n->branch2.get());
  }
}

namespace {

template <typename NodeT>
BranchResult CardResult(const NodeT& node) {
  if (node.leaf) {
    if (!node.best) return {ElementSet(), Value(0)};
    return {ElementSet{*node.best}, node.best_gain};
  }
  BranchResult second = CardResult(*node.branch2);
  BranchResult first{ElementSet(), Value(0)};
  if (node.accepted) {
    BranchResult rest = CardResult(*node.branch1);
    first = {rest.solution.With(*node.accepted), node.accepted_gain + rest.gain};
  }
  return first.gain > second.gain ? first : second;
}

template <typename NodeT>
std::size_t CardRetained(const NodeT& node) {
  std::size_t total = node.pin.set.size();
  if (node.leaf) return total + (node.best ? 1 : 0);
  total += CardRetained(*node.branch2);
  if (node.branch1) total += CardRetained(*node.branch1);
  return total;
}

template <typename NodeT>
void CardStored(const NodeT& node, std::vector<ElementId>& out) {
  out.insert(out.end(), node.pin.set.begin(), node.pin.set.end());
  if (node.leaf) {
    if (node.best) out.push_back(*node.best);
    return;
  }
  CardStored(*node.branch2, out);
  if (node.branch1) CardStored(*node.branch1, out);
}

}  // namespace

BranchResult CardinalityTree::Result() const { return CardResult(*root_); }

std::size_t CardinalityTree::Retained() const { return CardRetained(*root_); }

void CardinalityTree::CollectStored(std::vector<ElementId>& out) const {
  CardStored(*root_, out);
}

// ---------------------------------------------------------------------------
// Matroid

struct MatroidTree::Node {
  int k = 1;
  Rational v;
  Pin pin;
  std::uint64_t multiplicity = 1;
  std::int64_t last_step = kNotStarted;
  // Branch 0.
  std::optional<ElementId> best;
  Value best_gain;
  // T_b for every threshold index b, as indices into a pool of distinct sets.
  std::vector<ElementSet> t_pool;
  std::vector<int> t_of_b;
  struct Child {
    ElementId e;
    Value gain;
    std::uint64_t count;  // number of b whose T_b took e
    std::unique_ptr<Node> node;
  };
  std::vector<Child> children;
};

MatroidTree::MatroidTree(MatroidPtr matroid, int rank, int k, Rational v, Pin pin,
                         MatroidTreeOptions options)
    : matroid_(std::move(matroid)), rank_(rank) {
  if (!matroid_) throw Error(ErrorCode::kInvalidArgument, "null matroid");
  if (k < 1 || rank < 1) throw Error(ErrorCode::kInvalidArgument, "need k >= 1 and K >= 1");
  if (rank > MatroidTreeOptions::kMaxDefaultRank && !options.allow_large_rank) {
    throw Error(ErrorCode::kRankTooLarge,
                "matroid branching refuses K = " + std::to_string(rank) +
                    " without an explicit override");
  }
  if (!matroid_->IsIndependent(pin.set)) {
    throw Error(ErrorCode::kDependentInput, pin.set.ToString() + " is not independent");
  }
  k4_ = Value(rank) * rank * rank * rank;
  beta_ = static_cast<int>(k4_ / 2);
  root_ = NewNode(k, std::move(v), std::move(pin), 1);
}

MatroidTree::~MatroidTree() = default;

std::unique_ptr<MatroidTree::Node> MatroidTree::NewNode(int k, Rational v, Pin pin,
                                                        std::uint64_t multiplicity) {
  ++nodes_;
  branches_ += static_cast<std::int64_t>(multiplicity);
  auto node = std::make_unique<Node>();
  node->k = k;
  node->v = std::move(v);
  node->pin = std::move(pin);
  node->multiplicity = multiplicity;
  if (k > 1) {
    node->t_pool.emplace_back();
    node->t_of_b.assign(beta_ + 1, 0);
  }
  return node;
}

void MatroidTree::Process(ElementId e, OracleSession& session, StepCache& cache) {
  Dispatch(*root_, e, session, cache);
}

void MatroidTree::Dispatch(Node& node, ElementId e, OracleSession& session,
                           StepCache& cache) {
  if (!Advance(node.last_step, session.step())) single_pass_ok_ = false;
  for (auto& child : node.children) Dispatch(*child.node, e, session, cache);

  const ElementSet with_e = node.pin.set.With(e);
  if (with_e.size() == node.pin.set.size() || !matroid_->IsIndependent(with_e)) return;
  std::optional<Value> g = Gain(node.pin, e, session, cache);
  if (!g) return;
  if (!node.best || *g > node.best_gain) {
    node.best = e;
    node.best_gain = *g;
  }
  if (node.k == 1) return;

  // g(e) >= b v / K^4 holds for every b up to b_hi.
  int b_hi = beta_;
  if (node.v > 0) {
    const Value limit = Floor(Rational(*g * k4_) / node.v);
    if (limit < b_hi) b_hi = static_cast<int>(limit);
  }
  if (b_hi < 0) return;

  // Each distinct T is tested once; T -> T + e is shared across b.
  const std::size_t pool_before = node.t_pool.size();
  std::vector<int> grown(pool_before, -2);  // -2 untested, -1 rejected
  std::uint64_t count = 0;
  for (int b = 0; b <= b_hi; ++b) {
    const int id = node.t_of_b[b];
    if (grown[id] == -2) {
      const ElementSet& t = node.t_pool[id];
      const ElementSet joined = t.Union(node.pin.set);
      if (static_cast<int>(joined.size()) < rank_ && !t.Contains(e) &&
          matroid_->IsIndependent(joined.With(e))) {
        grown[id] = static_cast<int>(node.t_pool.size());
        node.t_pool.push_back(t.With(e));
      } else {
        grown[id] = -1;
      }
    }
    if (grown[id] >= 0) {
      node.t_of_b[b] = grown[id];
      ++count;
    }
  }
  if (count == 0) return;
  const Rational child_v =
      node.v * Rational(k4_ - 1, k4_) - 2 * Rational(*g);
  Node::Child child{e, *g, count,
                    NewNode(node.k - 1, child_v, Pin{with_e, node.pin.value + *g},
                            node.multiplicity * count)};
  child.node->last_step = session.step();
  node.children.push_back(std::move(child));
}

namespace {

template <typename NodeT>
BranchResult MatResult(const NodeT& node) {
  std::optional<BranchResult> best;
  for (const auto& child : node.children) {
    BranchResult rest = MatResult(*child.node);
    BranchResult candidate{rest.solution.With(child.e), child.gain + rest.gain};
    if (!best || candidate.gain > best->gain) best = std::move(candidate);
  }
  if (node.best) {
    BranchResult zero{ElementSet{*node.best}, node.best_gain};
    if (!best || zero.gain > best->gain) best = std::move(zero);
  }
  if (!best) return {ElementSet(), Value(0)};
  return *best;
}

template <typename NodeT>
std::size_t MatRetained(const NodeT& node) {
  std::size_t own = node.pin.set.size() + (node.best ? 1 : 0);
  for (int id : node.t_of_b) own += node.t_pool[id].size();
  std::size_t total = own * node.multiplicity;
  for (const auto& child : node.children) total += MatRetained(*child.node);
  return total;
}

template <typename NodeT>
void MatStored(const NodeT& node, std::vector<ElementId>& out) {
  out.insert(out.end(), node.pin.set.begin(), node.pin.set.end());
  if (node.best) out.push_back(*node.best);
  for (const auto& child : node.children) {
    out.push_back(child.e);
    MatStored(*child.node, out);
  }
}

}  // namespace

BranchResult MatroidTree::Result() const { return MatResult(*root_); }

std::size_t MatroidTree::Retained() const { return MatRetained(*root_); }

void MatroidTree::CollectStored(std::vector<ElementId>& out) const {
  MatStored(*root_, out);
}

// ---------------------------------------------------------------------------
// One-shot runs

namespace {

BranchResult RunTree(BranchTree& tree, OracleSession& session, StepCache& cache,
                     std::span<const ElementId> suffix) {
  std::vector<ElementId> stored;
  for (ElementId e : suffix) {
    session.BeginArrival(e);
    tree.Process(e, session, cache);
    stored.clear();
    tree.CollectStored(stored);
    session.ReportStored(ElementSet(stored), tree.Retained());
  }
  return tree.Result();
}

}  // namespace

BranchResult CardinalityBranch(OracleSession& session, std::span<const ElementId> suffix,
                               int k, int s, const Rational& v, const Pin& pin) {
  StepCache cache;
  CardinalityTree tree(k, s, v, pin);
  return RunTree(tree, session, cache, suffix);
}

BranchResult MatroidBranch(OracleSession& session, std::span<const ElementId> suffix,
                           MatroidPtr matroid, int rank, int k, const Rational& v,
                           const Pin& pin, MatroidTreeOptions options) {
  StepCache cache;
  MatroidTree tree(std::move(matroid), rank, k, v, pin, options);
  return RunTree(tree, session, cache, suffix);
}

}  // namespace substream
