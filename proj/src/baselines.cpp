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

#include "substream/baselines.hpp"

#include <algorithm>
#include <functional>

#include "substream/error.hpp"

namespace substream {

Solution BruteForceOptimum(const ValueOracle& f, const Matroid& constraint,
                           BruteForceOptions options) {
  const int n = constraint.ground_size();
  const int limit = constraint.kind() == MatroidKind::kUniform ? options.max_uniform_n
                                                               : options.max_general_n;
  if (n > limit) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "brute force needs n <= " + std::to_string(limit) + ", got " +
                    std::to_string(n));
  }
  Solution best{ElementSet(), f.Evaluate(ElementSet())};
  std::vector<ElementId> current;
  // Depth-first over independent sets; every visited set is independent.
  std::function<void(int)> visit = [&](int next) {
    for (int e = next; e < n; ++e) {
      current.push_back(e);
      ElementSet set(current);
      if (constraint.IsIndependent(set)) {
        Value value = f.Evaluate(set);
        if (value > best.value) best = {set, std::move(value)};
        visit(e + 1);
      }
      current.pop_back();
    }
  };
  visit(0);
  return best;
}

namespace {

// Shared greedy loop; `value_of` returns nullopt for refused queries.
Solution Greedy(const Matroid& constraint, std::span<const ElementId> pool,
                const std::function<std::optional<Value>(const ElementSet&)>& value_of) {
  std::vector<ElementId> candidates(pool.begin(), pool.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  Solution current{ElementSet(), value_of(ElementSet()).value_or(Value(0))};
  while (true) {
    std::optional<ElementId> pick;
    Value pick_value;
    for (ElementId e : candidates) {
      if (current.set.Contains(e)) continue;
      ElementSet next = current.set.With(e);
      if (!constraint.IsIndependent(next)) continue;
      std::optional<Value> value = value_of(next);
      if (!value) continue;
      if (!pick || *value > pick_value) {
        pick = e;
        pick_value = *value;
      }
    }
    if (!pick || pick_value <= current.value) return current;
    current = {current.set.With(*pick), pick_value};
  }
}

}  // namespace

Solution OfflineGreedy(const ValueOracle& f, const Matroid& constraint) {
  std::vector<ElementId> all(constraint.ground_size());
  for (int i = 0; i < constraint.ground_size(); ++i) all[i] = i;
  return Greedy(constraint, all, [&](const ElementSet& s) { return f.Evaluate(s); });
}

Solution GreedyOverPool(OracleSession& session, const Matroid& constraint,
                        std::span<const ElementId> pool) {
  return Greedy(constraint, pool, [&](const ElementSet& s) { return session.Query(s); });
}

// ---------------------------------------------------------------------------

SieveStreaming::SieveStreaming(MatroidPtr constraint, SieveOptions options)
    : constraint_(std::move(constraint)),
      options_(std::move(options)),
      rank_(constraint_ ? constraint_->rank() : 0),
      grid_(1 + options_.epsilon) {
  if (!constraint_) throw Error(ErrorCode::kInvalidArgument, "sieve needs a constraint");
  if (options_.epsilon <= 0 || options_.epsilon > 1) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
}

void SieveStreaming::Process(ElementId e, OracleSession& session) {
  if (!empty_value_) empty_value_ = session.Query(ElementSet()).value_or(Value(0));
  if (rank_ < 1) return;
  if (constraint_->IsIndependent(ElementSet{e})) {
    std::optional<Value> single = session.Query(ElementSet{e});
    if (single && *single - *empty_value_ > m_) m_ = *single - *empty_value_;
  }
  if (m_ <= 0) return;

  const int lo = grid_.SmallestIndexAtLeast(Rational(m_));
  int hi = grid_.LargestIndexAtMost(Rational(m_) * 2 * rank_);
  if (options_.budget) {
    const int cap = static_cast<int>(std::max<std::size_t>(1, *options_.budget / rank_));
    hi = std::min(hi, lo + cap - 1);
  }
  while (!buckets_.empty() && buckets_.begin()->first < lo) buckets_.erase(buckets_.begin());
  while (!buckets_.empty() && buckets_.rbegin()->first > hi) {
    buckets_.erase(std::prev(buckets_.end()));
  }
  for (int i = lo; i <= hi; ++i) buckets_.try_emplace(i, Bucket{ElementSet(), Value(0)});

  for (auto& [index, bucket] : buckets_) {
    const int size = static_cast<int>(bucket.set.size());
    if (size >= rank_ || bucket.set.Contains(e)) continue;
    ElementSet next = bucket.set.With(e);
    if (!constraint_->IsIndependent(next)) continue;
    std::optional<Value> value = session.Query(next);
    if (!value) continue;
    const Value gain = *value - *empty_value_;
    const Value marginal = gain - bucket.gain;
    // marginal >= (v/2 - f(S)) / (K - |S|), compared exactly.
    const Rational need = (grid_.Power(index) / 2 - Rational(bucket.gain)) / (rank_ - size);
    if (Rational(marginal) >= need) bucket = {std::move(next), gain};
  }
}

ElementSet SieveStreaming::Solution() const {
  const Bucket* best = nullptr;
  for (const auto& [index, bucket] : buckets_) {
    if (!best || bucket.gain > best->gain) best = &bucket;
  }
  return best ? best->set : ElementSet();
}

ElementSet SieveStreaming::Stored() const {
  std::vector<ElementId> ids;
  for (const auto& [index, bucket] : buckets_) {
    ids.insert(ids.end(), bucket.set.begin(), bucket.set.end());
  }
  return ElementSet(std::move(ids));
}

std::size_t SieveStreaming::Retained() const {
  std::size_t total = 0;
  for (const auto& [index, bucket] : buckets_) total += bucket.set.size();
  return total;
}

// ---------------------------------------------------------------------------

StoreAllAlgorithm::StoreAllAlgorithm(MatroidPtr constraint)
    : constraint_(std::move(constraint)) {
  if (!constraint_) throw Error(ErrorCode::kInvalidArgument, "store-all needs a constraint");
}

void StoreAllAlgorithm::Process(ElementId e, OracleSession& /*session*/) {
  arrivals_.push_back(e);
  stored_.Insert(e);
}

void StoreAllAlgorithm::Finish(OracleSession& session) {
  solution_ = GreedyOverPool(session, *constraint_, arrivals_).set;
}

}  // namespace substream
