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

#include "reference.hpp"

#include <bit>
#include <map>
#include <memory>
#include <optional>

namespace substream::testing {

namespace {

Value GainOf(const ValueOracle& f, const ElementSet& pinned, ElementId e) {
  return f.Evaluate(pinned.With(e)) - f.Evaluate(pinned);
}

}  // namespace

RefResult RefCardinality(const ValueOracle& f, const ElementSet& pinned,
                         std::span<const ElementId> suffix, int k, int s,
                         const Rational& v) {
  if (k == 1 || s == 1) {
    std::optional<RefResult> best;
    for (ElementId e : suffix) {
      Value g = GainOf(f, pinned, e);
      if (!best || g > best->gain) best = RefResult{ElementSet{e}, g};
    }
    return best.value_or(RefResult{ElementSet(), Value(0)});
  }
  RefResult first{ElementSet(), Value(0)};
  for (std::size_t j = 0; j < suffix.size(); ++j) {
    const Value g = GainOf(f, pinned, suffix[j]);
    if (Rational(g) * (k + s - 1) >= v) {
      RefResult rest = RefCardinality(f, pinned.With(suffix[j]), suffix.subspan(j + 1), k,
                                      s - 1, v - Rational(g));
      first = {rest.solution.With(suffix[j]), g + rest.gain};
      break;
    }
  }
  RefResult second =
      RefCardinality(f, pinned, suffix, k - 1, s, v * (k + s - 2) / (k + s - 1));
  return first.gain > second.gain ? first : second;
}

RefResult RefMatroid(const ValueOracle& f, const Matroid& matroid, int rank,
                     const ElementSet& pinned, std::span<const ElementId> suffix, int k,
                     const Rational& v) {
  const Value k4 = Value(rank) * rank * rank * rank;
  const int beta = static_cast<int>(k4 / 2);
  // Branch (b, j) results keyed by stream position; equal e give equal runs.
  std::map<std::size_t, RefResult> branches;
  if (k > 1) {
    for (int b = 0; b <= beta; ++b) {
      ElementSet t;
      for (std::size_t j = 0; j < suffix.size(); ++j) {
        if (static_cast<int>(t.Union(pinned).size()) >= rank) break;
        const ElementId e = suffix[j];
        if (!matroid.IsIndependent(t.Union(pinned).With(e))) continue;
        const Value g = GainOf(f, pinned, e);
        if (Rational(g) * Rational(k4) < Rational(b) * v) continue;
        t.Insert(e);
        if (branches.count(j)) continue;
        const Rational child_v = v * Rational(k4 - 1, k4) - 2 * Rational(g);
        RefResult rest = RefMatroid(f, matroid, rank, pinned.With(e), suffix.subspan(j + 1),
                                    k - 1, child_v);
        branches[j] = {rest.solution.With(e), g + rest.gain};
      }
    }
  }
  std::optional<RefResult> best;
  for (auto& [pos, result] : branches) {
    if (!best || result.gain > best->gain) best = result;
  }
  std::optional<RefResult> zero;
  for (ElementId e : suffix) {
    if (!matroid.IsIndependent(pinned.With(e))) continue;
    Value g = GainOf(f, pinned, e);
    if (!zero || g > zero->gain) zero = RefResult{ElementSet{e}, g};
  }
  if (zero && (!best || zero->gain > best->gain)) best = zero;
  return best.value_or(RefResult{ElementSet(), Value(0)});
}

bool PairwiseMonotoneSubmodular(const ValueOracle& f) {
  const int n = f.ground_size();
  const std::uint32_t full = 1u << n;
  std::vector<Value> value(full);
  for (std::uint32_t m = 0; m < full; ++m) value[m] = f.Evaluate(ElementSet::FromMask(m));
  for (std::uint32_t t = 0; t < full; ++t) {
    // Every submask s of t.
    for (std::uint32_t s = t;; s = (s - 1) & t) {
      if (value[s] > value[t]) return false;
      for (int e = 0; e < n; ++e) {
        const std::uint32_t bit = 1u << e;
        if (t & bit) continue;
        if (value[s | bit] - value[s] < value[t | bit] - value[t]) return false;
      }
      if (s == 0) break;
    }
  }
  return true;
}

OraclePtr RandomCoverage(int n, int universe, Rng& rng) {
  std::vector<std::vector<int>> covers(n);
  for (int i = 0; i < n; ++i) {
    for (int item = 0; item < universe; ++item) {
      if (rng.Bernoulli(1, 3)) covers[i].push_back(item);
    }
  }
  std::vector<Value> weights(universe);
  for (auto& w : weights) w = rng.UniformInt(1, 9);
  return std::make_shared<CoverageOracle>(std::move(covers), std::move(weights));
}

OraclePtr RandomMonotoneTable(int n, Rng& rng) {
  const std::uint32_t full = 1u << n;
  auto table = std::make_shared<std::vector<Value>>(full);
  // Build in popcount order so each set dominates its subsets.
  std::vector<std::uint32_t> order(full);
  for (std::uint32_t m = 0; m < full; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t m : order) {
    Value floor = 0;
    for (int e = 0; e < n; ++e) {
      if (m & (1u << e)) floor = std::max(floor, (*table)[m & ~(1u << e)]);
    }
    (*table)[m] = floor + rng.UniformInt(0, 4);
  }
  return std::make_shared<FunctionOracle>(
      n, [table](const ElementSet& s) { return (*table)[s.ToMask()]; });
}

std::vector<ElementSet> SubsetsUpTo(int n, int k) {
  std::vector<ElementSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) <= k) out.push_back(ElementSet::FromMask(m));
  }
  return out;
}

}  // namespace substream::testing
