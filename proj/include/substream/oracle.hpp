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

// Set-function oracles with exact integer values.
//
// A ValueOracle is a deterministic total map from subsets of {0, ..., n-1} to
// non-negative integers. Algorithms never hold a ValueOracle directly; they go
// through an OracleSession (access.hpp), which enforces an access policy and
// keeps the audit. The oracles here are the "truth" side of that boundary.

#ifndef SUBSTREAM_ORACLE_HPP_
#define SUBSTREAM_ORACLE_HPP_

#include <functional>
#include <memory>
#include <vector>

#include "substream/element_set.hpp"
#include "substream/numeric.hpp"

namespace substream {

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual int ground_size() const = 0;
  virtual Value Evaluate(const ElementSet& set) const = 0;
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// g(T) = f(T u S) - f(S) for a pinned set S. f(S) is computed once at
// construction.
class ResidualOracle final : public ValueOracle {
 public:
  ResidualOracle(OraclePtr base, ElementSet pinned);

  int ground_size() const override { return base_->ground_size(); }
  Value Evaluate(const ElementSet& set) const override;

  const OraclePtr& base() const { return base_; }
  const ElementSet& pinned() const { return pinned_; }
  const Value& pinned_value() const { return pinned_value_; }

 private:
  OraclePtr base_;
  ElementSet pinned_;
  Value pinned_value_;
};

// f(T | S) = f(T u S) - f(S).
Value Marginal(const ValueOracle& f, const ElementSet& t, const ElementSet& s);

// Residual of `f` with `s` pinned. Restricting a residual flattens onto the
// original base with the union pinned, so restrict(restrict(f, A), B) and
// restrict(f, A u B) are the same object shape and agree everywhere.
OraclePtr Restrict(const OraclePtr& f, const ElementSet& s);

// f(S) = sum of per-element weights.
class AdditiveOracle final : public ValueOracle {
 public:
  explicit AdditiveOracle(std::vector<Value> weights);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  Value Evaluate(const ElementSet& set) const override;

 private:
  std::vector<Value> weights_;
};

// Weighted coverage: element i covers a subset of a weighted universe, and
// f(S) is the total weight of items covered by S.
class CoverageOracle final : public ValueOracle {
 public:
  CoverageOracle(std::vector<std::vector<int>> covers,
                 std::vector<Value> item_weights);

  int ground_size() const override { return static_cast<int>(covers_.size()); }
  Value Evaluate(const ElementSet& set) const override;

  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<Value>& item_weights() const { return item_weights_; }

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<Value> item_weights_;
};

// Wraps an arbitrary callable; used for ad-hoc functions in tests and tools.
class FunctionOracle final : public ValueOracle {
 public:
  using Fn = std::function<Value(const ElementSet&)>;

  FunctionOracle(int n, Fn fn) : n_(n), fn_(std::move(fn)) {}

  int ground_size() const override { return n_; }
  Value Evaluate(const ElementSet& set) const override { return fn_(set); }

 private:
  int n_;
  Fn fn_;
};

}  // namespace substream

#endif  // SUBSTREAM_ORACLE_HPP_
