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

#include "substream/oracle.hpp"

#include <vector>

#include "substream/error.hpp"

namespace substream {

ResidualOracle::ResidualOracle(OraclePtr base, ElementSet pinned)
    : base_(std::move(base)), pinned_(std::move(pinned)) {
  if (!base_) throw Error(ErrorCode::kInvalidArgument, "null base oracle");
  pinned_value_ = base_->Evaluate(pinned_);
}

Value ResidualOracle::Evaluate(const ElementSet& set) const {
  return base_->Evaluate(set.Union(pinned_)) - pinned_value_;
}

Value Marginal(const ValueOracle& f, const ElementSet& t, const ElementSet& s) {
  if (t.IsSubsetOf(s)) return 0;
  return f.Evaluate(t.Union(s)) - f.Evaluate(s);
}

OraclePtr Restrict(const OraclePtr& f, const ElementSet& s) {
  if (!f) throw Error(ErrorCode::kInvalidArgument, "null oracle");
  if (s.empty()) return f;
  if (const auto* residual = dynamic_cast<const ResidualOracle*>(f.get())) {
    return std::make_shared<ResidualOracle>(residual->base(),
                                            residual->pinned().Union(s));
  }
  return std::make_shared<ResidualOracle>(f, s);
}

AdditiveOracle::AdditiveOracle(std::vector<Value> weights)
    : weights_(std::move(weights)) {
  for (const Value& w : weights_) {
    if (w < 0) throw Error(ErrorCode::kInvalidArgument, "negative weight");
  }
}

Value AdditiveOracle::Evaluate(const ElementSet& set) const {
  Value total = 0;
  for (ElementId e : set) total += weights_.at(e);
  return total;
}

CoverageOracle::CoverageOracle(std::vector<std::vector<int>> covers,
                               std::vector<Value> item_weights)
    : covers_(std::move(covers)), item_weights_(std::move(item_weights)) {
  for (const auto& items : covers_) {
    for (int item : items) {
      if (item < 0 || item >= static_cast<int>(item_weights_.size())) {
        throw Error(ErrorCode::kInvalidArgument, "cover item out of range");
      }
    }
  }
  for (const Value& w : item_weights_) {
    if (w < 0) throw Error(ErrorCode::kInvalidArgument, "negative item weight");
  }
}

Value CoverageOracle::Evaluate(const ElementSet& set) const {
  std::vector<bool> covered(item_weights_.size(), false);
  Value total = 0;
  for (ElementId e : set) {
    for (int item : covers_.at(e)) {
      if (!covered[item]) {
        covered[item] = true;
        total += item_weights_[item];
      }
    }
  }
  return total;
}

}  // namespace substream
