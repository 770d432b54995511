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

#include "substream/guess_driver.hpp"

#include <algorithm>
#include <vector>

#include "substream/error.hpp"

namespace substream {

namespace {

Rational ValidatedBase(const GuessOptions& options) {
  if (options.epsilon <= 0 || options.epsilon > 1) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
  return 1 + options.epsilon;
}

int ValidatedRank(const GuessOptions& options) {
  if (!options.constraint || options.constraint->rank() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "the driver needs a constraint of rank >= 1");
  }
  const int rank = options.constraint->rank();
  if (options.kind == BranchingKind::kMatroid &&
      rank > MatroidTreeOptions::kMaxDefaultRank && !options.tree_options.allow_large_rank) {
    throw Error(ErrorCode::kRankTooLarge,
                "matroid branching refuses K = " + std::to_string(rank) +
                    " without an explicit override");
  }
  return rank;
}

}  // namespace

GuessDriver::GuessDriver(GuessOptions options)
    : options_(std::move(options)),
      rank_(ValidatedRank(options_)),
      grid_(ValidatedBase(options_)) {}

GuessDriver::~GuessDriver() = default;

std::string GuessDriver::name() const {
  return options_.kind == BranchingKind::kCardinality ? "branching-cardinality"
                                                      : "branching-matroid";
}

std::unique_ptr<BranchTree> GuessDriver::MakeTree(const Rational& v) const {
  if (options_.kind == BranchingKind::kCardinality) {
    return std::make_unique<CardinalityTree>(rank_, rank_, v, *root_pin_);
  }
  return std::make_unique<MatroidTree>(options_.constraint, rank_, rank_, v, *root_pin_,
                                       options_.tree_options);
}

void GuessDriver::Process(ElementId e, OracleSession& session) {
  if (!root_pin_) root_pin_ = RootPin(session, cache_);

  // Loops never enter a feasible solution, so they cannot raise m.
  if (options_.constraint->IsIndependent(ElementSet{e})) {
    std::optional<Value> single = cache_.Get(session, ElementSet{e});
    if (single && *single - root_pin_->value > m_) m_ = *single - root_pin_->value;
  }

  if (m_ > 0) {
    const Rational eps = options_.epsilon;
    const int lo = grid_.SmallestIndexAtLeast(Rational(m_) / (grid_.base() * grid_.base()));
    const int hi = grid_.LargestIndexAtMost(Rational(m_) * rank_ / eps);
    while (!roots_.empty() && roots_.begin()->first < lo) {
      Root& root = roots_.begin()->second;
      BranchResult result = root.tree->Result();
      if (!retired_best_ || result.gain > retired_best_->result.gain) {
        retired_best_ = Candidate{std::move(result), root.v};
      }
      retired_branches_ += root.tree->branches();
      retired_single_pass_ok_ = retired_single_pass_ok_ && root.tree->single_pass_ok();
      roots_.erase(roots_.begin());
    }
    for (int i = std::max(lo, next_index_.value_or(lo)); i <= hi; ++i) {
      const Rational& v = grid_.Power(i);
      roots_.emplace(i, Root{v, MakeTree(v)});
      ++spawned_;
    }
    next_index_ = std::max(next_index_.value_or(lo), hi + 1);
    max_active_ = std::max(max_active_, roots_.size());
  }

  for (auto& [index, root] : roots_) root.tree->Process(e, session, cache_);
}

std::optional<GuessDriver::Candidate> GuessDriver::Best() const {
  std::optional<Candidate> best = retired_best_;
  for (const auto& [index, root] : roots_) {
    BranchResult result = root.tree->Result();
    if (!best || result.gain > best->result.gain) best = Candidate{std::move(result), root.v};
  }
  return best;
}

ElementSet GuessDriver::Solution() const {
  std::optional<Candidate> best = Best();
  return best ? best->result.solution : ElementSet();
}

ElementSet GuessDriver::Stored() const {
  std::vector<ElementId> ids;
  for (const auto& [index, root] : roots_) root.tree->CollectStored(ids);
  if (retired_best_) {
    ids.insert(ids.end(), retired_best_->result.solution.begin(),
               retired_best_->result.solution.end());
  }
  return ElementSet(std::move(ids));
}

std::size_t GuessDriver::Retained() const {
  std::size_t total = retired_best_ ? retired_best_->result.solution.size() : 0;
  for (const auto& [index, root] : roots_) total += root.tree->Retained();
  return total;
}

bool GuessDriver::single_pass_ok() const {
  bool ok = retired_single_pass_ok_;
  for (const auto& [index, root] : roots_) ok = ok && root.tree->single_pass_ok();
  return ok;
}

void GuessDriver::FillReport(AlgReport& report) const {
  report.branches_spawned = retired_branches_;
  for (const auto& [index, root] : roots_) report.branches_spawned += root.tree->branches();
  if (std::optional<Candidate> best = Best()) report.v_used = best->v;
}

AlgReport RunGuessDriver(OracleSession& session, std::span<const ElementId> order,
                         const GuessOptions& options) {
  GuessDriver driver(options);
  return RunStreaming(driver, session, order, options.constraint.get());
}

}  // namespace substream
