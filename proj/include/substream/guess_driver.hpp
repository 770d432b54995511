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

// Runs one branch tree per guessed optimum value v = (1 + eps)^i in one pass.
//
// With m the largest singleton value so far, a guess is live while
// m / (1 + eps)^2 <= v <= K m / eps. Guesses entering the window start at
// the current arrival; guesses falling below it are retired, keeping the best
// solution any retired guess had reached.
#ifndef SUBSTREAM_GUESS_DRIVER_HPP_
#define SUBSTREAM_GUESS_DRIVER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>

#include "substream/branch_tree.hpp"
#include "substream/stream.hpp"

namespace substream {

enum class BranchingKind { kCardinality, kMatroid };

struct GuessOptions {
  BranchingKind kind = BranchingKind::kCardinality;
  Rational epsilon{1, 10};
  // Feasibility constraint. For the cardinality tree it only supplies K and
  // filters loops; for the matroid tree it is the independence oracle.
  MatroidPtr constraint;
  MatroidTreeOptions tree_options;
};

class GuessDriver final : public StreamingAlgorithm {
 public:
  // Throws kInvalidArgument unless 0 < eps <= 1 and a constraint of rank >= 1
  // is given; the matroid kind applies the rank guardrail up front.
  explicit GuessDriver(GuessOptions options);
  ~GuessDriver() override;

  std::string name() const override;
  void Process(ElementId e, OracleSession& session) override;
  ElementSet Solution() const override;
  ElementSet Stored() const override;
  std::size_t Retained() const override;
  void FillReport(AlgReport& report) const override;

  int rank() const { return rank_; }
  std::size_t active_guesses() const { return roots_.size(); }
  std::size_t max_active_guesses() const { return max_active_; }
  std::int64_t guesses_spawned() const { return spawned_; }
  bool single_pass_ok() const;

 private:
  struct Root {
    Rational v;
    std::unique_ptr<BranchTree> tree;
  };
  struct Candidate {
    BranchResult result;
    Rational v;
  };

  std::unique_ptr<BranchTree> MakeTree(const Rational& v) const;
  std::optional<Candidate> Best() const;

  GuessOptions options_;
  int rank_;
  GeometricGrid grid_;
  StepCache cache_;
  std::optional<Pin> root_pin_;
  Value m_{0};
  std::optional<int> next_index_;
  std::map<int, Root> roots_;
  std::optional<Candidate> retired_best_;
  std::int64_t retired_branches_ = 0;
  bool retired_single_pass_ok_ = true;
  std::size_t max_active_ = 0;
  std::int64_t spawned_ = 0;
};

// Builds a driver and runs it over `order`.
AlgReport RunGuessDriver(OracleSession& session, std::span<const ElementId> order,
                         const GuessOptions& options);

}  // namespace substream

#endif  // SUBSTREAM_GUESS_DRIVER_HPP_
