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

// Matroids represented only through their independence oracle.

#ifndef SUBSTREAM_MATROID_HPP_
#define SUBSTREAM_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "substream/element_set.hpp"

namespace substream {

enum class MatroidKind { kUniform, kPartition, kExplicit };

class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual MatroidKind kind() const = 0;
  virtual int ground_size() const = 0;
  // Size of every maximal independent set.
  virtual int rank() const = 0;
  virtual bool IsIndependent(const ElementSet& set) const = 0;

  // Whether I + e is independent. Throws kNotIndependentInput if I is not.
  bool CanExtend(const ElementSet& independent, ElementId e) const;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Independent iff |S| <= K. This is the cardinality constraint.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int rank);

  MatroidKind kind() const override { return MatroidKind::kUniform; }
  int ground_size() const override { return n_; }
  int rank() const override { return rank_; }
  bool IsIndependent(const ElementSet& set) const override;

 private:
  int n_;
  int rank_;
};

// Ground set split into classes; S is independent iff it takes at most
// capacity[c] elements from each class c.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> capacities);

  // Every class gets capacity one.
  static PartitionMatroid UnitCapacity(std::vector<int> class_of);

  MatroidKind kind() const override { return MatroidKind::kPartition; }
  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  int rank() const override { return rank_; }
  bool IsIndependent(const ElementSet& set) const override;

  int class_of(ElementId e) const { return class_of_[e]; }
  int num_classes() const { return static_cast<int>(capacities_.size()); }
  const std::vector<int>& class_assignment() const { return class_of_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  std::vector<int> class_of_;
  std::vector<int> capacities_;
  int rank_ = 0;
};

// A tiny matroid listed as an explicit family of independent sets (n <= 12).
// The family is taken as given; check it with CheckMatroidAxioms.
class ExplicitMatroid final : public Matroid {
 public:
  static constexpr int kMaxGroundSize = 12;

  ExplicitMatroid(int n, const std::vector<ElementSet>& independent_sets);

  // Downward closure of the given bases.
  static ExplicitMatroid FromBases(int n, const std::vector<ElementSet>& bases);
  // Tabulates any matroid on at most kMaxGroundSize elements.
  static ExplicitMatroid Enumerate(const Matroid& m);

  MatroidKind kind() const override { return MatroidKind::kExplicit; }
  int ground_size() const override { return n_; }
  int rank() const override { return rank_; }
  bool IsIndependent(const ElementSet& set) const override;

  // Independent sets in increasing mask order.
  std::vector<ElementSet> IndependentSets() const;

 private:
  int n_;
  int rank_ = 0;
  std::unordered_set<std::uint32_t> family_;
};

struct AxiomReport {
  enum class Axiom { kNone, kEmptySet, kHeredity, kExchange };

  bool ok = true;
  Axiom violated = Axiom::kNone;
  // Heredity: `first` independent, `second` a dependent subset of it.
  // Exchange: |first| < |second|, no element of second \ first extends first.
  ElementSet first;
  ElementSet second;

  std::string Describe() const;
};

// Exhaustively checks the matroid axioms. Throws kGroundSetTooLarge when
// n > ExplicitMatroid::kMaxGroundSize.
AxiomReport CheckMatroidAxioms(const Matroid& m);

}  // namespace substream

#endif  // SUBSTREAM_MATROID_HPP_
