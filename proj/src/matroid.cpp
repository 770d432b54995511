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

#include "substream/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "substream/error.hpp"

namespace substream {

bool Matroid::CanExtend(const ElementSet& independent, ElementId e) const {
  if (!IsIndependent(independent)) {
    throw Error(ErrorCode::kNotIndependentInput,
                independent.ToString() + " is not independent");
  }
  if (independent.Contains(e)) return false;
  return IsIndependent(independent.With(e));
}

UniformMatroid::UniformMatroid(int n, int rank) : n_(n), rank_(rank) {
  if (n < 0 || rank < 0) {
    throw Error(ErrorCode::kInvalidArgument, "uniform matroid needs n, K >= 0");
  }
  rank_ = std::min(rank, n);
}

bool UniformMatroid::IsIndependent(const ElementSet& set) const {
  return static_cast<int>(set.size()) <= rank_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of,
                                   std::vector<int> capacities)
    : class_of_(std::move(class_of)), capacities_(std::move(capacities)) {
  std::vector<int> sizes(capacities_.size(), 0);
  for (int c : class_of_) {
    if (c < 0 || c >= static_cast<int>(capacities_.size())) {
      throw Error(ErrorCode::kInvalidArgument, "class index out of range");
    }
    ++sizes[c];
  }
  for (std::size_t c = 0; c < capacities_.size(); ++c) {
    if (capacities_[c] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative class capacity");
    }
    rank_ += std::min(capacities_[c], sizes[c]);
  }
}

PartitionMatroid PartitionMatroid::UnitCapacity(std::vector<int> class_of) {
  int classes = 0;
  for (int c : class_of) classes = std::max(classes, c + 1);
  return PartitionMatroid(std::move(class_of), std::vector<int>(classes, 1));
}

bool PartitionMatroid::IsIndependent(const ElementSet& set) const {
  // Sets are small; count by sorting the class labels.
  std::vector<int> labels;
  labels.reserve(set.size());
  for (ElementId e : set) labels.push_back(class_of_.at(e));
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (static_cast<int>(j - i) > capacities_[labels[i]]) return false;
    i = j;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int n, const std::vector<ElementSet>& independent_sets)
    : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "explicit matroids need n <= " + std::to_string(kMaxGroundSize));
  }
  for (const ElementSet& s : independent_sets) {
    for (ElementId e : s) {
      if (e < 0 || e >= n) {
        throw Error(ErrorCode::kInvalidArgument, "element outside ground set");
      }
    }
    family_.insert(static_cast<std::uint32_t>(s.ToMask()));
    rank_ = std::max(rank_, static_cast<int>(s.size()));
  }
}

ExplicitMatroid ExplicitMatroid::FromBases(int n, const std::vector<ElementSet>& bases) {
  std::vector<ElementSet> family;
  for (const ElementSet& basis : bases) {
    const std::uint32_t mask = static_cast<std::uint32_t>(basis.ToMask());
    // Every submask of the basis, including the empty set.
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      family.push_back(ElementSet::FromMask(sub));
      if (sub == 0) break;
    }
  }
  return ExplicitMatroid(n, family);
}

ExplicitMatroid ExplicitMatroid::Enumerate(const Matroid& m) {
  const int n = m.ground_size();
  if (n > kMaxGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "enumeration needs n <= " + std::to_string(kMaxGroundSize));
  }
  std::vector<ElementSet> family;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElementSet s = ElementSet::FromMask(mask);
    if (m.IsIndependent(s)) family.push_back(std::move(s));
  }
  return ExplicitMatroid(n, family);
}

bool ExplicitMatroid::IsIndependent(const ElementSet& set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= n_) return false;
  }
  return family_.count(static_cast<std::uint32_t>(set.ToMask())) > 0;
}

std::vector<ElementSet> ExplicitMatroid::IndependentSets() const {
  std::vector<std::uint32_t> masks(family_.begin(), family_.end());
  std::sort(masks.begin(), masks.end());
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (std::uint32_t mask : masks) out.push_back(ElementSet::FromMask(mask));
  return out;
}

std::string AxiomReport::Describe() const {
  std::ostringstream out;
  switch (violated) {
    case Axiom::kNone:
      out << "ok";
      break;
    case Axiom::kEmptySet:
      out << "empty set is not independent";
      break;
    case Axiom::kHeredity:
      out << "heredity: " << first.ToString() << " is independent but its subset "
          << second.ToString() << " is not";
      break;
    case Axiom::kExchange:
      out << "exchange: no element of " << second.ToString() << " extends "
          << first.ToString();
      break;
  }
  return out.str();
}

AxiomReport CheckMatroidAxioms(const Matroid& m) {
  const int n = m.ground_size();
  if (n > ExplicitMatroid::kMaxGroundSize) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "axiom check needs n <= " +
                    std::to_string(ExplicitMatroid::kMaxGroundSize));
  }
  const std::uint32_t full = 1u << n;
  std::vector<bool> indep(full);
  std::vector<std::uint32_t> members;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    indep[mask] = m.IsIndependent(ElementSet::FromMask(mask));
    if (indep[mask]) members.push_back(mask);
  }
  AxiomReport report;
  if (!indep[0]) {
    report.ok = false;
    report.violated = AxiomReport::Axiom::kEmptySet;
    return report;
  }
  for (std::uint32_t mask : members) {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint32_t sub = mask & ~(rest & -rest);
      if (!indep[sub]) {
        report.ok = false;
        report.violated = AxiomReport::Axiom::kHeredity;
        report.first = ElementSet::FromMask(mask);
        report.second = ElementSet::FromMask(sub);
        return report;
      }
    }
  }
  for (std::uint32_t small : members) {
    for (std::uint32_t large : members) {
      if (std::popcount(small) >= std::popcount(large)) continue;
      bool extended = false;
      for (std::uint32_t diff = large & ~small; diff != 0; diff &= diff - 1) {
        if (indep[small | (diff & -diff)]) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        report.ok = false;
        report.violated = AxiomReport::Axiom::kExchange;
        report.first = ElementSet::FromMask(small);
        report.second = ElementSet::FromMask(large);
        return report;
      }
    }
  }
  return report;
}

}  // namespace substream
