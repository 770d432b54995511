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

#ifndef SUBSTREAM_ELEMENT_SET_HPP_
#define SUBSTREAM_ELEMENT_SET_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace substream {

// Dense index into the ground set, 0 <= id < n.
using ElementId = int;

// A finite set of elements, kept as a sorted duplicate-free vector. Sets in
// this library are small (bounded by a rank or a memory budget), so a flat
// vector beats node-based containers.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  explicit ElementSet(std::vector<ElementId> ids);

  // Elements {0, ..., n-1}.
  static ElementSet Range(int n);
  // Bit i of `mask` selects element i.
  static ElementSet FromMask(std::uint64_t mask);

  bool Contains(ElementId e) const;
  // Returns false when `e` was already present.
  bool Insert(ElementId e);
  bool Erase(ElementId e);

  ElementSet With(ElementId e) const;
  ElementSet Without(ElementId e) const;
  ElementSet Union(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;

  // Requires every element < 64.
  std::uint64_t ToMask() const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<ElementId>& ids() const { return ids_; }

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> ids_;
};

}  // namespace substream

#endif  // SUBSTREAM_ELEMENT_SET_HPP_
