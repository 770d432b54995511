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

#include "substream/element_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "substream/error.hpp"

namespace substream {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::Range(int n) {
  ElementSet s;
  s.ids_.reserve(n);
  for (int i = 0; i < n; ++i) s.ids_.push_back(i);
  return s;
}

ElementSet ElementSet::FromMask(std::uint64_t mask) {
  ElementSet s;
  s.ids_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.ids_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool ElementSet::Contains(ElementId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool ElementSet::Insert(ElementId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) return false;
  ids_.insert(it, e);
  return true;
}

bool ElementSet::Erase(ElementId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) return false;
  ids_.erase(it);
  return true;
}

ElementSet ElementSet::With(ElementId e) const {
  ElementSet copy = *this;
  copy.Insert(e);
  return copy;
}

ElementSet ElementSet::Without(ElementId e) const {
  ElementSet copy = *this;
  copy.Erase(e);
  return copy;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::uint64_t ElementSet::ToMask() const {
  std::uint64_t mask = 0;
  for (ElementId e : ids_) {
    if (e < 0 || e >= 64) {
      throw Error(ErrorCode::kInvalidArgument, "element out of mask range");
    }
    mask |= std::uint64_t{1} << e;
  }
  return mask;
}

std::string ElementSet::ToString() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out << ',';
    out << ids_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace substream
