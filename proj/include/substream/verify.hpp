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

#ifndef SUBSTREAM_VERIFY_HPP_
#define SUBSTREAM_VERIFY_HPP_

#include <optional>
#include <string>

#include "substream/element_set.hpp"
#include "substream/numeric.hpp"
#include "substream/oracle.hpp"

namespace substream {

inline constexpr int kDefaultExhaustiveLimit = 14;

struct SubmodularityWitness {
  enum class Kind { kMonotone, kSubmodular };

  Kind kind = Kind::kMonotone;
  // Monotone: f(s + e) < f(s); `t` equals `s`.
  // Submodular: s subset of t, e not in t, f(s + e) - f(s) < f(t + e) - f(t).
  ElementSet s;
  ElementSet t;
  ElementId e = 0;
  Value small_side;
  Value large_side;

  std::string Describe() const;
};

struct VerifyReport {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
};

// Exhaustive monotonicity and diminishing-returns check over all 2^n sets.
// Tabulates f once and checks the local exchange form
//   f(S + e) - f(S) >= f(S + t + e) - f(S + t)   for all S, t != e outside S,
// which is equivalent to the pairwise S subset T condition. Subsets are scanned
// in increasing mask order, then t, then e, so the first witness is canonical.
// Throws kGroundSetTooLarge when n > limit.
VerifyReport VerifyMonotoneSubmodular(const ValueOracle& f,
                                      int limit = kDefaultExhaustiveLimit);

}  // namespace substream

#endif  // SUBSTREAM_VERIFY_HPP_
