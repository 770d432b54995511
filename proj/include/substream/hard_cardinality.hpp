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

// The colorwise-symmetric hard function for a cardinality constraint.
//
// The ground set is colored blue (n - K elements), red (K - 1) and purple (1).
// f depends only on the color counts (b, r, p) and is built from its marginal
// returns: start at f(0, 0, p), add blues one at a time with gains
// delta_b(j, p), then reds with gains delta_r(b, i). With shape parameter
// h >= K, adding a red on top of b blues is worth exactly as much as adding a
// blue, so f(b + 1, 0, 0) = f(b, 1, 0): reds hide among the blues.

#ifndef SUBSTREAM_HARD_CARDINALITY_HPP_
#define SUBSTREAM_HARD_CARDINALITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "substream/element_set.hpp"
#include "substream/numeric.hpp"
#include "substream/oracle.hpp"

namespace substream {

struct CardHardParams {
  int n = 0;
  int K = 0;
  int h = 0;

  int num_blue() const { return n - K; }
  int num_red() const { return K - 1; }

  // Throws kInvalidParams unless K >= 1, h >= K and n >= 2K.
  void Validate() const;
};

struct ColorProfile3 {
  int blue = 0;
  int red = 0;
  int purple = 0;

  friend bool operator==(const ColorProfile3&, const ColorProfile3&) = default;
};

enum class Color : std::uint8_t { kBlue, kRed, kPurple };

// Gain of one more red on top of b blues and r reds (0 <= r <= K - 2).
Value DeltaRed(int b, int r, const CardHardParams& params);
// Gain of one more blue on top of b blues, no reds, purple present iff p = 1.
Value DeltaBlue(int b, int p, const CardHardParams& params);

// f(b, r, p) summed from the marginal returns. Throws kInvalidArgument when
// the profile is out of range for `params`.
Value CardProfileValue(const ColorProfile3& profile, const CardHardParams& params);

// f(0, K - 1, 1) = (K - 1)(h + K - 1) + h(h + 1)/2.
Value CardOptimalValue(const CardHardParams& params);
// max{f(K, 0, 0), f(K - 1, 0, 1)} = max{hK + K(K - 1)/2, (K - 1)^2 + h(h + 1)/2},
// the best value reachable from sets with at most one red and no purple-red mix.
Value CardOutputBound(const CardHardParams& params);

struct CardRatioBound {
  int K = 0;
  // floor/ceil of sqrt(2)(K - 1), clamped to h >= K, better of the two.
  int candidate_h = 0;
  Rational candidate_ratio;
  // Exact minimizer of output_bound / optimum over all h >= K.
  int h = 0;
  Rational ratio;
};

// Requires K >= 2. For large K the two minimizers coincide and the ratio tends
// to 2/(2 + sqrt 2).
CardRatioBound CardRatioBoundFor(int K);

// Memoized f over all profiles of an instance, O(n K) entries.
class CardProfileTable {
 public:
  explicit CardProfileTable(const CardHardParams& params);

  const Value& At(const ColorProfile3& profile) const;
  const CardHardParams& params() const { return params_; }

 private:
  CardHardParams params_;
  std::vector<Value> values_;
};

// A concrete instance: a seeded hidden coloring of {0, ..., n-1}.
//
// oracle() is the only thing handed to algorithms. The coloring accessors are
// the analyst's view, used by stream samplers and audits.
class CardHardInstance {
 public:
  // Throws kInvalidParams.
  static CardHardInstance Instantiate(const CardHardParams& params,
                                      std::uint64_t seed);

  const CardHardParams& params() const { return params_; }
  std::uint64_t seed() const { return seed_; }
  const OraclePtr& oracle() const { return oracle_; }

  Color ColorOf(ElementId e) const { return colors_[e]; }
  ColorProfile3 ProfileOf(const ElementSet& set) const;
  ElementId purple() const { return purple_; }
  std::vector<ElementId> reds() const;

 private:
  CardHardParams params_;
  std::uint64_t seed_ = 0;
  std::vector<Color> colors_;
  ElementId purple_ = 0;
  OraclePtr oracle_;
};

// Profile-level structure checks over blue counts up to `max_blue`:
// the three marginal-monotonicity families (purple, red, blue gains are
// non-negative and non-increasing in every count), red/blue
// indistinguishability and monotonicity of delta_r. Returns a description of
// the first failure, or nullopt.
std::optional<std::string> CheckCardProfileStructure(const CardHardParams& params,
                                                     int max_blue = 12);

}  // namespace substream

#endif  // SUBSTREAM_HARD_CARDINALITY_HPP_
