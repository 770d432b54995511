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

// The recursive hard function for a partition matroid.
//
// Classes C_1, ..., C_{K-1} have m elements each and C_K has one. Each class
// holds one hidden red element; the rest are blue. A set is summarized by the
// per-class red bits r_i and blue counts b_i, with blues clamped at
// bhat_i = min(b_i, 2(K - i)). The value is f_K from the level recursion
//
//   f_1 = r_K
//   f_t = m_t - a_t d_t,        m_t = (2t - 1)!
//   a_t = 2 m_{t-1} s_t + delta_{t-1} (d_t - 1)
//   d_t = 2(t - 1) - bhat_{K-t+1},  s_t = 1 - r_{K-t+1},  delta_{t-1} = m_{t-1} - f_{t-1}
//
// where level t covers the last t classes. The all-red set is worth (2K - 1)!,
// while the best set an algorithm that cannot tell reds from blues ends up
// with is worth K (2K - 2)!.

#ifndef SUBSTREAM_HARD_MATROID_HPP_
#define SUBSTREAM_HARD_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "substream/element_set.hpp"
#include "substream/matroid.hpp"
#include "substream/numeric.hpp"
#include "substream/oracle.hpp"

namespace substream {

struct MatHardParams {
  int K = 0;
  int m = 0;

  int n() const { return K <= 1 ? 1 : (K - 1) * m + 1; }

  // Smallest class size at which every clamp plateau is reachable.
  static MatHardParams WithDefaultM(int K) { return {K, K <= 1 ? 1 : 2 * (K - 1)}; }

  // Throws kInvalidParams unless K >= 1 and (K == 1 or m >= 1).
  void Validate() const;
};

// Index i holds class i + 1. red.size() == blue.size() == K, and the last class
// has no blue elements.
struct MatroidProfile {
  std::vector<int> red;
  std::vector<int> blue;

  // Throws kInvalidArgument on size mismatch, red bits outside {0, 1},
  // negative blue counts or a blue count in the last class.
  void Validate() const;

  friend bool operator==(const MatroidProfile&, const MatroidProfile&) = default;
};

// Blue count of class i (1-based) clamped at 2(K - i).
int ClampedBlue(int blue, int class_index, int K);

// f_t on the suffix of classes K-t+1, ..., K. Both spans have length t, are
// ordered by class, and the blue counts are clamped here.
Value LevelValue(int t, std::span<const int> red_suffix,
                 std::span<const int> blue_suffix, int K);

// f(r; b) = f_K on the clamped profile.
Value MatProfileValue(const MatroidProfile& profile);

// The K = 3 closed-form polynomial, evaluated independently of the recursion.
// Throws kWrongK unless the profile has three classes.
Value PolynomialCheckK3(const MatroidProfile& profile);

struct SingletonValues {
  Value red_class_lt_K;  // 2 (2K - 2)!
  Value blue_any;        // 2 (2K - 2)!
  Value red_class_K;     // (2K - 2)!
};

// Closed-form singleton values; requires K >= 2.
SingletonValues MatSingletonValues(int K);

// (2K - 1)!
Value MatOptimalValue(int K);
// K (2K - 2)!
Value MatOutputBound(int K);
// K / (2K - 1) exactly.
Rational MatRatio(int K);

// Memoized values over clamped profiles. Tables past kMaxEntries are not
// built and lookups fall back to the O(K) recursion.
class MatProfileTable {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 20;

  explicit MatProfileTable(int K);

  Value At(std::span<const int> red, std::span<const int> blue) const;
  bool materialized() const { return !values_.empty(); }
  int K() const { return K_; }

 private:
  std::size_t Index(std::span<const int> red, std::span<const int> blue) const;

  int K_;
  std::vector<std::size_t> stride_;
  std::vector<Value> values_;
};

// A concrete instance. Element layout follows the class blocks: class i
// (1-based, i < K) is {(i-1)m, ..., im - 1}, class K is {n - 1}. The red
// element of each class is drawn from the seed and hidden from oracle().
class MatHardInstance {
 public:
  static MatHardInstance Instantiate(const MatHardParams& params,
                                     std::uint64_t seed);

  const MatHardParams& params() const { return params_; }
  std::uint64_t seed() const { return seed_; }
  int n() const { return params_.n(); }
  const OraclePtr& oracle() const { return oracle_; }
  // Unit-capacity partition matroid on the classes.
  const std::shared_ptr<const PartitionMatroid>& matroid() const { return matroid_; }

  // 0-based class index.
  int ClassOf(ElementId e) const;
  bool IsRed(ElementId e) const { return is_red_[e]; }
  ElementId RedOf(int class_index) const { return reds_[class_index]; }
  MatroidProfile ProfileOf(const ElementSet& set) const;

 private:
  MatHardParams params_;
  std::uint64_t seed_ = 0;
  std::vector<bool> is_red_;
  std::vector<ElementId> reds_;
  OraclePtr oracle_;
  std::shared_ptr<const PartitionMatroid> matroid_;
};

// Profile-level checks over every clamped profile: clamp invariance,
// monotonicity, the two diminishing-returns families (red and blue marginals
// are non-increasing along the componentwise order), indistinguishability of
// "red in class i" and "one more blue in class i" with empty later classes,
// and the extreme values. Returns the first failure or nullopt.
std::optional<std::string> CheckMatProfileStructure(int K);

}  // namespace substream

#endif  // SUBSTREAM_HARD_MATROID_HPP_
