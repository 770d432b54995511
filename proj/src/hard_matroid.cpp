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

#include "substream/hard_matroid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "substream/error.hpp"
#include "substream/rng.hpp"

namespace substream {

void MatHardParams::Validate() const {
  if (K < 1 || (K > 1 && m < 1)) {
    std::ostringstream msg;
    msg << "need K >= 1 and m >= 1; got K=" << K << " m=" << m;
    throw Error(ErrorCode::kInvalidParams, msg.str());
  }
}

void MatroidProfile::Validate() const {
  if (red.size() != blue.size() || red.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "red and blue need the same non-zero length");
  }
  for (int r : red) {
    if (r != 0 && r != 1) throw Error(ErrorCode::kInvalidArgument, "red bits must be 0 or 1");
  }
  for (int b : blue) {
    if (b < 0) throw Error(ErrorCode::kInvalidArgument, "negative blue count");
  }
  if (blue.back() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "the last class has no blue elements");
  }
}

int ClampedBlue(int blue, int class_index, int K) {
  return std::min(blue, 2 * (K - class_index));
}

Value LevelValue(int t, std::span<const int> red_suffix,
                 std::span<const int> blue_suffix, int K) {
  if (t < 1 || t > K || static_cast<int>(red_suffix.size()) != t ||
      static_cast<int>(blue_suffix.size()) != t) {
    throw Error(ErrorCode::kInvalidArgument, "level needs 1 <= t <= K and suffixes of length t");
  }
  // Evaluate bottom-up: level 1 is the last class, level t the first of the suffix.
  Value f = red_suffix[t - 1];
  Value m_prev = 1;  // m_1 = 1!
  for (int level = 2; level <= t; ++level) {
    const int pos = t - level;  // class K - level + 1 within the suffix
    const int cls = K - level + 1;
    const Value m_level = m_prev * (2 * level - 2) * (2 * level - 1);
    const Value delta = m_prev - f;
    const int d = 2 * (level - 1) - ClampedBlue(blue_suffix[pos], cls, K);
    const int s = 1 - red_suffix[pos];
    const Value a = 2 * m_prev * s + delta * (d - 1);
    f = m_level - a * d;
    m_prev = m_level;
  }
  return f;
}

Value MatProfileValue(const MatroidProfile& profile) {
  profile.Validate();
  const int K = static_cast<int>(profile.red.size());
  return LevelValue(K, profile.red, profile.blue, K);
}

Value PolynomialCheckK3(const MatroidProfile& profile) {
  if (profile.red.size() != 3 || profile.blue.size() != 3) {
    throw Error(ErrorCode::kWrongK, "the closed-form polynomial is for K = 3");
  }
  profile.Validate();
  const Value s1 = 1 - profile.red[2];
  const Value s2 = 1 - profile.red[1];
  const Value s3 = 1 - profile.red[0];
  const Value d2 = 2 - ClampedBlue(profile.blue[1], 2, 3);
  const Value d3 = 4 - ClampedBlue(profile.blue[0], 1, 3);
  return 120 - (12 * s3 + (2 * s2 + s1 * (d2 - 1)) * d2 * (d3 - 1)) * d3;
}

SingletonValues MatSingletonValues(int K) {
  if (K < 2) throw Error(ErrorCode::kInvalidArgument, "singleton values need K >= 2");
  const Value base = Factorial(2 * K - 2);
  return {2 * base, 2 * base, base};
}

Value MatOptimalValue(int K) { return Factorial(2 * K - 1); }

Value MatOutputBound(int K) { return K * Factorial(2 * K - 2); }

Rational MatRatio(int K) {
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "ratio needs K >= 1");
  return Rational(K, 2 * K - 1);
}

namespace {

// Number of clamped profiles, saturating past `cap`.
std::size_t ProfileCount(int K, std::size_t cap) {
  std::size_t count = 1;
  for (int i = 1; i <= K; ++i) {
    count *= static_cast<std::size_t>(2 * (2 * (K - i) + 1));
    if (count > cap) return cap + 1;
  }
  return count;
}

// Calls visit(red, blue) for every clamped profile, in table index order.
void ForEachClampedProfile(
    int K, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
  std::vector<int> red(K, 0), blue(K, 0);
  while (true) {
    visit(red, blue);
    int i = K - 1;
    for (; i >= 0; --i) {
      if (red[i] == 0) {
        red[i] = 1;
        break;
      }
      red[i] = 0;
      if (blue[i] < 2 * (K - 1 - i)) {
        ++blue[i];
        break;
      }
      blue[i] = 0;
    }
    if (i < 0) return;
  }
}

}  // namespace

MatProfileTable::MatProfileTable(int K) : K_(K) {
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "table needs K >= 1");
  // Mixed radix: per class, digit = blue * 2 + red.
  stride_.assign(K, 1);
  for (int i = K - 2; i >= 0; --i) {
    stride_[i] = stride_[i + 1] * static_cast<std::size_t>(2 * (2 * (K - 2 - i) + 1));
  }
  const std::size_t count = ProfileCount(K, kMaxEntries);
  if (count > kMaxEntries) return;
  values_.reserve(count);
  ForEachClampedProfile(K, [&](const std::vector<int>& red, const std::vector<int>& blue) {
    values_.push_back(LevelValue(K, red, blue, K));
  });
}

std::size_t MatProfileTable::Index(std::span<const int> red,
                                   std::span<const int> blue) const {
  std::size_t index = 0;
  for (int i = 0; i < K_; ++i) {
    index += stride_[i] * static_cast<std::size_t>(ClampedBlue(blue[i], i + 1, K_) * 2 + red[i]);
  }
  return index;
}

Value MatProfileTable::At(std::span<const int> red, std::span<const int> blue) const {
  if (static_cast<int>(red.size()) != K_ || static_cast<int>(blue.size()) != K_) {
    throw Error(ErrorCode::kInvalidArgument, "profile length must be K");
  }
  if (values_.empty()) return LevelValue(K_, red, blue, K_);
  return values_[Index(red, blue)];
}

namespace {

class MatHardOracle final : public ValueOracle {
 public:
  MatHardOracle(std::shared_ptr<const MatProfileTable> table, std::vector<int> class_of,
                std::vector<bool> is_red)
      : table_(std::move(table)), class_of_(std::move(class_of)), is_red_(std::move(is_red)) {}

  int ground_size() const override { return static_cast<int>(class_of_.size()); }

  Value Evaluate(const ElementSet& set) const override {
    const int K = table_->K();
    std::vector<int> red(K, 0), blue(K, 0);
    for (ElementId e : set) {
      if (e < 0 || e >= ground_size()) {
        throw Error(ErrorCode::kInvalidArgument, "element outside ground set");
      }
      if (is_red_[e]) {
        red[class_of_[e]] = 1;
      } else {
        ++blue[class_of_[e]];
      }
    }
    return table_->At(red, blue);
  }

 private:
  std::shared_ptr<const MatProfileTable> table_;
  std::vector<int> class_of_;
  std::vector<bool> is_red_;
};

}  // namespace

MatHardInstance MatHardInstance::Instantiate(const MatHardParams& params,
                                             std::uint64_t seed) {
  params.Validate();
  MatHardInstance inst;
  inst.params_ = params;
  inst.seed_ = seed;
  const int K = params.K;
  const int n = params.n();
  std::vector<int> class_of(n);
  for (int e = 0; e < n; ++e) class_of[e] = e == n - 1 ? K - 1 : e / params.m;
  inst.is_red_.assign(n, false);
  Rng rng(seed);
  for (int c = 0; c + 1 < K; ++c) {
    inst.reds_.push_back(c * params.m + static_cast<int>(rng.UniformInt(0, params.m - 1)));
  }
  inst.reds_.push_back(n - 1);
  for (ElementId e : inst.reds_) inst.is_red_[e] = true;
  inst.matroid_ = std::make_shared<const PartitionMatroid>(
      PartitionMatroid::UnitCapacity(class_of));
  inst.oracle_ = std::make_shared<MatHardOracle>(std::make_shared<const MatProfileTable>(K),
                                                 class_of, inst.is_red_);
  return inst;
}

int MatHardInstance::ClassOf(ElementId e) const { return matroid_->class_of(e); }

MatroidProfile MatHardInstance::ProfileOf(const ElementSet& set) const {
  MatroidProfile pr{std::vector<int>(params_.K, 0), std::vector<int>(params_.K, 0)};
  for (ElementId e : set) {
    if (is_red_.at(e)) {
      pr.red[ClassOf(e)] = 1;
    } else {
      ++pr.blue[ClassOf(e)];
    }
  }
  return pr;
}

namespace {

std::string Describe(const char* what, const std::vector<int>& red,
                     const std::vector<int>& blue) {
  std::ostringstream out;
  out << what << " at (";
  for (std::size_t i = 0; i < red.size(); ++i) out << (i ? "," : "") << red[i];
  out << ";";
  for (std::size_t i = 0; i < blue.size(); ++i) out << (i ? "," : "") << blue[i];
  out << ")";
  return out.str();
}

struct ProfilePoint {
  std::vector<int> red;
  std::vector<int> blue;
  Value value;
  // Gain of setting red bit i (only where red[i] == 0) and of one more blue
  // in class i (i < K - 1), on raw counts.
  std::vector<std::optional<Value>> red_gain;
  std::vector<std::optional<Value>> blue_gain;
};

bool Dominates(const ProfilePoint& hi, const ProfilePoint& lo) {
  for (std::size_t i = 0; i < hi.red.size(); ++i) {
    if (hi.red[i] < lo.red[i] || hi.blue[i] < lo.blue[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> CheckMatProfileStructure(int K) {
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "structure check needs K >= 1");
  auto f = [K](const std::vector<int>& red, const std::vector<int>& blue) {
    return LevelValue(K, red, blue, K);
  };
  std::vector<ProfilePoint> points;
  std::optional<std::string> failure;
  ForEachClampedProfile(K, [&](const std::vector<int>& red, const std::vector<int>& blue) {
    if (failure) return;
    ProfilePoint pt{red, blue, f(red, blue), {}, {}};
    if (pt.value < 0) failure = Describe("negative value", red, blue);
    for (int i = 0; i < K && !failure; ++i) {
      std::vector<int> r = red, b = blue;
      if (red[i] == 0) {
        r[i] = 1;
        const Value up = f(r, blue);
        if (up < pt.value) failure = Describe("not monotone in red", red, blue);
        pt.red_gain.push_back(up - pt.value);
      } else {
        pt.red_gain.push_back(std::nullopt);
      }
      if (i + 1 < K) {
        b[i] = blue[i] + 1;
        const Value up = f(red, b);
        if (up < pt.value) failure = Describe("not monotone in blue", red, blue);
        pt.blue_gain.push_back(up - pt.value);
        // Raising a count past its clamp changes nothing.
        if (blue[i] == 2 * (K - 1 - i)) {
          b[i] = blue[i] + 3;
          if (f(red, b) != pt.value) failure = Describe("clamp not invariant", red, blue);
        }
        // With every later class empty, a red in class i is worth one more blue.
        bool later_empty = true;
        for (int j = i + 1; j < K; ++j) later_empty = later_empty && red[j] == 0 && blue[j] == 0;
        if (later_empty && red[i] == 1) {
          std::vector<int> r0 = red, b1 = blue;
          r0[i] = 0;
          b1[i] = blue[i] + 1;
          if (f(r0, b1) != pt.value) failure = Describe("red and blue distinguishable", red, blue);
        }
      } else {
        pt.blue_gain.push_back(std::nullopt);
      }
    }
    points.push_back(std::move(pt));
  });
  if (failure) return failure;

  const std::vector<int> zeros(K, 0), ones(K, 1);
  if (f(zeros, zeros) != 0) return Describe("empty set not zero", zeros, zeros);
  if (f(ones, zeros) != MatOptimalValue(K)) return Describe("wrong maximum", ones, zeros);
  if (K >= 2) {
    std::vector<int> last(K, 0), blues(K, 1);
    last[K - 1] = 1;
    blues[K - 1] = 0;
    if (f(last, blues) != MatOutputBound(K)) return Describe("wrong output value", last, blues);
  }

  // Diminishing returns. Small tables are checked over all dominating pairs,
  // larger ones along unit steps, which implies the pairwise form.
  auto check_pair = [&](const ProfilePoint& hi, const ProfilePoint& lo) -> std::optional<std::string> {
    for (int i = 0; i < K; ++i) {
      if (hi.red_gain[i] && lo.red_gain[i] && *hi.red_gain[i] > *lo.red_gain[i]) {
        return Describe("red marginal increases", hi.red, hi.blue);
      }
      if (hi.blue_gain[i] && lo.blue_gain[i] && *hi.blue_gain[i] > *lo.blue_gain[i]) {
        return Describe("blue marginal increases", hi.red, hi.blue);
      }
    }
    return std::nullopt;
  };
  constexpr std::size_t kPairwiseLimit = 4096;
  if (points.size() <= kPairwiseLimit) {
    for (const ProfilePoint& hi : points)
      for (const ProfilePoint& lo : points) {
        if (&hi == &lo || !Dominates(hi, lo)) continue;
        if (auto bad = check_pair(hi, lo)) return bad;
      }
    return std::nullopt;
  }
  for (const ProfilePoint& lo : points) {
    for (int j = 0; j < K; ++j) {
      for (int bump = 0; bump < 2; ++bump) {
        ProfilePoint hi;
        hi.red = lo.red;
        hi.blue = lo.blue;
        if (bump == 0) {
          if (lo.red[j] == 1) continue;
          hi.red[j] = 1;
        } else {
          if (j + 1 == K || lo.blue[j] == 2 * (K - 1 - j)) continue;
          ++hi.blue[j];
        }
        for (int i = 0; i < K; ++i) {
          if (hi.red[i] == 0 && lo.red[i] == 0) {
            std::vector<int> rh = hi.red, rl = lo.red;
            rh[i] = rl[i] = 1;
            if (f(rh, hi.blue) - f(hi.red, hi.blue) > f(rl, lo.blue) - f(lo.red, lo.blue)) {
              return Describe("red marginal increases", hi.red, hi.blue);
            }
          }
          if (i + 1 < K) {
            std::vector<int> bh = hi.blue, bl = lo.blue;
            ++bh[i];
            ++bl[i];
            if (f(hi.red, bh) - f(hi.red, hi.blue) > f(lo.red, bl) - f(lo.red, lo.blue)) {
              return Describe("blue marginal increases", hi.red, hi.blue);
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace substream
