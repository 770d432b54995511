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

#include "substream/hard_cardinality.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>

#include "substream/error.hpp"
#include "substream/rng.hpp"

namespace substream {

void CardHardParams::Validate() const {
  if (K < 1 || h < K || n < 2 * K) {
    std::ostringstream msg;
    msg << "need K >= 1, h >= K, n >= 2K; got n=" << n << " K=" << K << " h=" << h;
    throw Error(ErrorCode::kInvalidParams, msg.str());
  }
}

namespace {

// ceil(x / 2) for x >= 0.
int HalfUp(int x) { return (x + 1) / 2; }

// Shared tail of the three marginal formulas once b is past the plateau.
Value Tail(int b, int r, const CardHardParams& p) {
  if (b <= p.h + 2 * (p.K - 2) - r) return Value(p.K - 1 - HalfUp(r + b - p.h));
  return Value(0);
}

}  // namespace

Value DeltaRed(int b, int r, const CardHardParams& params) {
  if (b < 0 || r < 0 || r > params.K - 2) {
    throw Error(ErrorCode::kInvalidArgument, "delta_r needs b >= 0, 0 <= r <= K-2");
  }
  if (b <= params.h + r) return Value(params.K - 1 + params.h - b);
  return Tail(b, r, params);
}

Value DeltaBlue(int b, int p, const CardHardParams& params) {
  if (b < 0 || (p != 0 && p != 1)) {
    throw Error(ErrorCode::kInvalidArgument, "delta_b needs b >= 0, p in {0,1}");
  }
  if (b <= params.h) return Value(p == 0 ? params.K - 1 + params.h - b : params.K - 1);
  return Tail(b, 0, params);
}

Value CardProfileValue(const ColorProfile3& pr, const CardHardParams& params) {
  if (pr.blue < 0 || pr.blue > params.num_blue() || pr.red < 0 ||
      pr.red > params.num_red() || pr.purple < 0 || pr.purple > 1) {
    std::ostringstream msg;
    msg << "profile (" << pr.blue << "," << pr.red << "," << pr.purple
        << ") out of range";
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
  Value total = pr.purple == 1 ? Value(params.h * (params.h + 1) / 2) : Value(0);
  for (int j = 0; j < pr.blue; ++j) total += DeltaBlue(j, pr.purple, params);
  for (int i = 0; i < pr.red; ++i) total += DeltaRed(pr.blue, i, params);
  return total;
}

Value CardOptimalValue(const CardHardParams& params) {
  const Value K = params.K, h = params.h;
  return (K - 1) * (h + K - 1) + h * (h + 1) / 2;
}

Value CardOutputBound(const CardHardParams& params) {
  const Value K = params.K, h = params.h;
  const Value without_purple = h * K + K * (K - 1) / 2;
  const Value with_purple = (K - 1) * (K - 1) + h * (h + 1) / 2;
  return std::max(without_purple, with_purple);
}

namespace {

Rational RatioAt(int K, int h) {
  const CardHardParams p{2 * K, K, h};
  return Rational(CardOutputBound(p), CardOptimalValue(p));
}

}  // namespace

CardRatioBound CardRatioBoundFor(int K) {
  if (K < 2) throw Error(ErrorCode::kInvalidArgument, "ratio bound needs K >= 2");
  CardRatioBound out;
  out.K = K;
  // floor(sqrt(2 (K-1)^2)) exactly; the square is never perfect for K >= 2.
  const Value lo = boost::multiprecision::sqrt(Value(2) * (K - 1) * (K - 1));
  const int candidates[] = {std::max(K, lo.convert_to<int>()),
                            std::max(K, lo.convert_to<int>() + 1)};
  for (int h : candidates) {
    const Rational q = RatioAt(K, h);
    if (out.candidate_h == 0 || q < out.candidate_ratio) {
      out.candidate_h = h;
      out.candidate_ratio = q;
    }
  }
  // The ratio tends to 1 as h grows, so the minimizer sits well below 3K.
  for (int h = K; h <= 3 * K + 2; ++h) {
    const Rational q = RatioAt(K, h);
    if (out.h == 0 || q < out.ratio) {
      out.h = h;
      out.ratio = q;
    }
  }
  return out;
}

CardProfileTable::CardProfileTable(const CardHardParams& params) : params_(params) {
  params_.Validate();
  const int nb = params_.num_blue();
  const int K = params_.K;
  values_.resize(static_cast<std::size_t>(nb + 1) * K * 2);
  for (int p = 0; p <= 1; ++p) {
    Value base = p == 1 ? Value(params_.h * (params_.h + 1) / 2) : Value(0);
    for (int b = 0; b <= nb; ++b) {
      Value v = base;
      for (int r = 0; r < K; ++r) {
        values_[(static_cast<std::size_t>(b) * K + r) * 2 + p] = v;
        if (r < K - 1) v += DeltaRed(b, r, params_);
      }
      if (b < nb) base += DeltaBlue(b, p, params_);
    }
  }
}

const Value& CardProfileTable::At(const ColorProfile3& pr) const {
  if (pr.blue < 0 || pr.blue > params_.num_blue() || pr.red < 0 ||
      pr.red > params_.num_red() || pr.purple < 0 || pr.purple > 1) {
    throw Error(ErrorCode::kInvalidArgument, "profile out of range");
  }
  return values_[(static_cast<std::size_t>(pr.blue) * params_.K + pr.red) * 2 +
                 pr.purple];
}

namespace {

class CardHardOracle final : public ValueOracle {
 public:
  CardHardOracle(std::shared_ptr<const CardProfileTable> table,
                 std::vector<Color> colors)
      : table_(std::move(table)), colors_(std::move(colors)) {}

  int ground_size() const override { return static_cast<int>(colors_.size()); }

  Value Evaluate(const ElementSet& set) const override {
    ColorProfile3 pr;
    for (ElementId e : set) {
      if (e < 0 || e >= ground_size()) {
        throw Error(ErrorCode::kInvalidArgument, "element outside ground set");
      }
      switch (colors_[e]) {
        case Color::kBlue: ++pr.blue; break;
        case Color::kRed: ++pr.red; break;
        case Color::kPurple: ++pr.purple; break;
      }
    }
    return table_->At(pr);
  }

 private:
  std::shared_ptr<const CardProfileTable> table_;
  std::vector<Color> colors_;
};

}  // namespace

CardHardInstance CardHardInstance::Instantiate(const CardHardParams& params,
                                               std::uint64_t seed) {
  params.Validate();
  CardHardInstance inst;
  inst.params_ = params;
  inst.seed_ = seed;
  std::vector<ElementId> order(params.n);
  for (int i = 0; i < params.n; ++i) order[i] = i;
  Rng rng(seed);
  rng.Shuffle(std::span<ElementId>(order));
  inst.colors_.assign(params.n, Color::kBlue);
  for (int i = 0; i < params.num_red(); ++i) inst.colors_[order[i]] = Color::kRed;
  inst.purple_ = order[params.num_red()];
  inst.colors_[inst.purple_] = Color::kPurple;
  inst.oracle_ = std::make_shared<CardHardOracle>(
      std::make_shared<const CardProfileTable>(params), inst.colors_);
  return inst;
}

ColorProfile3 CardHardInstance::ProfileOf(const ElementSet& set) const {
  ColorProfile3 pr;
  for (ElementId e : set) {
    switch (colors_.at(e)) {
      case Color::kBlue: ++pr.blue; break;
      case Color::kRed: ++pr.red; break;
      case Color::kPurple: ++pr.purple; break;
    }
  }
  return pr;
}

std::vector<ElementId> CardHardInstance::reds() const {
  std::vector<ElementId> out;
  for (int e = 0; e < params_.n; ++e) {
    if (colors_[e] == Color::kRed) out.push_back(e);
  }
  return out;
}

namespace {

std::string Where(const char* what, int b, int r, int p) {
  std::ostringstream out;
  out << what << " at (" << b << "," << r << "," << p << ")";
  return out.str();
}

}  // namespace

std::optional<std::string> CheckCardProfileStructure(const CardHardParams& params,
                                                     int max_blue) {
  params.Validate();
  CardHardParams wide = params;
  wide.n = std::max(params.n, max_blue + params.K);
  const CardProfileTable table(wide);
  const int B = std::min(max_blue, wide.num_blue());
  const int R = wide.num_red();
  auto f = [&](int b, int r, int p) { return table.At({b, r, p}); };

  // Gains along each coordinate; unset where the step leaves the grid.
  auto purple_gain = [&](int b, int r, int) { return f(b, r, 1) - f(b, r, 0); };
  auto red_gain = [&](int b, int r, int p) { return f(b, r + 1, p) - f(b, r, p); };
  auto blue_gain = [&](int b, int r, int p) { return f(b + 1, r, p) - f(b, r, p); };

  struct Family {
    const char* name;
    std::function<Value(int, int, int)> gain;
    int b_max, r_max, p_max;
  };
  const Family families[] = {
      {"purple gain", purple_gain, B, R, 0},
      {"red gain", red_gain, B, R - 1, 1},
      {"blue gain", blue_gain, B - 1, R, 1},
  };
  for (const Family& fam : families) {
    for (int b1 = 0; b1 <= fam.b_max; ++b1)
      for (int r1 = 0; r1 <= fam.r_max; ++r1)
        for (int p1 = 0; p1 <= fam.p_max; ++p1) {
          const Value g1 = fam.gain(b1, r1, p1);
          if (g1 < 0) return Where((std::string(fam.name) + " negative").c_str(), b1, r1, p1);
          for (int b2 = b1; b2 <= fam.b_max; ++b2)
            for (int r2 = r1; r2 <= fam.r_max; ++r2)
              for (int p2 = p1; p2 <= fam.p_max; ++p2) {
                if (fam.gain(b2, r2, p2) > g1) {
                  return Where((std::string(fam.name) + " increases").c_str(), b2, r2, p2);
                }
              }
        }
  }
  for (int b = 0; R >= 1 && b < B; ++b) {
    if (f(b + 1, 0, 0) != f(b, 1, 0)) return Where("red and blue distinguishable", b, 1, 0);
  }
  for (int b = 0; b <= B; ++b)
    for (int r = 0; r <= R - 1; ++r) {
      if (r + 1 <= R - 1 && DeltaRed(b, r + 1, wide) > DeltaRed(b, r, wide)) {
        return Where("delta_r increases in r", b, r, 0);
      }
      if (b < B && DeltaRed(b + 1, r, wide) > DeltaRed(b, r, wide)) {
        return Where("delta_r increases in b", b, r, 0);
      }
    }
  return std::nullopt;
}

}  // namespace substream
