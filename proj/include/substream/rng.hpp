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

// Portable seeded randomness. std::mt19937_64 has a fully specified output
// sequence, but the standard distributions and std::shuffle do not, so bounded
// draws and shuffles are implemented here. Instances and streams re-derived
// from a seed are therefore identical across platforms and standard libraries.

#ifndef SUBSTREAM_RNG_HPP_
#define SUBSTREAM_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace substream {

// Name recorded in instance files and reports. Bump on any change that alters
// the stream of draws.
inline constexpr const char* kPrngName = "mt19937_64/rejection-v1";

std::uint64_t SplitMix64(std::uint64_t x);

// Derives an independent child seed from (seed, stream index).
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // True with probability numerator/denominator.
  bool Bernoulli(std::uint64_t numerator, std::uint64_t denominator);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          UniformInt(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace substream

#endif  // SUBSTREAM_RNG_HPP_
