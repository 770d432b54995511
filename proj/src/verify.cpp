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

#include "substream/verify.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "substream/error.hpp"

namespace substream {

std::string SubmodularityWitness::Describe() const {
  std::ostringstream out;
  if (kind == Kind::kMonotone) {
    out << "not monotone: f(" << s.ToString() << " + " << e << ") = "
        << large_side << " < f(" << s.ToString() << ") = " << small_side;
  } else {
    out << "not submodular: S=" << s.ToString() << " T=" << t.ToString()
        << " e=" << e << ": marginal at S " << small_side
        << " < marginal at T " << large_side;
  }
  return out.str();
}

namespace {

// Runs the scan over a tabulated function. `Num` is either int64 or Value.
template <typename Num>
VerifyReport Scan(const std::vector<Num>& table, int n) {
  const std::uint64_t full = (std::uint64_t{1} << n);
  for (std::uint64_t s = 0; s < full; ++s) {
    for (int e = 0; e < n; ++e) {
      const std::uint64_t be = std::uint64_t{1} << e;
      if (s & be) continue;
      if (table[s | be] < table[s]) {
        SubmodularityWitness w;
        w.kind = SubmodularityWitness::Kind::kMonotone;
        w.s = ElementSet::FromMask(s);
        w.t = w.s;
        w.e = e;
        w.small_side = Value(table[s]);
        w.large_side = Value(table[s | be]);
        return {false, w};
      }
    }
    for (int t = 0; t < n; ++t) {
      const std::uint64_t bt = std::uint64_t{1} << t;
      if (s & bt) continue;
      for (int e = 0; e < n; ++e) {
        const std::uint64_t be = std::uint64_t{1} << e;
        if (e == t || (s & be)) continue;
        const Num at_s = table[s | be] - table[s];
        const Num at_t = table[s | bt | be] - table[s | bt];
        if (at_s < at_t) {
          SubmodularityWitness w;
          w.kind = SubmodularityWitness::Kind::kSubmodular;
          w.s = ElementSet::FromMask(s);
          w.t = ElementSet::FromMask(s | bt);
          w.e = e;
          w.small_side = Value(at_s);
          w.large_side = Value(at_t);
          return {false, w};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

VerifyReport VerifyMonotoneSubmodular(const ValueOracle& f, int limit) {
  const int n = f.ground_size();
  if (n > limit || n > 30) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "exhaustive check needs n <= " + std::to_string(limit) +
                    ", got " + std::to_string(n));
  }
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<Value> table(full);
  // Differences of values below 2^62 cannot overflow int64.
  const Value small_limit = Value(1) << 62;
  bool small = true;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    table[mask] = f.Evaluate(ElementSet::FromMask(mask));
    if (table[mask] >= small_limit || table[mask] <= -small_limit) small = false;
  }
  if (!small) return Scan(table, n);
  std::vector<std::int64_t> fast(full);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    fast[mask] = table[mask].convert_to<std::int64_t>();
  }
  return Scan(fast, n);
}

}  // namespace substream
