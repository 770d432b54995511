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

// CSV renderings of the small reference grids.
//   2: f(b, r, 0) and the red marginal for K = h = 4, b = 0..10.
//   3: K = 3 values without the last-class element, blocks (r1, r2).
//   4: the same with the last-class element present.
#ifndef SUBSTREAM_HARNESS_TABLES_HPP_
#define SUBSTREAM_HARNESS_TABLES_HPP_

#include <string>
#include <vector>

namespace substream::harness {

// Throws kInvalidArgument unless which is 2, 3 or 4.
std::string EmitTable(int which);

// Cell-level differences between two CSV texts, as "row R col C: want X,
// got Y" strings. Empty when identical.
std::vector<std::string> DiffCsv(const std::string& want, const std::string& got);

// CSV of the limiting-ratio sweep over K in [from, to]: cardinality rows
// carry the candidate and exact minimizing h; matroid rows K / (2K - 1).
std::string RatioSweepCsv(const std::string& kind, int from, int to);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_TABLES_HPP_
