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

#include "substream/harness/tables.hpp"

#include <iomanip>
#include <sstream>

#include "substream/error.hpp"
#include "substream/hard_cardinality.hpp"
#include "substream/hard_matroid.hpp"

namespace substream::harness {

namespace {

std::string Table2() {
  const CardHardParams p{20, 4, 4};
  std::ostringstream out;
  out << "b,f_r0,dr_r0,f_r1,dr_r1,f_r2,dr_r2,f_r3\n";
  const int last_b = 10;
  for (int b = 0; b <= last_b; ++b) {
    out << b;
    for (int r = 0; r < p.K; ++r) {
      out << ',' << CardProfileValue({b, r, 0}, p);
      if (r + 1 < p.K) {
        // The marginal past the final row is not shown.
        if (b == last_b) {
          out << ",---";
        } else {
          out << ',' << DeltaRed(b, r, p);
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string MatroidGrid(int r3) {
  std::ostringstream out;
  out << "r1,r2,bhat1,bhat2_0,bhat2_1,bhat2_2\n";
  const int blocks[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (const auto& blk : blocks) {
    for (int b1 = 0; b1 <= 4; ++b1) {
      out << blk[0] << ',' << blk[1] << ',' << b1;
      for (int b2 = 0; b2 <= 2; ++b2) {
        out << ',' << MatProfileValue({{blk[0], blk[1], r3}, {b1, b2, 0}});
      }
      out << '\n';
    }
  }
  return out.str();
}

std::vector<std::vector<std::string>> Cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::string EmitTable(int which) {
  switch (which) {
    case 2: return Table2();
    case 3: return MatroidGrid(0);
    case 4: return MatroidGrid(1);
  }
  throw Error(ErrorCode::kInvalidArgument, "tables are 2, 3 and 4");
}

std::vector<std::string> DiffCsv(const std::string& want, const std::string& got) {
  const auto a = Cells(want), b = Cells(got);
  std::vector<std::string> out;
  if (a.size() != b.size()) {
    out.push_back("row count: want " + std::to_string(a.size()) + ", got " +
                  std::to_string(b.size()));
  }
  for (std::size_t r = 0; r < std::min(a.size(), b.size()); ++r) {
    if (a[r].size() != b[r].size()) {
      out.push_back("row " + std::to_string(r) + ": cell count differs");
      continue;
    }
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      if (a[r][c] != b[r][c]) {
        out.push_back("row " + std::to_string(r) + " col " + std::to_string(c) + ": want " +
                      a[r][c] + ", got " + b[r][c]);
      }
    }
  }
  return out;
}

std::string RatioSweepCsv(const std::string& kind, int from, int to) {
  std::ostringstream out;
  out << std::setprecision(10);
  if (kind == "cardinality") {
    out << "K,candidate_h,candidate_ratio,h,ratio,ratio_exact\n";
    for (int K = std::max(from, 2); K <= to; ++K) {
      const CardRatioBound r = CardRatioBoundFor(K);
      out << K << ',' << r.candidate_h << ',' << ToDouble(r.candidate_ratio) << ',' << r.h
          << ',' << ToDouble(r.ratio) << ',' << ToString(r.ratio) << '\n';
    }
    return out.str();
  }
  if (kind == "matroid") {
    out << "K,optimum,output_bound,ratio,ratio_exact\n";
    for (int K = std::max(from, 1); K <= to; ++K) {
      out << K << ',' << MatOptimalValue(K) << ',' << MatOutputBound(K) << ','
          << ToDouble(MatRatio(K)) << ',' << ToString(MatRatio(K)) << '\n';
    }
    return out.str();
  }
  throw Error(ErrorCode::kInvalidArgument, "sweep kind is cardinality or matroid");
}

}  // namespace substream::harness
