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

#include "substream/stream.hpp"

#include <cmath>

#include "substream/error.hpp"

namespace substream {

AlgReport RunStreaming(StreamingAlgorithm& alg, OracleSession& session,
                       std::span<const ElementId> order,
                       const Matroid* constraint) {
  for (ElementId e : order) {
    session.BeginArrival(e);
    alg.Process(e, session);
    session.ReportStored(alg.Stored(), alg.Retained());
  }
  session.EndStream();
  alg.Finish(session);

  AlgReport report;
  report.solution = alg.Solution();
  report.value = session.truth().Evaluate(report.solution);
  const OracleAudit& audit = session.audit();
  report.queries = audit.query_count;
  report.max_stored = audit.max_stored;
  report.max_distinct_stored = audit.max_distinct_stored;
  report.violations = audit.rejected_queries.size();
  report.feasible = constraint == nullptr || constraint->IsIndependent(report.solution);
  alg.FillReport(report);
  return report;
}

std::optional<Value> StepCache::Get(OracleSession& session, const ElementSet& set) {
  if (session.step() != step_) {
    memo_.clear();
    step_ = session.step();
  }
  auto it = memo_.find(set);
  if (it != memo_.end()) return it->second;
  std::optional<Value> value = session.Query(set);
  memo_.emplace(set, value);
  return value;
}

GeometricGrid::GeometricGrid(Rational base) : base_(std::move(base)) {
  if (base_ <= 1) throw Error(ErrorCode::kInvalidArgument, "grid base must exceed 1");
  powers_.emplace(0, Rational(1));
}

const Rational& GeometricGrid::Power(int i) {
  auto it = powers_.find(i);
  if (it != powers_.end()) return it->second;
  // Walk from the nearest cached exponent on the same side of zero.
  Rational value;
  if (i > 0) {
    value = Power(i - 1) * base_;
  } else {
    value = Power(i + 1) / base_;
  }
  return powers_.emplace(i, std::move(value)).first->second;
}

int GeometricGrid::SmallestIndexAtLeast(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::kInvalidArgument, "grid index needs x > 0");
  // Floating-point estimate, then exact correction.
  const double estimate = std::log(ToDouble(x)) / std::log(ToDouble(base_));
  int i = static_cast<int>(std::ceil(estimate));
  while (Power(i - 1) >= x) --i;
  while (Power(i) < x) ++i;
  return i;
}

int GeometricGrid::LargestIndexAtMost(const Rational& x) {
  const int i = SmallestIndexAtLeast(x);
  return Power(i) == x ? i : i - 1;
}

}  // namespace substream
