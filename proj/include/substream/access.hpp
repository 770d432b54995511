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

// Algorithm-facing oracle access with policy enforcement and accounting.
//
// Three access modes:
//   strong         every query is answered.
//   weak           only feasible sets (independent in the constraint).
//   element-store  only subsets of the stored set plus the current arrival;
//                  may additionally carry a feasibility constraint.
//
// A rejected query is logged in the audit and returns nullopt; it never
// reveals the value and never throws, so one run can surface every violation.

#ifndef SUBSTREAM_ACCESS_HPP_
#define SUBSTREAM_ACCESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "substream/element_set.hpp"
#include "substream/matroid.hpp"
#include "substream/numeric.hpp"
#include "substream/oracle.hpp"

namespace substream {

enum class AccessMode { kStrong, kWeak, kElementStore };

const char* AccessModeName(AccessMode mode);

class AccessPolicy {
 public:
  static AccessPolicy Strong() { return AccessPolicy(AccessMode::kStrong, nullptr); }
  static AccessPolicy Weak(MatroidPtr constraint);
  // `constraint` may be null for a pure element-store policy.
  static AccessPolicy ElementStore(MatroidPtr constraint = nullptr) {
    return AccessPolicy(AccessMode::kElementStore, std::move(constraint));
  }

  AccessMode mode() const { return mode_; }
  const MatroidPtr& constraint() const { return constraint_; }

 private:
  AccessPolicy(AccessMode mode, MatroidPtr constraint)
      : mode_(mode), constraint_(std::move(constraint)) {}

  AccessMode mode_;
  MatroidPtr constraint_;
};

struct RejectedQuery {
  ElementSet set;
  std::string reason;
  std::int64_t step = 0;
};

struct OracleAudit {
  std::int64_t query_count = 0;
  // Peak of the retained-element count summed over live algorithm state.
  std::size_t max_stored = 0;
  // Peak number of distinct retained elements.
  std::size_t max_distinct_stored = 0;
  // Peak of the algorithm's self-reported auxiliary memory, in words.
  std::size_t max_aux_words = 0;
  std::vector<RejectedQuery> rejected_queries;
  std::optional<Value> max_value_seen;

  bool compliant() const { return rejected_queries.empty(); }
};

struct LoggedQuery {
  std::int64_t step = 0;
  ElementSet set;
  bool answered = false;
};

class OracleSession {
 public:
  OracleSession(OraclePtr oracle, AccessPolicy policy);

  int ground_size() const { return oracle_->ground_size(); }
  const AccessPolicy& policy() const { return policy_; }
  const OracleAudit& audit() const { return audit_; }

  // Exact value, or nullopt if the policy rejects the set.
  std::optional<Value> Query(const ElementSet& set);

  // Stream bookkeeping for the element-store window. Step t (1-based) begins
  // with the arrival of e_t; the window during step t is S_{t-1} + e_t.
  void BeginArrival(ElementId e);
  // After the last arrival the window is the final stored set.
  void EndStream();
  // Stored set after the current step, plus the retained count summed over
  // live state (at least distinct.size()).
  void ReportStored(const ElementSet& distinct, std::size_t retained);
  // Accounting only, for algorithms that do not track a distinct set.
  void ReportRetained(std::size_t retained);
  void ReportAuxWords(std::size_t words);

  std::int64_t step() const { return step_; }
  const ElementSet& stored() const { return stored_; }

  void EnableQueryLog() { logging_ = true; }
  const std::vector<LoggedQuery>& query_log() const { return log_; }
  // stored_history()[t] is the stored set reported after step t; index 0 is
  // the empty set before the first arrival.
  const std::vector<ElementSet>& stored_history() const { return history_; }

  // Direct access to the truth oracle for harness-side scoring. Calls made
  // through this reference are not queries and are not audited.
  const ValueOracle& truth() const { return *oracle_; }

 private:
  std::optional<std::string> Violation(const ElementSet& set) const;

  OraclePtr oracle_;
  AccessPolicy policy_;
  OracleAudit audit_;
  ElementSet stored_;
  std::optional<ElementId> arrival_;
  std::int64_t step_ = 0;
  bool logging_ = false;
  std::vector<LoggedQuery> log_;
  std::vector<ElementSet> history_{ElementSet()};
};

// One policy-gated query under the session policy.
inline std::optional<Value> Evaluate(OracleSession& session,
                                     const ElementSet& set) {
  return session.Query(set);
}

}  // namespace substream

#endif  // SUBSTREAM_ACCESS_HPP_
