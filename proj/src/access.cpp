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

#include "substream/access.hpp"

#include "substream/error.hpp"

namespace substream {

const char* AccessModeName(AccessMode mode) {
  switch (mode) {
    case AccessMode::kStrong:
      return "strong";
    case AccessMode::kWeak:
      return "weak";
    case AccessMode::kElementStore:
      return "element-store";
  }
  return "unknown";
}

AccessPolicy AccessPolicy::Weak(MatroidPtr constraint) {
  if (!constraint) {
    throw Error(ErrorCode::kInvalidArgument, "weak policy needs a constraint");
  }
  return AccessPolicy(AccessMode::kWeak, std::move(constraint));
}

OracleSession::OracleSession(OraclePtr oracle, AccessPolicy policy)
    : oracle_(std::move(oracle)), policy_(std::move(policy)) {
  if (!oracle_) throw Error(ErrorCode::kInvalidArgument, "null oracle");
}

std::optional<std::string> OracleSession::Violation(const ElementSet& set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= oracle_->ground_size()) return "element outside ground set";
  }
  if (policy_.mode() == AccessMode::kStrong) return std::nullopt;
  if (policy_.constraint() && !policy_.constraint()->IsIndependent(set)) {
    return "weak: infeasible query";
  }
  if (policy_.mode() == AccessMode::kElementStore) {
    for (ElementId e : set) {
      if (!stored_.Contains(e) && (!arrival_ || *arrival_ != e)) {
        return "element-store: query outside stored set plus arrival";
      }
    }
  }
  return std::nullopt;
}

std::optional<Value> OracleSession::Query(const ElementSet& set) {
  if (auto reason = Violation(set)) {
    audit_.rejected_queries.push_back({set, *reason, step_});
    if (logging_) log_.push_back({step_, set, false});
    return std::nullopt;
  }
  ++audit_.query_count;
  if (logging_) log_.push_back({step_, set, true});
  Value v = oracle_->Evaluate(set);
  if (!audit_.max_value_seen || v > *audit_.max_value_seen) {
    audit_.max_value_seen = v;
  }
  return v;
}

void OracleSession::BeginArrival(ElementId e) {
  ++step_;
  arrival_ = e;
}

void OracleSession::EndStream() { arrival_.reset(); }

void OracleSession::ReportStored(const ElementSet& distinct,
                                 std::size_t retained) {
  stored_ = distinct;
  if (logging_) history_.push_back(distinct);
  audit_.max_distinct_stored = std::max(audit_.max_distinct_stored, distinct.size());
  audit_.max_stored =
      std::max(audit_.max_stored, std::max(retained, distinct.size()));
}

void OracleSession::ReportRetained(std::size_t retained) {
  audit_.max_stored = std::max(audit_.max_stored, retained);
}

void OracleSession::ReportAuxWords(std::size_t words) {
  audit_.max_aux_words = std::max(audit_.max_aux_words, words);
}

}  // namespace substream
