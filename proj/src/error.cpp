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

#include "substream/error.hpp"

namespace substream {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
    case ErrorCode::kNotIndependentInput:
      return "NotIndependentInput";
    case ErrorCode::kDependentInput:
      return "DependentInput";
    case ErrorCode::kWrongK:
      return "WrongK";
    case ErrorCode::kIncompatibleDistribution:
      return "IncompatibleDistribution";
    case ErrorCode::kRankTooLarge:
      return "RankTooLarge";
  }
  return "Unknown";
}

}  // namespace substream
