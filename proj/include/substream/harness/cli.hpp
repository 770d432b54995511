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

// Command-line surface: gen, verify, run, audit, tables, sweep.
// Exit codes: 0 success, 1 an acceptance-relevant mismatch, 2 usage errors.
#ifndef SUBSTREAM_HARNESS_CLI_HPP_
#define SUBSTREAM_HARNESS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace substream::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace substream::harness

#endif  // SUBSTREAM_HARNESS_CLI_HPP_
