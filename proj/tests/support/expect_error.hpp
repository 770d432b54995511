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

#ifndef SUBSTREAM_TESTS_SUPPORT_EXPECT_ERROR_HPP_
#define SUBSTREAM_TESTS_SUPPORT_EXPECT_ERROR_HPP_

#include <gtest/gtest.h>

#include "substream/error.hpp"

// Expects `stmt` to throw substream::Error with the given code.
#define EXPECT_ERROR_CODE(stmt, expected)                                  \
  do {                                                                     \
    try {                                                                  \
      stmt;                                                                \
      ADD_FAILURE() << "no exception from " #stmt;                        \
    } catch (const ::substream::Error& err) {                              \
      EXPECT_EQ(err.code(), expected) << err.what();                       \
    }                                                                      \
  } while (false)

#endif  // SUBSTREAM_TESTS_SUPPORT_EXPECT_ERROR_HPP_
