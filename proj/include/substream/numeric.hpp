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

// Exact arithmetic used throughout: function values are arbitrary-precision
// integers, thresholds and value guesses are exact rationals.

#ifndef SUBSTREAM_NUMERIC_HPP_
#define SUBSTREAM_NUMERIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace substream {

using Value = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Value Factorial(int k);

// Parses "0.1", "1/10", "3" or "-2.5" into an exact rational.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& q);
double ToDouble(const Value& v);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string ToString(const Rational& q);
std::string ToString(const Value& v);

inline Rational ToRational(const Value& v) { return Rational(v); }

// Floor of a rational, as an integer.
Value Floor(const Rational& q);

}  // namespace substream

#endif  // SUBSTREAM_NUMERIC_HPP_
