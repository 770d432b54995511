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

#include "substream/numeric.hpp"

#include <cctype>

#include "substream/error.hpp"

namespace substream {

Value Factorial(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative factorial");
  Value result = 1;
  for (int i = 2; i <= k; ++i) result *= i;
  return result;
}

namespace {

Value ParseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed number '" + std::string(whole) + "'");
  }
  Value v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed number '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Value num = ParseInteger(text.substr(0, slash), whole);
    Value den = ParseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    q = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed number '" + std::string(whole) + "'");
    }
    Value num = int_part.empty() ? Value(0) : ParseInteger(int_part, whole);
    Value scale = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kInvalidArgument,
                    "malformed number '" + std::string(whole) + "'");
      }
      num = num * 10 + (c - '0');
      scale *= 10;
    }
    q = Rational(num, scale);
  } else {
    q = Rational(ParseInteger(text, whole));
  }
  return negative ? Rational(-q) : q;
}

double ToDouble(const Rational& q) { return q.convert_to<double>(); }

double ToDouble(const Value& v) { return v.convert_to<double>(); }

std::string ToString(const Rational& q) {
  const Value num = boost::multiprecision::numerator(q);
  const Value den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string ToString(const Value& v) { return v.str(); }

Value Floor(const Rational& q) {
  const Value num = boost::multiprecision::numerator(q);
  const Value den = boost::multiprecision::denominator(q);
  Value quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

}  // namespace substream
