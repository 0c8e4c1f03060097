// Copyright 2026 The quotlift Authors
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

#ifndef QUOTLIFT_RATIONAL_H_
#define QUOTLIFT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "json.hpp"

namespace quotlift {

// Exact rationals are GMP's mpq_class; every ratio in this library is exact.
using Rational = mpq_class;

// Parses "p/q", "p" or a terminating decimal such as "0.25".
Rational ParseRational(std::string_view text);

std::string ToString(const Rational& r);

// {"num": int, "den": int}. Large values are emitted as decimal strings.
nlohmann::json ToJson(const Rational& r);
Rational RationalFromJson(const nlohmann::json& j);

Rational Pow(const Rational& base, long exponent);

inline Rational MakeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double ToDouble(const Rational& r);

}  // namespace quotlift

#endif  // QUOTLIFT_RATIONAL_H_
