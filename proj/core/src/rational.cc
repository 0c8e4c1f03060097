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

#include "quotlift/rational.h"

#include <cctype>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

bool IsIntegerText(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  if (!IsIntegerText(s)) {
    throw InputError("not an integer: '" + std::string(s) + "'");
  }
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

nlohmann::json IntegerJson(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class IntegerFromJson(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return ParseInteger(j.get<std::string>());
  throw InputError("rational component must be an integer or digit string");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("empty rational");
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash));
    mpz_class den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    r = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    mpz_class w = (whole.empty() || whole == "-" || whole == "+") ? mpz_class(0)
                                                                  : ParseInteger(whole);
    if (!frac.empty() && !IsIntegerText(frac)) {
      throw InputError("bad decimal '" + std::string(text) + "'");
    }
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = abs(w) * scale + f;
    if (negative || w < 0) num = -num;
    r = Rational(num, scale);
  } else {
    r = Rational(ParseInteger(text));
  }
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& r) { return r.get_str(); }

nlohmann::json ToJson(const Rational& r) {
  return {{"num", IntegerJson(r.get_num())}, {"den", IntegerJson(r.get_den())}};
}

Rational RationalFromJson(const nlohmann::json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InputError("rational must be {\"num\": int, \"den\": int}");
  }
  mpz_class den = IntegerFromJson(j.at("den"));
  if (den == 0) throw InputError("zero denominator");
  Rational r(IntegerFromJson(j.at("num")), den);
  r.canonicalize();
  return r;
}

Rational Pow(const Rational& base, long exponent) {
  Rational result(1);
  Rational b = base;
  if (exponent < 0) {
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

double ToDouble(const Rational& r) { return r.get_d(); }

}  // namespace quotlift
