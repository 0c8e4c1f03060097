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

#include "quotlift/ledger.h"

#include <cmath>
#include <numeric>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

Rational TwoToMinus(int k) { return Pow(Rational(2), -k); }

}  // namespace

PowerValue PowerValue::Of(const Rational& r) {
  if (r < 0) throw PreconditionError("ledger values must be non-negative, got " + ToString(r));
  PowerValue v;
  v.coefficient = r;
  return v;
}

PowerValue PowerValue::Power(const Rational& base, long num, long den) {
  if (base <= 0) throw PreconditionError("power base must be positive, got " + ToString(base));
  if (den <= 0) throw PreconditionError("exponent denominator must be positive");
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  PowerValue v;
  v.base = base;
  v.exp_num = num / g;
  v.exp_den = den / g;
  if (v.exp_den == 1 || v.exp_num == 0) {
    v.coefficient = Pow(base, v.exp_num);
    v.base = 1;
    v.exp_num = 0;
    v.exp_den = 1;
  }
  return v;
}

PowerValue PowerValue::Times(const Rational& c) const {
  if (c < 0) throw PreconditionError("ledger scale must be non-negative");
  PowerValue v = *this;
  v.coefficient *= c;
  return v;
}

bool PowerValue::is_rational() const {
  return coefficient == 0 || base == 1 || exp_num == 0;
}

Rational PowerValue::AsRational() const {
  if (!is_rational()) throw PreconditionError("value is irrational");
  if (coefficient == 0) return 0;
  return coefficient * Pow(base, exp_num);
}

double PowerValue::Approx() const {
  return ToDouble(coefficient) *
         std::pow(ToDouble(base), static_cast<double>(exp_num) / static_cast<double>(exp_den));
}

Rational PowerValue::LowerRational() const {
  if (is_rational()) return AsRational();
  Rational guess(Approx());
  for (int k = 50; k > 0; --k) {
    Rational lo = guess - TwoToMinus(k);
    if (lo < 0) lo = 0;
    if (Compare(PowerValue::Of(lo), *this) <= 0) return lo;
  }
  return 0;
}

Rational PowerValue::UpperRational() const {
  if (is_rational()) return AsRational();
  Rational guess(Approx());
  for (int k = 50;; --k) {
    Rational hi = guess + TwoToMinus(k);
    if (Compare(PowerValue::Of(hi), *this) >= 0) return hi;
  }
}

nlohmann::json PowerValue::ToJson() const {
  if (is_rational()) return quotlift::ToJson(AsRational());
  return {{"coefficient", quotlift::ToJson(coefficient)},
          {"base", quotlift::ToJson(base)},
          {"exponent", {{"num", exp_num}, {"den", exp_den}}}};
}

int Compare(const PowerValue& a, const PowerValue& b) {
  if (a.coefficient == 0 || b.coefficient == 0) {
    return (a.coefficient > 0) - (b.coefficient > 0);
  }
  // Both sides are positive, so raising to the power L preserves order.
  long l = std::lcm(a.exp_den, b.exp_den);
  Rational lhs = Pow(a.coefficient, l) * Pow(a.base, a.exp_num * (l / a.exp_den));
  Rational rhs = Pow(b.coefficient, l) * Pow(b.base, b.exp_num * (l / b.exp_den));
  return cmp(lhs, rhs) < 0 ? -1 : cmp(lhs, rhs) > 0 ? 1 : 0;
}

std::string RelationSymbol(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
    case Relation::kEq: return "==";
  }
  return "?";
}

bool ConstraintLedger::Check(std::string name, std::string key, const PowerValue& lhs,
                             Relation rel, const PowerValue& rhs) {
  int c = Compare(lhs, rhs);
  bool ok = false;
  switch (rel) {
    case Relation::kLe: ok = c <= 0; break;
    case Relation::kLt: ok = c < 0; break;
    case Relation::kGe: ok = c >= 0; break;
    case Relation::kGt: ok = c > 0; break;
    case Relation::kEq: ok = c == 0; break;
  }
  entries_.push_back({std::move(name), std::move(key), lhs, rel, rhs, ok});
  return ok;
}

void ConstraintLedger::Require(std::string name, std::string key, const PowerValue& lhs,
                               Relation rel, const PowerValue& rhs) {
  if (Check(name, key, lhs, rel, rhs)) return;
  const LedgerEntry& e = entries_.back();
  throw ConstraintViolation(
      e.name, e.name + " failed: " + e.lhs.ToJson().dump() + " " + RelationSymbol(rel) + " " +
                  e.rhs.ToJson().dump() + " (\"" + e.key + "\")");
}

void ConstraintLedger::Append(const ConstraintLedger& other, const std::string& prefix) {
  for (LedgerEntry e : other.entries_) {
    e.name = prefix + e.name;
    entries_.push_back(std::move(e));
  }
}

bool ConstraintLedger::all_pass() const {
  for (const auto& e : entries_)
    if (!e.verdict) return false;
  return true;
}

std::vector<std::string> ConstraintLedger::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (!e.verdict) out.push_back(e.name);
  return out;
}

nlohmann::json ConstraintLedger::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries_) {
    out.push_back({{"name", e.name},
                   {"key", e.key},
                   {"lhs", e.lhs.ToJson()},
                   {"relation", RelationSymbol(e.relation)},
                   {"rhs", e.rhs.ToJson()},
                   {"verdict", e.verdict}});
  }
  return out;
}

}  // namespace quotlift
