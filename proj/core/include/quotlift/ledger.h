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

#ifndef QUOTLIFT_LEDGER_H_
#define QUOTLIFT_LEDGER_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/rational.h"

namespace quotlift {

// coefficient · base^(exp_num / exp_den) with coefficient ≥ 0 and base > 0.
// Proof constants such as (1−ε)^{2^{-i}} are irrational; they are kept in
// this form and compared exactly by clearing the exponent denominators.
struct PowerValue {
  Rational coefficient = 1;
  Rational base = 1;
  long exp_num = 0;
  long exp_den = 1;

  static PowerValue Of(const Rational& r);
  static PowerValue Power(const Rational& base, long num, long den = 1);
  PowerValue Times(const Rational& c) const;

  bool is_rational() const;
  // Exact value; throws PreconditionError when irrational.
  Rational AsRational() const;
  double Approx() const;
  // Rationals lo ≤ value ≤ hi with hi − lo ≤ 2^-48 (equal when rational).
  Rational LowerRational() const;
  Rational UpperRational() const;

  nlohmann::json ToJson() const;
};

// Exact three-way comparison: negative, zero or positive as a <, =, > b.
int Compare(const PowerValue& a, const PowerValue& b);

enum class Relation { kLe, kLt, kGe, kGt, kEq };
std::string RelationSymbol(Relation r);

struct LedgerEntry {
  std::string name;
  std::string key;  // the proof inequality the entry instantiates
  PowerValue lhs;
  Relation relation = Relation::kLe;
  PowerValue rhs;
  bool verdict = false;
};

// Every inequality a construction asserts, with its exact values.
class ConstraintLedger {
 public:
  // Records the entry and returns its verdict.
  bool Check(std::string name, std::string key, const PowerValue& lhs, Relation rel,
             const PowerValue& rhs);
  // As Check, but throws ConstraintViolation(name) on a false verdict.
  void Require(std::string name, std::string key, const PowerValue& lhs, Relation rel,
               const PowerValue& rhs);

  void Append(const ConstraintLedger& other, const std::string& prefix = "");

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  bool all_pass() const;
  // Names of failing entries, in order.
  std::vector<std::string> failures() const;
  nlohmann::json ToJson() const;

 private:
  std::vector<LedgerEntry> entries_;
};

}  // namespace quotlift

#endif  // QUOTLIFT_LEDGER_H_
