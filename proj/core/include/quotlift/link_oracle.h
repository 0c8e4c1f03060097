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

#ifndef QUOTLIFT_LINK_ORACLE_H_
#define QUOTLIFT_LINK_ORACLE_H_

#include <cstdint>
#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift {

// Every (E, F)-link, found by running through all set partitions of every
// F-class and keeping those whose blocks meet each E-class once. F-classes
// are limited to 10 points. Links come out sorted by label vector.
std::vector<FinEqrel> EnumerateLinks(const FinEqrel& e, const FinEqrel& f);

// Number of (E, F)-links from the product over F-classes of (b!)^(a−1),
// where the class holds a E-classes of size b; 0 if sizes differ.
uint64_t CountLinks(const FinEqrel& e, const FinEqrel& f);

// A pair E ⊆ F on a small space together with, when E-class sizes agree in
// every F-class, an automorphism witnessing E ◁ F.
struct OracleInstance {
  FinEqrel e;
  FinEqrel f;
  bool has_witness = false;
  std::vector<Perm> witness;
};

// All pairs with |X| ≤ max_size up to relabelling: E has consecutive blocks
// of non-increasing size, F is a set partition of the blocks, and F's that
// differ only by swapping equal-size blocks are listed once.
std::vector<OracleInstance> ExhaustiveOracleInstances(int max_size);

}  // namespace quotlift

#endif  // QUOTLIFT_LINK_ORACLE_H_
