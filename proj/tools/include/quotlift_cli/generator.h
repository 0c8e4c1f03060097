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

#ifndef QUOTLIFT_CLI_GENERATOR_H_
#define QUOTLIFT_CLI_GENERATOR_H_

#include <cstdint>
#include <random>

#include "quotlift/instance_io.h"

namespace quotlift::cli {

// Uniform draw from [0, n) by rejection on the raw 64-bit stream, so output
// does not depend on the standard library's distributions.
uint64_t Draw(std::mt19937_64& rng, uint64_t n);

struct GenParams {
  int size = 6;   // |X|, at most 64
  int index = 2;  // upper bound on [F : E]; the first block attains it
  int gens = 2;   // number of automorphism generators
};

// E is built from blocks of `k` equal-size classes; each generator permutes
// the classes of every block (the first one cyclically) with random
// bijections between them, F = E^{∨G}, and points are relabelled at random.
Instance GenerateInstance(uint64_t seed, const GenParams& params);

}  // namespace quotlift::cli

#endif  // QUOTLIFT_CLI_GENERATOR_H_
