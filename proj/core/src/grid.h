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

#ifndef QUOTLIFT_SRC_GRID_H_
#define QUOTLIFT_SRC_GRID_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "quotlift/marked_group.h"

namespace quotlift::internal {

// A maximal stretch of a lattice set along its last coordinate.
struct Run {
  int64_t key;  // the other coordinate (0 on ℤ)
  int64_t lo;   // inclusive
  int64_t hi;   // inclusive
};

inline int DirCoord(const MarkedGroup& g) { return g.dimension() - 1; }
inline int64_t KeyOf(const MarkedGroup& g, const Elem& a) {
  return g.dimension() == 2 ? a[0] : 0;
}

inline std::vector<Run> RunsOf(const MarkedGroup& g, const ElemSet& s) {
  std::vector<Run> out;
  const int d = DirCoord(g);
  for (const Elem& a : s) {
    int64_t key = KeyOf(g, a);
    if (!out.empty() && out.back().key == key && out.back().hi + 1 == a[d]) {
      out.back().hi = a[d];
    } else {
      out.push_back({key, a[d], a[d]});
    }
  }
  return out;
}

inline Elem MakeElem(const MarkedGroup& g, int64_t key, int64_t v) {
  return g.dimension() == 2 ? Elem{key, v} : Elem{v, 0};
}

// Bitmap over a lattice bounding box, rows along the last coordinate.
class GridBitmap {
 public:
  GridBitmap(int64_t key_lo, int64_t key_hi, int64_t lo, int64_t hi)
      : key_lo_(key_lo), lo_(lo), width_(hi - lo + 1),
        words_(static_cast<size_t>(((key_hi - key_lo + 1) * width_ + 63) / 64), 0) {}

  bool InBox(int64_t key, int64_t v) const {
    return key >= key_lo_ && v >= lo_ && v < lo_ + width_ &&
           static_cast<size_t>((key - key_lo_) * width_ + (v - lo_)) < words_.size() * 64;
  }
  // Sets [a, b] in row `key`; the range must lie inside the box.
  void SetRange(int64_t key, int64_t a, int64_t b) {
    uint64_t s = Pos(key, a), e = Pos(key, b) + 1;
    while (s < e) {
      uint64_t w = s / 64, off = s % 64;
      uint64_t n = std::min<uint64_t>(64 - off, e - s);
      uint64_t mask = (n == 64 ? ~0ULL : ((1ULL << n) - 1)) << off;
      words_[w] |= mask;
      s += n;
    }
  }
  // Number of set bits in [a, b] of row `key`.
  int64_t CountRange(int64_t key, int64_t a, int64_t b) const {
    uint64_t s = Pos(key, a), e = Pos(key, b) + 1;
    int64_t total = 0;
    while (s < e) {
      uint64_t w = s / 64, off = s % 64;
      uint64_t n = std::min<uint64_t>(64 - off, e - s);
      uint64_t mask = (n == 64 ? ~0ULL : ((1ULL << n) - 1)) << off;
      total += std::popcount(words_[w] & mask);
      s += n;
    }
    return total;
  }
  bool Test(int64_t key, int64_t v) const {
    uint64_t p = Pos(key, v);
    return (words_[p / 64] >> (p % 64)) & 1;
  }
  int64_t Count() const {
    int64_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
  }

 private:
  uint64_t Pos(int64_t key, int64_t v) const {
    return static_cast<uint64_t>((key - key_lo_) * width_ + (v - lo_));
  }
  int64_t key_lo_, lo_, width_;
  std::vector<uint64_t> words_;
};

}  // namespace quotlift::internal

#endif  // QUOTLIFT_SRC_GRID_H_
