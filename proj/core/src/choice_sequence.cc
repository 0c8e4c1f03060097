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

#include "quotlift/choice_sequence.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

constexpr int64_t kSearchCap = int64_t{1} << 52;

// Largest s with s(s+1)/2 ≤ u, for u ≥ 0.
int64_t TriangularRoot(int64_t u) {
  auto s = static_cast<int64_t>((std::sqrt(8.0L * u + 1) - 1) / 2);
  while (s > 0 && s * (s + 1) / 2 > u) --s;
  while ((s + 1) * (s + 2) / 2 <= u) ++s;
  return s;
}

std::string PointString(LazyPoint p) {
  return "(" + std::to_string(p.base) + ", " + std::to_string(p.index) + ")";
}

}  // namespace

int64_t CantorPair(int64_t a, int64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

std::pair<int64_t, int64_t> CantorUnpair(int64_t z) {
  int64_t w = TriangularRoot(z);
  int64_t b = z - w * (w + 1) / 2;
  return {w - b, b};
}

bool WindowedLinkReport::ok() const {
  if (violations != 0 || verified_exact == 0) return false;
  return std::all_of(stages.begin(), stages.end(), [](const StageCheck& s) { return s.ok; });
}

ChoiceSequenceLink::ChoiceSequenceLink(FinEqrel e, FinEqrel f, int64_t depth)
    : e_(e), f_(f), space_(std::move(e), std::move(f), depth) {
  const int n = e_.size();
  n_maps_.resize(n);
  pos_in_f_.resize(n);
  pos_in_e_.resize(n);
  choice_.resize(n);
  step_.resize(n);
  for (const auto& cls : f_.classes())
    for (size_t i = 0; i < cls.size(); ++i) pos_in_f_[cls[i]] = static_cast<int>(i);
  for (const auto& cls : e_.classes())
    for (size_t i = 0; i < cls.size(); ++i) pos_in_e_[cls[i]] = static_cast<int>(i);
  for (int x = 0; x < n; ++x) {
    const int m = static_cast<int>(f_.class_members(f_.class_of(x)).size());
    std::set<int> used;
    for (int t = 0; t < m; ++t) {
      int y = Rotate(x, t);
      if (used.insert(e_.class_of(y)).second) {
        choice_[x].push_back(y);
        step_[x].push_back(t);
      }
    }
    n_maps_[x] = static_cast<int>(choice_[x].size());
  }
}

int ChoiceSequenceLink::MaxMaps() const { return *std::max_element(n_maps_.begin(), n_maps_.end()); }

int ChoiceSequenceLink::Rotate(int x, int64_t t) const {
  const auto& members = f_.class_members(f_.class_of(x));
  const int64_t m = static_cast<int64_t>(members.size());
  return members[static_cast<size_t>(((pos_in_f_[x] + t) % m + m) % m)];
}

LazyPoint ChoiceSequenceLink::Injective(int i, LazyPoint p) const {
  return {choice_[p.base][i], CantorPair(p.index, step_[p.base][i])};
}

std::optional<LazyPoint> ChoiceSequenceLink::InjectivePreimage(int i, LazyPoint q) const {
  if (i >= n_maps_[q.base]) return std::nullopt;
  auto [n, t] = CantorUnpair(q.index);
  if (t >= static_cast<int64_t>(f_.class_members(f_.class_of(q.base)).size())) return std::nullopt;
  int x = Rotate(q.base, -t);
  if (choice_[x][i] != q.base || step_[x][i] != t) return std::nullopt;
  return LazyPoint{x, n};
}

LazyPoint ChoiceSequenceLink::Section(int i, LazyPoint p) const {
  const int64_t big_n = n_maps_[p.base];
  const int64_t k = p.index % big_n;
  const int j = static_cast<int>((i + k) % big_n);
  LazyPoint q = Injective(j, {p.base, p.index / big_n});
  return {q.base, q.index * big_n + k};
}

std::optional<LazyPoint> ChoiceSequenceLink::SectionPreimage(int i, LazyPoint q) const {
  const int64_t big_n = n_maps_[q.base];
  const int64_t k = q.index % big_n;
  const int j = static_cast<int>((i + k) % big_n);
  auto pre = InjectivePreimage(j, {q.base, q.index / big_n});
  if (!pre) return std::nullopt;
  return LazyPoint{pre->base, pre->index * big_n + k};
}

bool ChoiceSequenceLink::InSectionImage(int i, LazyPoint q) const {
  return SectionPreimage(i, q).has_value();
}

int64_t ChoiceSequenceLink::CountImageBelow(int i, int e_class, int64_t bound) const {
  const int rep = e_.class_members(e_class).front();
  const int64_t big_n = n_maps_[rep];
  int64_t total = 0;
  for (int64_t k = 0; k < big_n && k < bound; ++k) {
    const int j = static_cast<int>((i + k) % big_n);
    const int64_t lim = (bound - 1 - k) / big_n;
    for (int x : f_.class_members(f_.class_of(rep))) {
      if (e_.class_of(choice_[x][j]) != e_class) continue;
      // n with ⟨n, t⟩ ≤ lim.
      const int64_t t = step_[x][j];
      if (lim - t < 0) continue;
      const int64_t s = TriangularRoot(lim - t);
      if (s >= t) total += s - t + 1;
    }
  }
  return total;
}

int64_t ChoiceSequenceLink::RankInImage(int i, LazyPoint q) const {
  const int d = e_.class_of(q.base);
  int64_t rank = CountImageBelow(i, d, q.index);
  for (int y : e_.class_members(d)) {
    if (y >= q.base) break;
    if (InSectionImage(i, {y, q.index})) ++rank;
  }
  return rank;
}

LazyPoint ChoiceSequenceLink::KthImage(int i, int e_class, int64_t r) const {
  int64_t hi = 1;
  while (CountImageBelow(i, e_class, hi) < r + 1) {
    hi *= 2;
    if (hi > kSearchCap) {
      throw WindowError("image enumeration ran past the search cap; increase depth");
    }
  }
  int64_t lo = 1;
  while (lo < hi) {
    int64_t mid = lo + (hi - lo) / 2;
    if (CountImageBelow(i, e_class, mid) >= r + 1) hi = mid;
    else lo = mid + 1;
  }
  const int64_t index = lo - 1;
  int64_t need = r - CountImageBelow(i, e_class, index);
  for (int y : e_.class_members(e_class)) {
    if (!InSectionImage(i, {y, index})) continue;
    if (need-- == 0) return {y, index};
  }
  throw ConstraintViolation("order-isomorphism", "image rank lookup failed");
}

LazyPoint ChoiceSequenceLink::Bijective(int i, LazyPoint p) const {
  LazyPoint q = Section(i, p);
  const int d = e_.class_of(q.base);
  const auto& members = e_.class_members(d);
  const int64_t s = static_cast<int64_t>(members.size());
  int64_t rank = RankInImage(i, q);
  return {members[static_cast<size_t>(rank % s)], rank / s};
}

LazyPoint ChoiceSequenceLink::BijectiveInverse(int i, LazyPoint q) const {
  const int d = e_.class_of(q.base);
  const int64_t s = static_cast<int64_t>(e_.class_members(d).size());
  LazyPoint image = KthImage(i, d, q.index * s + pos_in_e_[q.base]);
  auto pre = SectionPreimage(i, image);
  if (!pre) throw ConstraintViolation("order-isomorphism", "image point has no preimage");
  return *pre;
}

LazyPoint ChoiceSequenceLink::LinkLabel(LazyPoint q) const {
  const int64_t big_n = n_maps_[q.base];
  return BijectiveInverse(static_cast<int>(q.index % big_n), {q.base, q.index / big_n});
}

std::vector<LazyPoint> ChoiceSequenceLink::LinkClass(LazyPoint r) const {
  const int big_n = n_maps_[r.base];
  std::vector<LazyPoint> out;
  for (int i = 0; i < big_n; ++i) {
    LazyPoint b = Bijective(i, r);
    out.push_back({b.base, b.index * big_n + i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

WindowedLinkReport ChoiceSequenceLink::Verify() const {
  WindowedLinkReport report;
  const int n = e_.size();
  const int64_t depth = space_.depth();
  const std::vector<LazyPoint> window = space_.WindowPoints();
  auto fail = [&](StageCheck& s, const std::string& what) {
    if (s.ok) s.detail = what;
    s.ok = false;
  };

  StageCheck choice{"choice", true, 0, ""};
  for (int x = 0; x < n; ++x) {
    std::set<int> got, want;
    for (int i = 0; i < n_maps_[x]; ++i) got.insert(e_.class_of(choice_[x][i]));
    for (int y : f_.class_members(f_.class_of(x))) want.insert(e_.class_of(y));
    if (got != want || static_cast<int>(got.size()) != n_maps_[x]) {
      fail(choice, "choice at base point " + std::to_string(x) + " misses a class");
    }
    if (choice_[x][0] != x) fail(choice, "f_0 is not the identity at " + std::to_string(x));
    ++choice.checked;
  }
  report.stages.push_back(choice);

  StageCheck injective{"injective", true, 0, ""};
  StageCheck section{"complete-section", true, 0, ""};
  for (int i = 0; i < MaxMaps(); ++i) {
    std::set<LazyPoint> seen_inj, seen_sec;
    std::set<int> hit;
    for (LazyPoint p : window) {
      if (i >= n_maps_[p.base]) continue;
      LazyPoint q = Injective(i, p);
      if (!seen_inj.insert(q).second || InjectivePreimage(i, q) != p) {
        fail(injective, "stage-1 map " + std::to_string(i) + " collides at " + PointString(p));
      }
      LazyPoint r = Section(i, p);
      if (!seen_sec.insert(r).second || SectionPreimage(i, r) != p) {
        fail(section, "stage-2 map " + std::to_string(i) + " collides at " + PointString(p));
      }
      if (!e_.Related(r.base, choice_[p.base][(i + p.index % n_maps_[p.base]) % n_maps_[p.base]])) {
        fail(section, "stage-2 map leaves the chosen class at " + PointString(p));
      }
      hit.insert(e_.class_of(r.base));
      ++injective.checked;
      ++section.checked;
    }
    for (int d = 0; d < e_.num_classes(); ++d) {
      if (i < n_maps_[e_.class_members(d).front()] && !hit.count(d)) {
        fail(section, "image of map " + std::to_string(i) + " misses E-class " +
                          std::to_string(d) + " inside the window");
      }
    }
  }
  report.stages.push_back(injective);
  report.stages.push_back(section);

  StageCheck compressible{"compressible-image", true, 0, ""};
  for (int d = 0; d < e_.num_classes(); ++d) {
    for (int i = 0; i < n_maps_[e_.class_members(d).front()]; ++i) {
      if (CountImageBelow(i, d, depth) >= CountImageBelow(i, d, 4 * depth)) {
        fail(compressible, "image of map " + std::to_string(i) + " stops growing in E-class " +
                               std::to_string(d));
      }
      ++compressible.checked;
    }
  }
  report.stages.push_back(compressible);

  StageCheck bijective{"bijective", true, 0, ""};
  for (LazyPoint p : window) {
    for (int i = 0; i < n_maps_[p.base]; ++i) {
      LazyPoint b = Bijective(i, p);
      if (BijectiveInverse(i, b) != p || !e_.Related(b.base, Section(i, p).base)) {
        fail(bijective, "stage-4 map " + std::to_string(i) + " fails at " + PointString(p));
      }
      if (Bijective(i, BijectiveInverse(i, p)) != p) {
        fail(bijective, "stage-4 map " + std::to_string(i) + " misses " + PointString(p));
      }
      ++bijective.checked;
    }
  }
  report.stages.push_back(bijective);

  std::map<LazyPoint, std::vector<LazyPoint>> by_label;
  for (LazyPoint q : window) by_label[LinkLabel(q)].push_back(q);
  auto note = [&](const std::string& s) {
    ++report.violations;
    if (report.notes.size() < 8) report.notes.push_back(s);
  };
  for (auto& [label, seen] : by_label) {
    std::vector<LazyPoint> cls = LinkClass(label);
    std::sort(seen.begin(), seen.end());
    std::set<int> classes_hit;
    for (LazyPoint q : cls) classes_hit.insert(e_.class_of(q.base));
    const int want = n_maps_[label.base];
    bool distinct = static_cast<int>(classes_hit.size()) == want;
    bool inside_f = std::all_of(cls.begin(), cls.end(),
                                [&](LazyPoint q) { return f_.Related(q.base, label.base); });
    if (!distinct || !inside_f) {
      note("L-class of " + PointString(label) + " does not meet each E-class once");
      continue;
    }
    bool all_in = std::all_of(cls.begin(), cls.end(),
                              [&](LazyPoint q) { return space_.InWindow(q); });
    if (all_in) {
      if (cls != seen) note("L-class of " + PointString(label) + " disagrees with its labels");
      else ++report.verified_exact;
    } else {
      if (!std::includes(cls.begin(), cls.end(), seen.begin(), seen.end())) {
        note("truncated L-class of " + PointString(label) + " disagrees with its labels");
      } else {
        ++report.consistent_so_far;
      }
    }
  }
  if (report.verified_exact == 0 && report.violations == 0) {
    throw WindowError("no L-class fits in a window of depth " + std::to_string(depth) +
                      "; increase depth");
  }
  return report;
}

}  // namespace quotlift
