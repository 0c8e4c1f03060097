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

#include "quotlift/link_oracle.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

constexpr int kMaxOracleClass = 10;
constexpr size_t kMaxOracleLinks = 1000000;

// Calls visit(rgs, blocks) for every restricted growth string of length m.
void ForEachSetPartition(int m, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> rgs(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      visit(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks && b < m; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0) {
    visit(rgs, 0);
    return;
  }
  rec(0, 0);
}

}  // namespace

std::vector<FinEqrel> EnumerateLinks(const FinEqrel& e, const FinEqrel& f) {
  if (e.size() != f.size()) throw InputError("link oracle: spaces differ");
  if (!e.IsSubrelationOf(f)) throw PreconditionError("link oracle: E is not contained in F");
  // Per F-class, every valid block assignment of its members.
  std::vector<std::vector<std::vector<int>>> per_class;
  for (const auto& cls : f.classes()) {
    const int m = static_cast<int>(cls.size());
    if (m > kMaxOracleClass) {
      throw InputError("link oracle: F-class of size " + std::to_string(m) + " exceeds " +
                       std::to_string(kMaxOracleClass));
    }
    std::vector<int> e_ids;
    for (int x : cls) e_ids.push_back(e.class_of(x));
    std::vector<int> distinct = e_ids;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::vector<int>> valid;
    ForEachSetPartition(m, [&](const std::vector<int>& rgs, int blocks) {
      // Block b must hit every E-class in the F-class exactly once.
      std::set<std::pair<int, int>> hits;
      for (int i = 0; i < m; ++i)
        if (!hits.insert({rgs[i], e_ids[i]}).second) return;
      if (hits.size() != static_cast<size_t>(blocks) * distinct.size()) return;
      valid.push_back(rgs);
    });
    if (valid.empty()) return {};
    per_class.push_back(std::move(valid));
  }
  size_t total = 1;
  for (const auto& v : per_class) {
    total *= v.size();
    if (total > kMaxOracleLinks) throw InputError("link oracle: too many links to enumerate");
  }
  std::vector<FinEqrel> out;
  std::vector<size_t> pick(per_class.size(), 0);
  std::vector<int> label(e.size());
  while (true) {
    for (size_t c = 0; c < per_class.size(); ++c) {
      const auto& members = f.class_members(static_cast<int>(c));
      const auto& rgs = per_class[c][pick[c]];
      for (size_t i = 0; i < members.size(); ++i)
        label[members[i]] = static_cast<int>(c) * e.size() + rgs[i];
    }
    out.push_back(FinEqrel::FromLabels(label));
    size_t c = 0;
    while (c < per_class.size() && ++pick[c] == per_class[c].size()) pick[c++] = 0;
    if (c == per_class.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const FinEqrel& a, const FinEqrel& b) { return a.labels() < b.labels(); });
  return out;
}

uint64_t CountLinks(const FinEqrel& e, const FinEqrel& f) {
  if (!e.IsSubrelationOf(f)) throw PreconditionError("link count: E is not contained in F");
  std::vector<int> size_in(f.num_classes(), -1);
  std::vector<int> count_in(f.num_classes(), 0);
  for (const auto& cls : e.classes()) {
    int fc = f.class_of(cls.front());
    int b = static_cast<int>(cls.size());
    if (size_in[fc] >= 0 && size_in[fc] != b) return 0;
    size_in[fc] = b;
    ++count_in[fc];
  }
  uint64_t total = 1;
  for (int fc = 0; fc < f.num_classes(); ++fc) {
    uint64_t fact = 1;
    for (int k = 2; k <= size_in[fc]; ++k) fact *= static_cast<uint64_t>(k);
    for (int i = 1; i < count_in[fc]; ++i) total *= fact;
  }
  return total;
}

namespace {

void IntegerPartitions(int n, int max_part, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    IntegerPartitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OracleInstance> ExhaustiveOracleInstances(int max_size) {
  if (max_size < 1 || max_size > kMaxOracleClass) {
    throw InputError("oracle instances need 1 ≤ size ≤ " + std::to_string(kMaxOracleClass));
  }
  std::vector<OracleInstance> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    IntegerPartitions(n, n, cur, parts);
    for (const auto& sizes : parts) {
      const int k = static_cast<int>(sizes.size());
      std::vector<int> e_label(n);
      std::vector<int> start(k);
      for (int c = 0, pos = 0; c < k; ++c) {
        start[c] = pos;
        for (int i = 0; i < sizes[c]; ++i) e_label[pos++] = c;
      }
      FinEqrel e = FinEqrel::FromLabels(e_label);
      std::set<std::vector<std::vector<int>>> seen;
      ForEachSetPartition(k, [&](const std::vector<int>& rgs, int blocks) {
        std::vector<std::vector<int>> shape(blocks);
        for (int c = 0; c < k; ++c) shape[rgs[c]].push_back(sizes[c]);
        for (auto& s : shape) std::sort(s.begin(), s.end());
        std::sort(shape.begin(), shape.end());
        if (!seen.insert(shape).second) return;

        std::vector<int> f_label(n);
        for (int x = 0; x < n; ++x) f_label[x] = rgs[e_label[x]];
        OracleInstance inst{e, FinEqrel::FromLabels(f_label), true, {}};
        Perm cycle = IdentityPerm(n);
        bool moves = false;
        for (int b = 0; b < blocks; ++b) {
          std::vector<int> members;
          for (int c = 0; c < k; ++c)
            if (rgs[c] == b) members.push_back(c);
          for (int c : members) {
            if (sizes[c] != sizes[members.front()]) inst.has_witness = false;
          }
          if (!inst.has_witness || members.size() < 2) continue;
          for (size_t i = 0; i < members.size(); ++i) {
            int from = members[i];
            int to = members[(i + 1) % members.size()];
            for (int j = 0; j < sizes[from]; ++j) cycle[start[from] + j] = start[to] + j;
          }
          moves = true;
        }
        if (inst.has_witness && moves) inst.witness.push_back(cycle);
        out.push_back(std::move(inst));
      });
    }
  }
  return out;
}

}  // namespace quotlift
