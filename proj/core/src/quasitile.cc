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

#include "quotlift/quasitile.h"

#include <algorithm>
#include <map>

#include "grid.h"
#include "quotlift/errors.h"

namespace quotlift {
namespace {

using internal::GridBitmap;
using internal::Run;

Rational Ratio(int64_t num, int64_t den) {
  if (den == 0) return 0;
  return MakeRational(num, den);
}

PowerValue Of(const Rational& r) { return PowerValue::Of(r); }

void RequireIdentity(const MarkedGroup& g, const ElemSet& b, const std::string& what) {
  if (!ContainsElem(b, g.Identity())) {
    throw PreconditionError(what + " must contain the identity");
  }
}

std::vector<Run> IntersectRuns(const std::vector<Run>& a, const std::vector<Run>& b) {
  std::vector<Run> out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].key != b[j].key) {
      (a[i].key < b[j].key ? i : j)++;
      continue;
    }
    int64_t lo = std::max(a[i].lo, b[j].lo), hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({a[i].key, lo, hi});
    (a[i].hi < b[j].hi ? i : j)++;
  }
  return out;
}

ElemSet LatticeTSet(const MarkedGroup& g, const ElemSet& a, const ElemSet& b) {
  std::vector<Run> ra = internal::RunsOf(g, a);
  std::vector<Run> t;
  bool first = true;
  for (const Run& rb : internal::RunsOf(g, b)) {
    // x + b ∈ A for every b in the run: an erosion of each A-run.
    std::vector<Run> cur;
    for (const Run& r : ra) {
      if (r.lo - rb.lo <= r.hi - rb.hi) cur.push_back({r.key - rb.key, r.lo - rb.lo, r.hi - rb.hi});
    }
    t = first ? std::move(cur) : IntersectRuns(t, cur);
    first = false;
  }
  ElemSet out;
  for (const Run& r : t)
    for (int64_t v = r.lo; v <= r.hi; ++v) out.push_back(internal::MakeElem(g, r.key, v));
  return out;
}

// Bounding box of a lattice set in run coordinates.
struct RunBox {
  int64_t klo = 0, khi = -1, vlo = 0, vhi = -1;
};

RunBox BoxOf(const std::vector<Run>& runs) {
  RunBox box;
  if (runs.empty()) return box;
  box = {runs.front().key, runs.back().key, runs.front().lo, runs.front().hi};
  for (const Run& r : runs) {
    box.vlo = std::min(box.vlo, r.lo);
    box.vhi = std::max(box.vhi, r.hi);
  }
  return box;
}

// Candidate order: the identity first when it lies in A, then A in canonical
// order. Only c ∈ A can satisfy Bc ⊆ A because 1 ∈ B.
std::vector<Elem> CandidateOrder(const MarkedGroup& g, const ElemSet& a) {
  std::vector<Elem> out;
  out.reserve(a.size());
  Elem id = g.Identity();
  bool has_id = ContainsElem(a, id);
  if (has_id) out.push_back(id);
  for (const Elem& c : a)
    if (!has_id || c != id) out.push_back(c);
  return out;
}

TranslateFamily LatticeGreedy(const MarkedGroup& g, const ElemSet& a, const ElemSet& b,
                              int64_t limit) {
  TranslateFamily fam;
  std::vector<Run> ra = internal::RunsOf(g, a);
  std::vector<Run> rb = internal::RunsOf(g, b);
  RunBox box = BoxOf(ra);
  GridBitmap in_a(box.klo, box.khi, box.vlo, box.vhi);
  GridBitmap cov(box.klo, box.khi, box.vlo, box.vhi);
  for (const Run& r : ra) in_a.SetRange(r.key, r.lo, r.hi);
  const int d = internal::DirCoord(g);
  int64_t covered = 0;
  for (const Elem& c : CandidateOrder(g, a)) {
    const int64_t kc = internal::KeyOf(g, c), vc = c[d];
    bool inside = true;
    for (const Run& r : rb) {
      int64_t key = r.key + kc, lo = r.lo + vc, hi = r.hi + vc;
      if (key < box.klo || key > box.khi || lo < box.vlo || hi > box.vhi ||
          in_a.CountRange(key, lo, hi) != hi - lo + 1) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    int64_t overlap = 0;
    for (const Run& r : rb) {
      overlap += cov.CountRange(r.key + kc, r.lo + vc, r.hi + vc);
      if (overlap > limit) break;
    }
    if (overlap > limit) continue;
    ElemSet witness;
    witness.reserve(b.size() - overlap);
    for (const Elem& x : b) {
      if (!cov.Test(internal::KeyOf(g, x) + kc, x[d] + vc)) witness.push_back(x);
    }
    for (const Run& r : rb) cov.SetRange(r.key + kc, r.lo + vc, r.hi + vc);
    covered += static_cast<int64_t>(b.size()) - overlap;
    fam.centers.push_back(c);
    fam.witnesses.push_back(std::move(witness));
    fam.covered_after.push_back(covered);
  }
  return fam;
}

TranslateFamily GenericGreedy(const MarkedGroup& g, const ElemSet& a, const ElemSet& b,
                              int64_t limit) {
  TranslateFamily fam;
  SetIndex index(a);
  std::vector<char> cov(a.size(), 0);
  std::vector<int64_t> pos(b.size());
  int64_t covered = 0;
  for (const Elem& c : CandidateOrder(g, a)) {
    bool inside = true;
    for (size_t j = 0; j < b.size() && inside; ++j) {
      pos[j] = index.Find(g.Mul(b[j], c));
      inside = pos[j] >= 0;
    }
    if (!inside) continue;
    int64_t overlap = 0;
    for (size_t j = 0; j < b.size() && overlap <= limit; ++j) overlap += cov[pos[j]];
    if (overlap > limit) continue;
    ElemSet witness;
    for (size_t j = 0; j < b.size(); ++j)
      if (!cov[pos[j]]) witness.push_back(b[j]);
    for (size_t j = 0; j < b.size(); ++j) cov[pos[j]] = 1;
    covered += static_cast<int64_t>(b.size()) - overlap;
    fam.centers.push_back(c);
    fam.witnesses.push_back(std::move(witness));
    fam.covered_after.push_back(covered);
  }
  return fam;
}

// whole + sign·2^{-j} as an exponent fraction.
std::pair<long, long> DyadicExponent(long whole, int sign, int j) {
  if (j <= 0) return {whole + sign * (1L << -j), 1};
  long den = 1L << j;
  return {whole * den + sign, den};
}

PowerValue PowerOf(const Rational& base, std::pair<long, long> e) {
  return PowerValue::Power(base, e.first, e.second);
}

// Largest m ≤ n with pred(m), assuming pred is monotone decreasing and
// pred(0) holds.
template <typename Pred>
size_t LargestPrefix(size_t n, Pred pred) {
  size_t lo = 0, hi = n;
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int64_t CoveredPrefix(const TranslateFamily& f, size_t m) {
  return m == 0 ? 0 : f.covered_after[m - 1];
}

std::string Idx(const std::string& name, size_t i) { return name + "-" + std::to_string(i); }

}  // namespace

ElemSet TSet(const MarkedGroup& g, const ElemSet& a, const ElemSet& b) {
  RequireIdentity(g, b, "B");
  if (a.empty()) return {};
  if (g.is_lattice()) return LatticeTSet(g, a, b);
  SetIndex index(a);
  ElemSet out;
  for (const Elem& x : a) {
    bool ok = true;
    for (const Elem& y : b) {
      if (!index.Contains(g.Mul(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Rational InvarianceDefect(const MarkedGroup& g, const ElemSet& a, const ElemSet& b) {
  if (a.empty()) {
    RequireIdentity(g, b, "B");
    return 0;
  }
  int64_t t = static_cast<int64_t>(TSet(g, a, b).size());
  return 1 - Ratio(t, static_cast<int64_t>(a.size()));
}

bool IsInvariant(const MarkedGroup& g, const ElemSet& a, const ElemSet& b, const Rational& eps) {
  if (InvarianceDefect(g, a, b) > eps) return false;
  Rational ba(static_cast<long>(ProductSet(g, b, a).size()));
  Rational bound = (1 + eps * static_cast<long>(b.size())) * static_cast<long>(a.size());
  if (ba > bound) {
    throw ConstraintViolation("product-bound", "|BA| = " + ToString(ba) + " exceeds (1 + ε|B|)|A| = " +
                                                   ToString(bound));
  }
  return true;
}

TranslateFamily GreedyDisjointTranslates(const MarkedGroup& g, const ElemSet& a,
                                         const ElemSet& b, const Rational& eps,
                                         const Rational& delta, ConstraintLedger* ledger) {
  if (eps < 0 || eps >= 1) throw InputError("greedy translates need 0 ≤ ε < 1, got " + ToString(eps));
  if (delta < 0 || delta >= 1) throw InputError("greedy translates need 0 ≤ δ < 1");
  RequireIdentity(g, b, "B");
  ConstraintLedger local;
  ConstraintLedger& led = ledger ? *ledger : local;
  Rational measured = InvarianceDefect(g, a, b);
  if (!led.Check("invariance-precondition", "A is (B, δ)-invariant", Of(measured), Relation::kLe,
                 Of(delta))) {
    throw PreconditionError("A is not (B, δ)-invariant: measured defect " + ToString(measured) +
                            " > δ = " + ToString(delta));
  }
  const int64_t na = static_cast<int64_t>(a.size()), nb = static_cast<int64_t>(b.size());
  int64_t ba = static_cast<int64_t>(ProductSet(g, b, a).size());
  led.Require("product-bound", "|B A| ≤ (1 + ε |B|)|A|", Of(Rational(ba)), Relation::kLe,
              Of((1 + delta * nb) * na));
  Rational limit_q = eps * nb;
  int64_t limit = mpz_class(limit_q.get_num() / limit_q.get_den()).get_si();
  TranslateFamily fam = g.is_lattice() ? LatticeGreedy(g, a, b, limit)
                                       : GenericGreedy(g, a, b, limit);
  led.Require("covering-lemma", "ε(1 − δ)-covers A", Of(Rational(fam.covered())), Relation::kGe,
              Of(eps * (1 - delta) * na));
  return fam;
}

Rational QuasiTilingConstants::p_total() const {
  Rational s = 0;
  for (const auto& x : p) s += x;
  return s;
}

QuasiTilingConstants ComputeConstants(const Rational& eps) {
  if (eps <= 0 || eps * 2 >= 1) {
    throw InputError("quasi-tiling constants need 0 < ε < 1/2, got " + ToString(eps));
  }
  QuasiTilingConstants c;
  c.eps = eps;
  Rational power = 1;
  while (2 * eps < power) {
    power *= 1 - eps;
    if (++c.k > 100000) throw InputError("k exceeds 100000 for ε = " + ToString(eps));
  }
  Rational pi = eps;
  for (int i = 0; i < c.k; ++i) {
    c.p.push_back(pi);
    pi *= 1 - eps;
  }
  for (int i = 0; i + 1 < c.k; ++i) c.eta.push_back((1 - 2 * eps) / (2 * Pow(Rational(3), c.k - i)));
  c.delta = 1 / Pow(Rational(3), c.k);
  return c;
}

Rational WorkingEpsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InputError("ε must lie in (0, 1), got " + ToString(eps));
  for (long m = 4; m <= 10000000; ++m) {
    Rational e = MakeRational(1, m);
    Rational s = 1 - 2 * e;
    if (2 * e < eps && 1 - s * s * s < eps) return e;
  }
  throw InputError("no working ε found for ε = " + ToString(eps));
}

QuasiTileResult QuasiTile(const MarkedGroup& g, const ElemSet& a,
                          const std::vector<ElemSet>& chain, const Rational& eps,
                          std::optional<Rational> eps_bar) {
  QuasiTileResult out;
  ConstraintLedger& led = out.ledger;
  const Rational eb = eps_bar ? *eps_bar : WorkingEpsilon(eps);
  const Rational one_minus = 1 - eb;
  out.outer_eps = eps;
  led.Require("outer-disjointness", "ε is greater than 2ε̄", Of(eps), Relation::kGt, Of(2 * eb));
  Rational s = 1 - 2 * eb;
  led.Require("outer-covering", "ε is greater than 1 − (1 − 2ε̄)^3", Of(eps), Relation::kGt,
              Of(1 - s * s * s));
  led.Require("small-epsilon", "(1 − ε)^2 ≥ 1/2", Of(one_minus * one_minus), Relation::kGe,
              Of(MakeRational(1, 2)));
  out.constants = ComputeConstants(eb);
  const QuasiTilingConstants& c = out.constants;
  const int k = c.k;
  if (static_cast<int>(chain.size()) != k) {
    throw PreconditionError("the chain must have k = " + std::to_string(k) + " shapes at ε̄ = " +
                            ToString(eb) + ", got " + std::to_string(chain.size()));
  }
  for (int i = 0; i < k; ++i) {
    RequireIdentity(g, chain[i], "B_" + std::to_string(i));
    if (i > 0 && !IsSubset(chain[i], chain[i - 1])) {
      throw PreconditionError("the chain is not descending at B_" + std::to_string(i));
    }
  }
  for (int i = 0; i + 1 < k; ++i) {
    const Rational nb(static_cast<long>(chain[i + 1].size()));
    led.Require(Idx("chain-invariance", i),
                "each B_i is (B_{i+1}^{-1}, η_i/|B_{i+1}|)-invariant",
                Of(InvarianceDefect(g, chain[i], InverseSet(g, chain[i + 1]))), Relation::kLe,
                Of(c.eta[i] / nb));
  }
  RequireIdentity(g, a, "A");
  const int64_t na = static_cast<int64_t>(a.size());
  for (int i = 0; i < k; ++i) {
    if (!IsSubset(chain[i], a)) {
      throw PreconditionError("A must contain B_" + std::to_string(i));
    }
    led.Require(Idx("A-invariance", i), "(B, δ)-invariant for every B ∈ 𝒜 (δ ≤ 1/3^k)",
                Of(InvarianceDefect(g, a, chain[i])), Relation::kLe, Of(c.delta));
    IsInvariant(g, a, chain[i], c.delta);
  }
  led.Require("A-size", "A ∈ Fin_1(G) larger than 1/δ", Of(Rational(na)), Relation::kGt,
              Of(1 / c.delta));

  ElemSet ai = a;
  std::vector<TranslateFamily> fams(k);
  std::vector<size_t> kept(k, 0);
  for (int i = 0; i < k; ++i) {
    TilingStage st;
    const int64_t nai = static_cast<int64_t>(ai.size());
    const Rational nbi(static_cast<long>(chain[i].size()));
    st.a_size = nai;
    const Rational di = 1 / Pow(Rational(3), k - i);
    led.Require(Idx("iii-invariance", i), "A_i is (B_i, 1/3^{k − i})-invariant",
                Of(InvarianceDefect(g, ai, chain[i])), Relation::kLe, Of(di));
    const Rational ai_ratio = Ratio(nai, na);
    led.Require(Idx("v-lower", i), "(1 − ε)^{i + 2 − 2^{−i + 1}} ≤ |A_i|/|A|",
                PowerOf(one_minus, DyadicExponent(i + 2, -1, i - 1)), Relation::kLe, Of(ai_ratio));
    led.Require(Idx("v-upper", i), "|A_i|/|A| ≤ (1 − ε)^{i − 2 + 2^{−i + 1}}", Of(ai_ratio),
                Relation::kLe, PowerOf(one_minus, DyadicExponent(i - 2, 1, i - 1)));

    ConstraintLedger greedy_led;
    fams[i] = GreedyDisjointTranslates(g, ai, chain[i], 2 * eb, di, &greedy_led);
    led.Append(greedy_led, "stage-" + std::to_string(i) + "/");
    const TranslateFamily& fam = fams[i];
    st.greedy_centers = static_cast<int64_t>(fam.centers.size());

    // Trim C̃_i from the end until |B_iC_i|/|A_i| enters the stage interval.
    const PowerValue upper_eps = PowerOf(one_minus, DyadicExponent(0, -1, i)).Times(eb);
    const PowerValue lower_eps = PowerOf(one_minus, DyadicExponent(0, 1, i)).Times(eb);
    const PowerValue keep_lo = PowerOf(one_minus, DyadicExponent(1, 1, i));
    const PowerValue keep_hi = PowerOf(one_minus, DyadicExponent(1, -1, i));
    auto fits_upper = [&](size_t m) {
      Rational r = Ratio(CoveredPrefix(fam, m), nai);
      return Compare(Of(r), upper_eps) <= 0 && Compare(Of(1 - r), keep_lo) >= 0;
    };
    kept[i] = LargestPrefix(fam.centers.size(), fits_upper);
    const Rational r = Ratio(CoveredPrefix(fam, kept[i]), nai);
    st.centers = static_cast<int64_t>(kept[i]);
    st.ratio_to_ai = r;
    led.Require(Idx("trim-upper", i), "|B_i C_i|/|A_i| ≤ ε (1 − ε)^{−2^{−i}}", Of(r), Relation::kLe,
                upper_eps);
    led.Require(Idx("trim-lower", i), "ε (1 − ε)^{2^{−i}} ≤ |B_i C_i|/|A_i|", lower_eps,
                Relation::kLe, Of(r));
    led.Require(Idx("trim-complement-lower", i), "(1 − ε)^{1 + 2^{−i}} ≤ |A_{i+1}|/|A_i|",
                keep_lo, Relation::kLe, Of(1 - r));
    led.Require(Idx("trim-complement-upper", i), "|A_{i+1}|/|A_i| ≤ (1 − ε)^{1 − 2^{−i}}",
                Of(1 - r), Relation::kLe, keep_hi);
    Rational len = std::min<Rational>(upper_eps.LowerRational(), 1 - keep_lo.UpperRational()) -
                   std::max<Rational>(lower_eps.UpperRational(), 1 - keep_hi.LowerRational());
    led.Check(Idx("stage-interval-length", i),
              "|B_i|/|A_i| is smaller than the length of the interval around ε",
              Of(nbi / nai), Relation::kLt, Of(len > 0 ? len : Rational(0)));

    const Rational ra = Ratio(CoveredPrefix(fam, kept[i]), na);
    st.ratio_to_a = ra;
    led.Require(Idx("iv-lower", i), "ε (1 − ε)^{i + 2 − 2^{−i}} ≤ |B_iC_i|/|A|",
                PowerOf(one_minus, DyadicExponent(i + 2, -1, i)).Times(eb), Relation::kLe, Of(ra));
    led.Require(Idx("iv-upper", i), "|B_iC_i|/|A| ≤ ε (1 − ε)^{i − 2 + 2^{−i}}", Of(ra),
                Relation::kLe, PowerOf(one_minus, DyadicExponent(i - 2, 1, i)).Times(eb));

    // A_{i+1} = A_i \ B_iC_i.
    SetIndex index(ai);
    std::vector<char> hit(ai.size(), 0);
    for (size_t j = 0; j < kept[i]; ++j) {
      for (const Elem& b : chain[i]) hit[index.Find(g.Mul(b, fam.centers[j]))] = 1;
    }
    ElemSet next;
    next.reserve(ai.size());
    for (size_t x = 0; x < ai.size(); ++x)
      if (!hit[x]) next.push_back(ai[x]);
    ai = std::move(next);
    out.stages.push_back(st);
  }

  // Final trimming to C'_i with ε(1−2ε)²(1−ε)^i ≤ |B_iC'_i|/|A| ≤ ε(1−2ε)(1−ε)^i.
  QuasiTiling& t = out.tiling;
  t.a = a;
  t.shapes = chain;
  t.eps = eps;
  t.p = c.p;
  std::vector<char> covered_by_any(a.size(), 0);
  SetIndex a_index(a);
  int64_t total_cover = 0;
  for (int i = 0; i < k; ++i) {
    const Rational nbi(static_cast<long>(chain[i].size()));
    const Rational hi = eb * s * Pow(one_minus, i);
    const Rational lo = hi * s;
    const TranslateFamily& fam = fams[i];
    size_t m = LargestPrefix(kept[i], [&](size_t q) { return Ratio(CoveredPrefix(fam, q), na) <= hi; });
    const Rational fr = Ratio(CoveredPrefix(fam, m), na);
    out.stages[i].final_centers = static_cast<int64_t>(m);
    out.stages[i].final_ratio = fr;
    led.Require(Idx("final-lower", i), "ε (1 − 2ε)^2 (1 − ε)^i ≤ |B_i C'_i|/|A|", Of(lo),
                Relation::kLe, Of(fr));
    led.Require(Idx("final-upper", i), "|B_i C'_i|/|A| ≤ ε (1 − 2ε)(1 − ε)^i", Of(fr),
                Relation::kLe, Of(hi));
    led.Check(Idx("final-interval-length", i),
              "|B_i|/|A| is smaller than the length of the interval", Of(nbi / na), Relation::kLt,
              Of(hi - lo));
    t.centers.emplace_back(fam.centers.begin(), fam.centers.begin() + m);
    t.witnesses.emplace_back(fam.witnesses.begin(), fam.witnesses.begin() + m);
    size_t min_witness = chain[i].size();
    for (size_t j = 0; j < m; ++j) min_witness = std::min(min_witness, fam.witnesses[j].size());
    led.Require(Idx("final-2eps-disjoint", i), "(C'_i)_{i < k} is a 2ε-disjoint 𝒜-quasi-tiling",
                Of(Rational(static_cast<long>(min_witness))), Relation::kGe, Of(s * nbi));
    led.Require(Idx("budget", i), "|B_i||C'_i|/|A| ≤ ε (1 − ε)^i = p_i",
                Of(nbi * static_cast<long>(m) / na), Relation::kLe, Of(c.p[i]));
    for (size_t j = 0; j < m; ++j) {
      for (const Elem& b : chain[i]) {
        char& cell = covered_by_any[a_index.Find(g.Mul(b, fam.centers[j]))];
        total_cover += cell == 0;
        cell = 1;
      }
    }
  }
  led.Require("final-cover", "which (1 − 2ε)^3-covers A", Of(Ratio(total_cover, na)),
              Relation::kGe, Of(s * s * s));

  TilingReport report = CheckTiling(g, t);
  led.Append(report.ledger, "check/");
  if (!report.ok()) throw ConstraintViolation("check-tiling", report.failure);
  return out;
}

TilingReport CheckTiling(const MarkedGroup& g, const QuasiTiling& t) {
  TilingReport rep;
  const int64_t na = static_cast<int64_t>(t.a.size());
  SetIndex index(t.a);
  // shape_of[x]: shape covering x; owner[x]: 1 once x lies in a witness translate.
  std::vector<int> shape_of(t.a.size(), -1);
  std::vector<char> owner(t.a.size(), 0);
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (rep.failure.empty()) rep.failure = why;
  };
  int64_t sum_sizes = 0;
  int identity_hits = 0;
  const Elem id = g.Identity();
  if (t.centers.size() != t.shapes.size()) throw InputError("one center set per shape is required");
  for (size_t i = 0; i < t.shapes.size(); ++i) {
    const ElemSet& b = t.shapes[i];
    const auto& cs = t.centers[i];
    const bool derive = t.witnesses.size() <= i || t.witnesses[i].empty();
    if (!derive && t.witnesses[i].size() != cs.size()) {
      throw InputError("one witness per center is required for shape " + std::to_string(i));
    }
    int64_t min_witness = static_cast<int64_t>(b.size());
    for (size_t j = 0; j < cs.size(); ++j) {
      const Elem& c = cs[j];
      if (c == id) ++identity_hits;
      std::vector<int64_t> pos;
      for (const Elem& x : b) {
        int64_t p = index.Find(g.Mul(x, c));
        if (p < 0) {
          fail(rep.contained, "shape " + std::to_string(i) + " center " + g.Format(c) +
                                  ": B·c is not inside A");
          break;
        }
        pos.push_back(p);
      }
      if (pos.size() != b.size()) continue;
      sum_sizes += static_cast<int64_t>(b.size());
      ElemSet witness;
      if (derive) {
        for (size_t q = 0; q < b.size(); ++q)
          if (!owner[pos[q]]) witness.push_back(b[q]);
      } else {
        witness = t.witnesses[i][j];
        if (!IsSubset(witness, b)) {
          fail(rep.disjoint, "shape " + std::to_string(i) + " center " + g.Format(c) +
                                 ": witness is not inside B");
          continue;
        }
      }
      min_witness = std::min(min_witness, static_cast<int64_t>(witness.size()));
      for (const Elem& x : witness) {
        int64_t p = index.Find(g.Mul(x, c));
        if (owner[p]) {
          fail(rep.disjoint, "shape " + std::to_string(i) + " center " + g.Format(c) +
                                 ": witness translate meets an earlier one at " +
                                 g.Format(t.a[p]));
        }
        owner[p] = 1;
      }
      for (int64_t p : pos) {
        if (shape_of[p] >= 0 && shape_of[p] != static_cast<int>(i)) {
          fail(rep.shapes_disjoint, "translates of shapes " + std::to_string(shape_of[p]) +
                                        " and " + std::to_string(i) + " meet at " +
                                        g.Format(t.a[p]));
        }
        shape_of[p] = static_cast<int>(i);
      }
    }
    const Rational nb(static_cast<long>(b.size()));
    if (!cs.empty() &&
        !rep.ledger.Check(Idx("witness-size", i), "each member carries a subset of relative size ≥ 1 − ε",
                          Of(Rational(min_witness)), Relation::kGe, Of((1 - t.eps) * nb))) {
      fail(rep.disjoint, "shape " + std::to_string(i) + ": a witness has fewer than (1 − ε)|B| points");
    }
    Rational budget = Ratio(static_cast<int64_t>(b.size() * cs.size()), na);
    rep.budgets.push_back(budget);
    if (i < t.p.size() &&
        !rep.ledger.Check(Idx("budget", i), "|B||C_B| ≤ p_B|A|", Of(budget), Relation::kLe,
                          Of(t.p[i]))) {
      fail(rep.budgets_ok, "shape " + std::to_string(i) + " exceeds its budget");
    }
  }
  if (ContainsElem(t.a, id) && identity_hits != 1) {
    fail(rep.identity_center, "the identity is a center of " + std::to_string(identity_hits) +
                                  " shapes");
  }
  int64_t covered = 0;
  for (int s : shape_of) covered += s >= 0;
  rep.coverage = Ratio(covered, na);
  if (!rep.ledger.Check("coverage", "(1 − ε)-covers A", Of(rep.coverage), Relation::kGe,
                        Of(1 - t.eps))) {
    fail(rep.covers, "coverage " + ToString(rep.coverage) + " is below 1 − ε");
  }
  if (!rep.ledger.Check("union-bound", "(1 − ε)Σ_{A∈𝒜}|A| ≤ |⋃_{A∈𝒜} A|",
                        Of((1 - t.eps) * sum_sizes), Relation::kLe, Of(Rational(covered)))) {
    fail(rep.union_bound, "the witnessed family violates (1 − ε)Σ|A| ≤ |⋃A|");
  }
  return rep;
}

int64_t CountCoveringTranslates(const MarkedGroup& g, const ElemSet& b, const Elem& x) {
  std::vector<Elem> candidates;
  if (g.is_lattice()) {
    Elem lo = b.front(), hi = b.front();
    for (const Elem& y : b) {
      for (int q = 0; q < 2; ++q) {
        lo[q] = std::min(lo[q], y[q]);
        hi[q] = std::max(hi[q], y[q]);
      }
    }
    for (int64_t u = x[0] - hi[0]; u <= x[0] - lo[0]; ++u)
      for (int64_t v = x[1] - hi[1]; v <= x[1] - lo[1]; ++v) candidates.push_back({u, v});
  } else {
    for (int64_t r = 0; r < g.finite_group()->order(); ++r) candidates.push_back({r, 0});
  }
  int64_t count = 0;
  for (const Elem& c : candidates) count += ContainsElem(RightTranslate(g, b, c), x);
  return count;
}

nlohmann::json ElemSetToJson(const MarkedGroup& g, const ElemSet& s) {
  nlohmann::json out = nlohmann::json::array();
  if (!g.is_lattice()) {
    for (const Elem& a : s) out.push_back(a[0]);
    return {{"elements", out}};
  }
  for (const Run& r : internal::RunsOf(g, s)) {
    if (g.dimension() == 2) {
      out.push_back({r.key, r.lo, r.hi});
    } else {
      out.push_back({r.lo, r.hi});
    }
  }
  return {{"runs", out}, {"size", s.size()}};
}

nlohmann::json TilingReport::ToJson() const {
  nlohmann::json budgets_json = nlohmann::json::array();
  for (const auto& b : budgets) budgets_json.push_back(quotlift::ToJson(b));
  return {{"ok", ok()},
          {"contained", contained},
          {"disjoint", disjoint},
          {"shapes_disjoint", shapes_disjoint},
          {"identity_center", identity_center},
          {"covers", covers},
          {"budgets_ok", budgets_ok},
          {"union_bound", union_bound},
          {"failure", failure},
          {"coverage", quotlift::ToJson(coverage)},
          {"budgets", budgets_json},
          {"ledger", ledger.ToJson()}};
}

nlohmann::json QuasiTileResult::ToJson(const MarkedGroup& g) const {
  auto rats = [](const std::vector<Rational>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : v) j.push_back(quotlift::ToJson(x));
    return j;
  };
  nlohmann::json stages_json = nlohmann::json::array();
  for (const auto& s : stages) {
    stages_json.push_back({{"a_size", s.a_size},
                           {"greedy_centers", s.greedy_centers},
                           {"centers", s.centers},
                           {"final_centers", s.final_centers},
                           {"ratio_to_ai", quotlift::ToJson(s.ratio_to_ai)},
                           {"ratio_to_a", quotlift::ToJson(s.ratio_to_a)},
                           {"final_ratio", quotlift::ToJson(s.final_ratio)}});
  }
  nlohmann::json shapes = nlohmann::json::array();
  for (size_t i = 0; i < tiling.shapes.size(); ++i) {
    nlohmann::json centers = nlohmann::json::array();
    for (const Elem& c : tiling.centers[i]) centers.push_back(g.ElemToJson(c));
    shapes.push_back({{"shape", ElemSetToJson(g, tiling.shapes[i])}, {"centers", centers}});
  }
  return {{"eps", quotlift::ToJson(outer_eps)},
          {"eps_bar", quotlift::ToJson(constants.eps)},
          {"k", constants.k},
          {"p", rats(constants.p)},
          {"eta", rats(constants.eta)},
          {"delta", quotlift::ToJson(constants.delta)},
          {"a", ElemSetToJson(g, tiling.a)},
          {"tiles", shapes},
          {"stages", stages_json},
          {"ledger", ledger.ToJson()},
          {"all_pass", ledger.all_pass()}};
}

}  // namespace quotlift
