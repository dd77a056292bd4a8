#include "curveatlas/cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "curveatlas/exact_cmp.hpp"
#include "curveatlas/max_genus.hpp"

namespace curveatlas {

bool SevenTuple::valid() const {
  if (delta < m[0]) return false;
  for (int i = 0; i + 1 < 6; ++i)
    if (m[i] < m[i + 1]) return false;
  if (m[5] < Int(0)) return false;
  return delta >= m[0] + m[1] + m[2];
}

std::pair<Int, Int> tuple_invariants(const SevenTuple& t) {
  if (!t.valid())
    throw std::invalid_argument("InvalidTuple: tuple inequalities violated");
  Int d = Int(3) * t.delta;
  Int g = binom(t.delta - 1, 2);
  for (const Int& mi : t.m) {
    d -= mi;
    g -= binom(mi, 2);
  }
  return {d, g};
}

CurveClassFlags curve_class_flags(const SevenTuple& t) {
  auto [d, g] = tuple_invariants(t);
  CurveClassFlags f;
  f.unobstructed_forced = Int(8) * g > d * d - 4;
  if (d >= Int(14) && g >= Int(3) * d - 18)
    f.h1_cubic_nonzero_lin_normal = (Int(1) <= t.m[5] && t.m[5] <= Int(2));
  return f;
}

bool conjecture_range(Int d, Int g) {
  return d >= Int(14) && Int(3) * d - 18 <= g && Int(8) * g <= d * d - 4;
}

Int dim_w_cubic(Int d, Int g) { return d + g + 18; }

bool ProvenRange::has(CertKind k) const {
  for (const auto& c : certificates)
    if (c.kind == k) return true;
  return false;
}

bool ProvenRange::has_quad10_t(Int t) const {
  for (const auto& c : certificates)
    if (c.kind == CertKind::Quad10MaxGenusT && c.t == t) return true;
  return false;
}

namespace {

// g > d^2/10 - d/2 + 18, exactly: 10g > d^2 - 5d + 180.
bool above_quad10(Int d, Int g) {
  return Int(10) * g > d * d - Int(5) * d + 180;
}

Certificate cert(CertKind kind, Int t = 0) {
  Certificate c;
  c.kind = kind;
  c.t = t;
  return c;
}

}  // namespace

ProvenRange proven_range(Int d, Int g) {
  ProvenRange out;
  // g > 7 + (d-2)^2/8, d >= 18, exactly: 8g > 56 + (d-2)^2.
  if (d >= Int(18) && Int(8) * g > Int(56) + (d - 2) * (d - 2))
    out.certificates.push_back(cert(CertKind::Quad8Bound));
  // g > G(d,5), d >= 21 (always C-range there, so always exact).
  if (d >= Int(21)) {
    auto g5 = max_genus(d, 5);
    if (g5.is_exact() && g > g5.value)
      out.certificates.push_back(cert(CertKind::AboveMaxGenus5));
  }
  for (long long tl : {6, 7, 8}) {
    Int t(tl);
    if (!(d >= t * t - Int(2) * t + 2)) continue;
    auto gt = max_genus(d, t);
    if (!gt.is_exact()) {
      out.skipped_t.push_back(t);
      continue;
    }
    if (above_quad10(d, g) && g > gt.value)
      out.certificates.push_back(cert(CertKind::Quad10MaxGenusT, t));
  }
  if (d >= Int(54) && above_quad10(d, g))
    out.certificates.push_back(cert(CertKind::Quad10LargeD));
  return out;
}

bool nonreduced_tuple_criterion(const SevenTuple& t) {
  auto [d, g] = tuple_invariants(t);
  (void)g;
  if (t.m[5] != Int(1) || d < Int(35)) return false;
  // clause (a): m5 >= 6, tuple not of the shape
  // (lambda+18, lambda+6, 6, 6, 6, 6, 1) with lambda >= 2
  if (t.m[4] >= Int(6)) {
    bool pattern = t.m[1] == Int(6) && t.m[2] == Int(6) && t.m[3] == Int(6) &&
                   t.m[4] == Int(6) && t.delta - t.m[0] == Int(12) &&
                   t.m[0] - 6 >= Int(2);
    if (!pattern) return true;
  }
  // clause (b): m5 = 5, m4 >= 7, tuple not of the shape
  // (lambda+21, lambda+7, 7, 7, 7, 5, 1) with lambda >= 2
  if (t.m[4] == Int(5) && t.m[3] >= Int(7)) {
    bool pattern = t.m[1] == Int(7) && t.m[2] == Int(7) && t.m[3] == Int(7) &&
                   t.delta - t.m[0] == Int(14) && t.m[0] - 7 >= Int(2);
    if (!pattern) return true;
  }
  return false;
}

ExistenceVerdict existence_verdict(Int d, Int g) {
  if (d == Int(14) && g == Int(22)) return ExistenceVerdict::ExcludedPair;
  if (d < Int(14)) return ExistenceVerdict::No;
  if (Int(8) * g > d * d - 4) return ExistenceVerdict::No;
  // g >= (d+9)sqrt(d+6) - 9d/2 - 43/2
  //   <=>  2g + 9d + 43 >= 2(d+9)sqrt(d+6); both sides non-negative here,
  // and the left sign is checked rather than assumed.
  Int lhs = Int(2) * g + Int(9) * d + 43;
  if (lhs < Int(0)) return ExistenceVerdict::No;
  Int rhs_sq = Int(4) * (d + 9) * (d + 9) * (d + 6);
  return lhs * lhs >= rhs_sq ? ExistenceVerdict::Yes : ExistenceVerdict::No;
}

bool existence_shifted(Int d, Int g, Int n) {
  if (n < Int(1) || n > Int(3))
    throw std::invalid_argument("existence_shifted: n must be 1, 2 or 3");
  if (!(d > Int(3) * n + 4))
    throw std::invalid_argument("existence_shifted: requires d > 3n+4");
  // upper: 8g <= 8 + d^2 + (2n-4)d - 3n^2
  if (Int(8) * g > Int(8) + d * d + (Int(2) * n - 4) * d - Int(3) * n * n)
    return false;
  // lower, times 2: 2g - d(2n-11) + 70 - 30n + 3n^2 >= 2(d+12-3n)sqrt(d+9-3n)
  Int lhs = Int(2) * g - d * (Int(2) * n - 11) + 70 - Int(30) * n +
            Int(3) * n * n;
  if (lhs < Int(0)) return false;
  Int w = d + 12 - Int(3) * n;
  Int rad = d + 9 - Int(3) * n;
  return lhs * lhs >= Int(4) * w * w * rad;
}

bool existence_unobstructed(Int d, Int g) {
  auto dg = std::pair<long long, long long>{0, 0};
  if (d.fits_i64() && g.fits_i64()) dg = {d.as_i64(), g.as_i64()};
  if (dg == std::pair<long long, long long>{30, 91} ||
      dg == std::pair<long long, long long>{33, 103} ||
      dg == std::pair<long long, long long>{34, 109})
    return false;
  // 3d - 17 + (d-9)(d-18)/18 <= g <= 1 + d(d-3)/6, cleared of denominators.
  if (Int(18) * g < Int(54) * d - 306 + (d - 9) * (d - 18)) return false;
  return Int(6) * g <= Int(6) + d * (d - 3);
}

bool excluded_tuple_pattern(const SevenTuple& t) {
  Int m6 = t.m[5];
  return t.m[1] == m6 && t.m[2] == m6 && t.m[3] == m6 && t.m[4] == m6 &&
         t.delta - t.m[0] == Int(2) * m6 && t.m[0] - m6 >= Int(2);
}

namespace {

struct TupleSearch {
  long long delta, d, g;
  const std::set<long long>* m6_filter;
  std::vector<SevenTuple>* out;
  long long m[6];

  // Descending DFS over m1 >= ... >= m6 with exact sum and binom-sum targets.
  void rec(int idx, long long prev, long long rem_sum, long long rem_b) {
    if (idx == 6) {
      if (rem_sum == 0 && rem_b == 0) {
        if (m6_filter && !m6_filter->count(m[5])) return;
        SevenTuple t;
        t.delta = delta;
        for (int i = 0; i < 6; ++i) t.m[i] = m[i];
        if (t.valid()) out->push_back(t);
      }
      return;
    }
    int slots = 6 - idx;
    long long hi = std::min(prev, rem_sum);
    for (long long mi = hi; mi >= 0; --mi) {
      if (mi * slots < rem_sum) break;  // cannot reach the sum any more
      if (idx == 2 && m[0] + m[1] + mi > delta) continue;
      long long bi = mi * (mi - 1) / 2;
      long long nb = rem_b - bi;
      if (nb < 0) continue;
      if (nb > (slots - 1) * bi) continue;  // cannot reach the binom sum
      m[idx] = mi;
      rec(idx + 1, mi, rem_sum - mi, nb);
    }
  }
};

}  // namespace

std::vector<SevenTuple> enumerate_tuples(Int d, Int g,
                                         const std::set<long long>& m6_filter) {
  if (d < Int(1)) throw std::invalid_argument("enumerate_tuples: d must be >= 1");
  std::vector<SevenTuple> out;
  long long dl = d.as_i64(), gl = g.as_i64();
  for (long long delta = std::max<long long>(1, (dl + 2) / 3); delta <= dl;
       ++delta) {
    long long sum = 3 * delta - dl;
    if (sum < 0 || sum > 2 * delta) continue;
    long long bsum = delta >= 2 ? (delta - 1) * (delta - 2) / 2 : 0;
    bsum -= gl;
    if (bsum < 0) continue;
    TupleSearch ts{delta, dl, gl, m6_filter.empty() ? nullptr : &m6_filter,
                   &out, {}};
    ts.rec(0, delta, sum, bsum);
  }
  return out;
}

std::vector<SevenTuple> enumerate_tuples(Int d, Int g) {
  return enumerate_tuples(d, g, std::set<long long>{});
}

RangeVerdict range_verdict(Int d, Int g, Int witness_search_limit) {
  RangeVerdict v;
  v.d = d;
  v.g = g;
  v.dim_w3 = dim_w_cubic(d, g);
  v.in_conjecture_range = conjecture_range(d, g);
  v.proven = proven_range(d, g);
  v.existence = d >= Int(14) ? existence_verdict(d, g) : ExistenceVerdict::No;
  if (d <= witness_search_limit) {
    for (const auto& t : enumerate_tuples(d, g, {1})) {
      if (nonreduced_tuple_criterion(t)) {
        Certificate w = cert(CertKind::TupleWitness);
        w.witness = t;
        v.proven.certificates.push_back(w);
        break;
      }
    }
  } else {
    v.witness_search_skipped = true;
  }
  return v;
}

ExistenceProofClaims existence_proof_claims(Int d) {
  ExistenceProofClaims c{};
  // g2 - g1 = (2d+21)/2 + (d+6)sqrt(d+3) - (d+9)sqrt(d+6); doubled below.
  c.g1_le_g2 = sign_two_sqrt(Int(2) * d + 21, Int(2) * (d + 6), d + 3,
                             Int(-2) * (d + 9), d + 6) >= 0;
  // 8*g2 <= d^2 - 4  <=>  8(d+6)sqrt(d+3) <= d^2 + 28d + 84
  c.g2_le_G2 = sign_linear_sqrt(-(d * d + Int(28) * d + 84), Int(8) * (d + 6),
                                d + 3) <= 0;
  // 8*g2 < d^2 - 2d + 5  <=>  8(d+6)sqrt(d+3) < d^2 + 26d + 93
  c.g2_lt_G1 = sign_linear_sqrt(-(d * d + Int(26) * d + 93), Int(8) * (d + 6),
                                d + 3) < 0;
  c.G1_lt_G2 = d * d - Int(2) * d + 5 < d * d - 4;
  return c;
}

std::vector<Int> existence_gap_integers(Int d) {
  std::vector<Int> out;
  // k > G1 <=> 8k > d^2 - 2d + 5;  k < g2 <=> 2k + 7d + 22 < 2(d+6)sqrt(d+3)
  Int k = floor_div(d * d - Int(2) * d + 5, 8) + 1;
  for (;; k += 1) {
    if (sign_linear_sqrt(Int(2) * k + Int(7) * d + 22, Int(-2) * (d + 6),
                         d + 3) < 0)
      out.push_back(k);
    else
      break;
  }
  return out;
}

std::string to_string(ExistenceVerdict v) {
  switch (v) {
    case ExistenceVerdict::Yes: return "Yes";
    case ExistenceVerdict::ExcludedPair: return "ExcludedPair";
    case ExistenceVerdict::No: return "No";
  }
  return "?";
}

std::string cert_name(const Certificate& c) {
  switch (c.kind) {
    case CertKind::Quad8Bound: return "quad8_bound";
    case CertKind::AboveMaxGenus5: return "above_max_genus_5";
    case CertKind::Quad10MaxGenusT:
      return "quad10_max_genus_t" + c.t.str();
    case CertKind::Quad10LargeD: return "quad10_large_d";
    case CertKind::TupleWitness: return "tuple_witness";
  }
  return "?";
}

}  // namespace curveatlas
