#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveatlas/checked_int.hpp"

namespace curveatlas {

// Curves on a smooth cubic surface, encoded by 7-tuples (delta, m1..m6)
// through the blow-up of the plane in six points, subject to
//   delta >= m1 >= ... >= m6 >= 0   and   delta >= m1 + m2 + m3.
// Invariants: d = 3*delta - sum(m_i), g = binom(delta-1,2) - sum binom(m_i,2).

struct SevenTuple {
  Int delta;
  std::array<Int, 6> m;

  bool valid() const;
  friend bool operator==(const SevenTuple& x, const SevenTuple& y) {
    return x.delta == y.delta && x.m == y.m;
  }
};

// (d, g) of a tuple; throws std::invalid_argument ("InvalidTuple") if the
// defining inequalities fail.
std::pair<Int, Int> tuple_invariants(const SevenTuple& t);

struct CurveClassFlags {
  // 8g > d^2 - 4 forces h^1(I_C(3)) = 0, hence the curve is unobstructed.
  bool unobstructed_forced;
  // Defined only when d >= 14 and g >= 3d - 18; then h^1(I_C(3)) != 0
  // together with linear normality is equivalent to 1 <= m6 <= 2.
  std::optional<bool> h1_cubic_nonzero_lin_normal;
};

CurveClassFlags curve_class_flags(const SevenTuple& t);

// The conjectured window for non-reduced 3-maximal components:
// d >= 14 and 3d - 18 <= g <= (d^2 - 4)/8.
bool conjecture_range(Int d, Int g);

// dim W = d + g + 18 (valid for d > 9).
Int dim_w_cubic(Int d, Int g);

// Certificates for (d,g) ranges where the conjecture is proven.
enum class CertKind {
  Quad8Bound,        // g > 7 + (d-2)^2/8, d >= 18
  AboveMaxGenus5,    // g > G(d,5), d >= 21
  Quad10MaxGenusT,   // g > max{d^2/10 - d/2 + 18, G(d,t)}, d >= t^2-2t+2
  Quad10LargeD,      // g > d^2/10 - d/2 + 18, d >= 54
  TupleWitness,      // a 7-tuple passing the non-reduced witness criterion
};

struct Certificate {
  CertKind kind;
  Int t = 0;                          // Quad10MaxGenusT only
  std::optional<SevenTuple> witness;  // TupleWitness only
};

struct ProvenRange {
  std::vector<Certificate> certificates;
  // t values skipped because G(d,t) was not available exactly.
  std::vector<Int> skipped_t;

  bool has(CertKind k) const;
  bool has_quad10_t(Int t) const;
};

// Evaluates all inequality certificates; Quad10MaxGenusT is tried for each
// t in {6,7,8} and skipped (recorded in skipped_t) when G(d,t) is only
// conjectural or untabulated.
ProvenRange proven_range(Int d, Int g);

// Hypothesis test of the non-reducedness witness criterion for tuples with
// m6 = 1: clause (a) m5 >= 6 or clause (b) m5 = 5, m4 >= 7, both requiring
// d >= 35 and excluding one explicit one-parameter family each.
bool nonreduced_tuple_criterion(const SevenTuple& t);

// Existence of a smooth connected curve on a smooth cubic with a 7-tuple
// having m6 in {1,2} and avoiding the degenerate pattern
// (lambda+3m6, lambda+m6, m6,..,m6), lambda >= 2:
//   Yes whenever (d+9)sqrt(d+6) - 9d/2 - 43/2 <= g <= (d^2-4)/8,
//   except the excluded pair (14,22). Square-root bounds are decided by
//   exact integer squaring. Returns No for d < 14 (empty range).
enum class ExistenceVerdict { Yes, ExcludedPair, No };
ExistenceVerdict existence_verdict(Int d, Int g);

// n-shifted del Pezzo existence ranges (n hyperplane sections added),
// n in {1,2,3}; requires d > 3n + 4:
//   (d+12-3n)sqrt(d+9-3n) + d(n-11/2) - 35 + 3(10n-n^2)/2 <= g
//                                         <= 1 + (d^2 + (2n-4)d - 3n^2)/8.
bool existence_shifted(Int d, Int g, Int n);

// Range producing unobstructed curves on the cubic (m6 >= 3):
//   3d - 17 + (d-9)(d-18)/18 <= g <= 1 + d(d-3)/6,
// minus the three excluded pairs (30,91), (33,103), (34,109).
bool existence_unobstructed(Int d, Int g);

// Degenerate pattern excluded by the existence range above.
bool excluded_tuple_pattern(const SevenTuple& t);

// All tuples with invariants (d,g), optionally filtered by m6 membership.
// Deterministic order: delta ascending, then m lexicographically descending.
// The search bound delta <= d follows from sum(m_i) <= 2*delta.
std::vector<SevenTuple> enumerate_tuples(Int d, Int g);
std::vector<SevenTuple> enumerate_tuples(Int d, Int g,
                                         const std::set<long long>& m6_filter);

struct RangeVerdict {
  Int d, g;
  Int dim_w3;  // d + g + 18
  bool in_conjecture_range;
  ProvenRange proven;
  ExistenceVerdict existence;
  bool witness_search_skipped = false;
};

// Assembles the full verdict for (d,g). The TupleWitness certificate search
// enumerates tuples and is only attempted for d <= witness_search_limit.
RangeVerdict range_verdict(Int d, Int g, Int witness_search_limit = 200);

// Exact verification helpers for the bounds appearing in the existence
// proof: G1 = (d^2-2d+5)/8, G2 = (d^2-4)/8,
// g1 = (d+9)sqrt(d+6) - 9d/2 - 43/2, g2 = (d+6)sqrt(d+3) - 7d/2 - 11.
struct ExistenceProofClaims {
  bool g1_le_g2;
  bool g2_le_G2;
  bool g2_lt_G1;
  bool G1_lt_G2;
};
ExistenceProofClaims existence_proof_claims(Int d);

// Integers k with G1 < k < g2 (the gap between the n=1 and n=2 ranges).
std::vector<Int> existence_gap_integers(Int d);

std::string to_string(ExistenceVerdict v);
std::string cert_name(const Certificate& c);

}  // namespace curveatlas
