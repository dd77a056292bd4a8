#pragma once

#include <stdexcept>
#include <string>

#include "curveatlas/checked_int.hpp"

namespace curveatlas {

// Rank-2 Picard lattice of a smooth degree-s surface in P^3 containing a
// line. Basis: f1 (the line) and f2 = H - f1, H the hyperplane class.
// Intersection matrix:  f1.f1 = 2-s,  f1.f2 = s-1,  f2.f2 = 0.

struct SurfaceContext {
  Int s;
  explicit SurfaceContext(Int degree) : s(degree) {
    if (s < Int(4))
      throw std::invalid_argument("SurfaceContext: surface degree must be >= 4");
  }
};

// Class a*f1 + b*f2. Negative coefficients are allowed; effectivity and
// positivity are predicates, not invariants of the type.
struct DivisorClass {
  Int a;
  Int b;
};

inline DivisorClass hyperplane_class() { return {1, 1}; }
DivisorClass canonical_class(const SurfaceContext& ctx);  // (s-4)*H

// Tri-state answer for h^1 dimensions: either a known non-negative integer
// or unknown with a reason tag. Unknown is a value, never an exception;
// the classifier branches on it.
class CohomologyAnswer {
 public:
  static CohomologyAnswer known(Int value);
  static CohomologyAnswer unknown(std::string reason);

  bool is_known() const { return known_; }
  Int value() const {
    if (!known_) throw std::logic_error("CohomologyAnswer: value() on Unknown");
    return value_;
  }
  const std::string& reason() const { return reason_; }

  friend bool operator==(const CohomologyAnswer& x, const CohomologyAnswer& y) {
    if (x.known_ != y.known_) return false;
    return x.known_ ? x.value_ == y.value_ : x.reason_ == y.reason_;
  }

 private:
  bool known_ = false;
  Int value_ = 0;
  std::string reason_;
};

Int intersect(const DivisorClass& d1, const DivisorClass& d2,
              const SurfaceContext& ctx);

// d = a + (s-1) b = C.H
Int degree_of(const DivisorClass& c, const SurfaceContext& ctx);

// g = 1 + (s-1)ab + ((s-4)a + (s-4)(s-1)b - (s-2)a^2)/2, always an integer;
// equals the adjunction value 1 + (C^2 + C.K)/2. Throws std::logic_error
// ("HalfIntegerGenus") if the parity assertion ever fails.
Int genus_of(const DivisorClass& c, const SurfaceContext& ctx);

// t = (s-1)b - (s-2)a = C.f1; computed on demand, never stored.
Int t_invariant(const DivisorClass& c, const SurfaceContext& ctx);

bool is_effective(const DivisorClass& c, const SurfaceContext& ctx);
bool is_nef(const DivisorClass& c, const SurfaceContext& ctx);
bool is_base_point_free(const DivisorClass& c, const SurfaceContext& ctx);
bool has_smooth_irreducible_member(const DivisorClass& c,
                                   const SurfaceContext& ctx);

// dim H^1(S, O_S(C)) from the two vanishing case tables, keyed on
// t = (s-1)b - (s-2)a:
//   a > s-4, t > -2 (or t = -2 with a = s-3)          -> 0
//   a > s-4, t = -2, a != s-3                          -> 1
//   a > s-2, -4 <= t <= -1, (t,s) != (-4,4)            -> -t-1
//   a > s-2, (t,s) = (-4,4)                            -> 4
// anything else is Unknown.
CohomologyAnswer h1_surface(const DivisorClass& c, const SurfaceContext& ctx);

// dim H^1(P^3, I_C(n)) for C on S, via Serre duality on S applied to the
// restriction sequence: equals h1_surface(C + (s-4-n) H).
CohomologyAnswer h1_ideal(const DivisorClass& c, Int n,
                          const SurfaceContext& ctx);

// chi(O_S(C)) = chi(O_S) + (C^2 - C.K)/2 with chi(O_S) = 1 + binom(s-1,3).
// Throws std::logic_error ("HalfIntegerChi") on parity failure.
Int chi_surface(const DivisorClass& c, const SurfaceContext& ctx);

}  // namespace curveatlas
