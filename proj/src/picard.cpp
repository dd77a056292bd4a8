#include "curveatlas/picard.hpp"

namespace curveatlas {

DivisorClass canonical_class(const SurfaceContext& ctx) {
  Int k = ctx.s - 4;
  return {k, k};
}

CohomologyAnswer CohomologyAnswer::known(Int value) {
  if (value < Int(0))
    throw std::logic_error("CohomologyAnswer: negative dimension");
  CohomologyAnswer a;
  a.known_ = true;
  a.value_ = value;
  return a;
}

CohomologyAnswer CohomologyAnswer::unknown(std::string reason) {
  CohomologyAnswer a;
  a.known_ = false;
  a.reason_ = std::move(reason);
  return a;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2,
              const SurfaceContext& ctx) {
  Int s = ctx.s;
  return d1.a * d2.a * (Int(2) - s) + (d1.a * d2.b + d2.a * d1.b) * (s - 1);
}

Int degree_of(const DivisorClass& c, const SurfaceContext& ctx) {
  return c.a + (ctx.s - 1) * c.b;
}

Int genus_of(const DivisorClass& c, const SurfaceContext& ctx) {
  Int s = ctx.s, a = c.a, b = c.b;
  Int num = (s - 4) * a + (s - 4) * (s - 1) * b - (s - 2) * a * a;
  if (num % Int(2) != Int(0))
    throw std::logic_error("HalfIntegerGenus: adjunction parity violated");
  return Int(1) + (s - 1) * a * b + num / 2;
}

Int t_invariant(const DivisorClass& c, const SurfaceContext& ctx) {
  return (ctx.s - 1) * c.b - (ctx.s - 2) * c.a;
}

bool is_effective(const DivisorClass& c, const SurfaceContext&) {
  return c.a >= Int(0) && c.b >= Int(0);
}

bool is_nef(const DivisorClass& c, const SurfaceContext& ctx) {
  Int lhs = (ctx.s - 1) * c.b, mid = (ctx.s - 2) * c.a;
  return lhs >= mid && mid >= Int(0);
}

bool is_base_point_free(const DivisorClass& c, const SurfaceContext& ctx) {
  // C.f1 >= 0 and C.f2 >= 0; C.f1 = t, C.f2 = (s-1)a.
  return t_invariant(c, ctx) >= Int(0) && (ctx.s - 1) * c.a >= Int(0);
}

bool has_smooth_irreducible_member(const DivisorClass& c,
                                   const SurfaceContext& ctx) {
  return t_invariant(c, ctx) >= Int(0) && (ctx.s - 1) * c.a > Int(0);
}

CohomologyAnswer h1_surface(const DivisorClass& c, const SurfaceContext& ctx) {
  Int s = ctx.s, a = c.a;
  Int t = t_invariant(c, ctx);
  if (a > s - 4) {
    if (t > Int(-2) || (t == Int(-2) && a == s - 3))
      return CohomologyAnswer::known(0);
    if (t == Int(-2) && a != s - 3) return CohomologyAnswer::known(1);
  }
  if (a > s - 2 && Int(-4) <= t && t <= Int(-1)) {
    if (t == Int(-4) && s == Int(4)) return CohomologyAnswer::known(4);
    return CohomologyAnswer::known(-t - 1);
  }
  return CohomologyAnswer::unknown("outside vanishing-table hypotheses");
}

CohomologyAnswer h1_ideal(const DivisorClass& c, Int n,
                          const SurfaceContext& ctx) {
  Int shift = ctx.s - 4 - n;
  DivisorClass dual{c.a + shift, c.b + shift};
  return h1_surface(dual, ctx);
}

Int chi_surface(const DivisorClass& c, const SurfaceContext& ctx) {
  Int c2 = intersect(c, c, ctx);
  Int ck = intersect(c, canonical_class(ctx), ctx);
  Int num = c2 - ck;
  if (num % Int(2) != Int(0))
    throw std::logic_error("HalfIntegerChi: Riemann-Roch parity violated");
  return Int(1) + binom(ctx.s - 1, 3) + num / 2;
}

}  // namespace curveatlas
