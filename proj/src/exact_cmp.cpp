#include "curveatlas/exact_cmp.hpp"

#include <cstdio>
#include <cstdlib>

namespace curveatlas {

int sign_linear_sqrt(Int p, Int q, Int u) {
  if (u < Int(0)) {
    std::fprintf(stderr, "curveatlas: negative radicand\n");
    std::abort();
  }
  Int root;
  if (is_perfect_square(u, &root)) return (p + q * root).sign();
  if (q == Int(0)) return p.sign();
  // q*sqrt(u) is irrational, so the sum never vanishes.
  if (q > Int(0)) {
    if (p >= Int(0)) return 1;
    return q * q * u > p * p ? 1 : -1;
  }
  if (p <= Int(0)) return -1;
  return p * p > q * q * u ? 1 : -1;
}

int sign_two_sqrt(Int p, Int q, Int u, Int r, Int v) {
  Int root;
  if (is_perfect_square(u, &root)) return sign_linear_sqrt(p + q * root, r, v);
  if (is_perfect_square(v, &root)) return sign_linear_sqrt(p + r * root, q, u);
  if (q == Int(0)) return sign_linear_sqrt(p, r, v);
  if (r == Int(0)) return sign_linear_sqrt(p, q, u);
  if (is_perfect_square(u * v)) {
    // sqrt(u), sqrt(v) rationally dependent; never arises for our ranges.
    std::fprintf(stderr, "curveatlas: dependent radicals unsupported\n");
    std::abort();
  }
  // Split E = A + B with A = q*sqrt(u), B = p + r*sqrt(v). Both are nonzero
  // irrational numbers, and E itself cannot vanish (u*v is not a square).
  int sa = q.sign();
  int sb = sign_linear_sqrt(p, r, v);
  if (sa == sb) return sa;
  // Opposite signs: the larger magnitude wins. |A|^2 - |B|^2 equals
  // q^2 u - p^2 - r^2 v - 2 p r sqrt(v).
  int d = sign_linear_sqrt(q * q * u - p * p - r * r * v, Int(-2) * p * r, v);
  return d > 0 ? sa : sb;
}

}  // namespace curveatlas
