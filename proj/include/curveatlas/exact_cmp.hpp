#pragma once

#include "curveatlas/checked_int.hpp"

namespace curveatlas {

// Exact sign computations for expressions mixing integers and square roots.
// All range boundaries in this project are decided through these (or through
// plain cross-multiplied integer comparisons); no floating point is involved.

// sign of p + q*sqrt(u), u >= 0
int sign_linear_sqrt(Int p, Int q, Int u);

// sign of p + q*sqrt(u) + r*sqrt(v), u, v >= 0.
// Requires u*v not to be a perfect square when both radicals are irrational
// (holds for every invocation in this project; violations abort).
int sign_two_sqrt(Int p, Int q, Int u, Int r, Int v);

}  // namespace curveatlas
