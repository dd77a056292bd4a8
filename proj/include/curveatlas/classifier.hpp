#pragma once

#include <optional>
#include <string>

#include "curveatlas/picard.hpp"

namespace curveatlas {

// Classification of curve classes C = a*f1 + b*f2 on smooth degree-s
// surfaces (s >= 4) containing a line: window tests for the generically
// smooth and non-reduced regimes, dim W, h^1(I_C(s)), and detection of the
// three one-parameter critical families on the nef-cone boundary.

// Ordered by strength: everything from IrreducibleComponent upward implies
// that the family closure is an irreducible component of the Hilbert scheme.
enum class ComponentStatus {
  Undetermined = 0,
  UniqueMaximalFamily = 1,
  IrreducibleComponent = 2,
  ConjecturedNonReduced = 3,
  GenericallySmoothComponent = 4,
  NonReducedComponent = 5,
};

inline bool implies_irreducible_component(ComponentStatus s) {
  return s >= ComponentStatus::IrreducibleComponent;
}

enum class TheoremCase {
  HypothesisFailed,
  ExceptionalTriple,
  CaseII,
  CaseIII,
  CaseIOnly,
};

// The three families (a,b) = ((s-1)n - mu, (s-2)n - mu + 1), n >= 3, with
// mu = s-3 (A), s-2 (B), s-1 (C); family C sits on the nef-cone border.
enum class CriticalFamily { A, B, C };

struct CriticalFamilyTag {
  CriticalFamily family;
  Int n;
};

struct FamilyReport {
  Int s, a, b;
  Int d, g, t;
  Int dim_w;
  CohomologyAnswer h1_ideal_s = CohomologyAnswer::unknown("unset");
  TheoremCase theorem_case = TheoremCase::HypothesisFailed;
  std::string failed_condition;  // set only for HypothesisFailed
  ComponentStatus status = ComponentStatus::Undetermined;
  std::string status_note;  // set where the status needs qualification
  std::optional<CriticalFamilyTag> critical_family;
  std::string assumption;  // recorded, not checked
};

// dim W = (4-s)d + g + binom(s+3,3) + binom(s-1,3) - s + 1
Int dim_w(Int s, Int d, Int g);

// dim A^1 - dim A^2 = (4-s)d + g + binom(s+3,3) - 2; coincides with dim_w
// when s = 4.
Int dim_a1_minus_a2(Int s, Int d, Int g);

// Full decision procedure for (s,a,b), s >= 4. All window comparisons are
// exact integer cross-multiplications. Failures are encoded in the report;
// this never throws for s >= 4.
FamilyReport classify(Int s, Int a, Int b);

const char* to_string(ComponentStatus s);
const char* to_string(TheoremCase c);
const char* to_string(CriticalFamily f);

}  // namespace curveatlas
