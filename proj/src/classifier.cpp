#include "curveatlas/classifier.hpp"

namespace curveatlas {

namespace {

constexpr const char* kPicardAssumption =
    "Pic(S) = Z f1 + Z f2 (S very general); recorded, not checked";

std::optional<CriticalFamilyTag> detect_critical_family(Int s, Int a, Int b) {
  // Solve (a,b) = ((s-1)n - mu, (s-2)n - mu + 1): subtracting gives
  // n = a - b + 1, then mu = (s-1)n - a, and the b-equation is automatic.
  Int n = a - b + 1;
  if (n < Int(3)) return std::nullopt;
  Int mu = (s - 1) * n - a;
  if (b != (s - 2) * n - mu + 1) return std::nullopt;
  if (mu == s - 3) return CriticalFamilyTag{CriticalFamily::A, n};
  if (mu == s - 2) return CriticalFamilyTag{CriticalFamily::B, n};
  if (mu == s - 1) return CriticalFamilyTag{CriticalFamily::C, n};
  return std::nullopt;
}

bool is_exceptional_triple(Int s, Int a, Int b) {
  return s == Int(4) && ((a == Int(6) && b == Int(4)) ||
                         (a == Int(9) && b == Int(6)));
}

}  // namespace

Int dim_w(Int s, Int d, Int g) {
  return (Int(4) - s) * d + g + binom(s + 3, 3) + binom(s - 1, 3) - s + 1;
}

Int dim_a1_minus_a2(Int s, Int d, Int g) {
  return (Int(4) - s) * d + g + binom(s + 3, 3) - 2;
}

FamilyReport classify(Int s, Int a, Int b) {
  SurfaceContext ctx(s);
  DivisorClass c{a, b};

  FamilyReport rep;
  rep.s = s;
  rep.a = a;
  rep.b = b;
  rep.d = degree_of(c, ctx);
  rep.g = genus_of(c, ctx);
  rep.t = t_invariant(c, ctx);
  rep.dim_w = dim_w(s, rep.d, rep.g);
  rep.h1_ideal_s = h1_ideal(c, s, ctx);
  rep.critical_family = detect_critical_family(s, a, b);
  rep.assumption = kPicardAssumption;

  // Hypothesis gate, conditions tested in a fixed documented order so the
  // failure reason is deterministic.
  if (!(rep.d > s * s)) {
    rep.theorem_case = TheoremCase::HypothesisFailed;
    rep.failed_condition = "d <= s^2";
    return rep;
  }
  if (a == b) {
    rep.theorem_case = TheoremCase::HypothesisFailed;
    rep.failed_condition = "a == b";
    return rep;
  }
  if (!(a > s - 4)) {
    rep.theorem_case = TheoremCase::HypothesisFailed;
    rep.failed_condition = "a <= s-4";
    return rep;
  }
  if (!has_smooth_irreducible_member(c, ctx)) {
    rep.theorem_case = TheoremCase::HypothesisFailed;
    rep.failed_condition = "no smooth irreducible member";
    return rep;
  }

  if (is_exceptional_triple(s, a, b)) {
    rep.theorem_case = TheoremCase::ExceptionalTriple;
    rep.status = ComponentStatus::UniqueMaximalFamily;
    rep.status_note = "family uniqueness holds; component status left open";
    return rep;
  }

  Int lhs = (s - 1) * b;       // (s-1) b
  Int mid = (s - 2) * a;       // (s-2) a
  bool is_s1_s = (a == s + 1 && b == s);

  if ((s < a && mid < lhs - 2) || is_s1_s) {
    rep.theorem_case = TheoremCase::CaseII;
    rep.status = ComponentStatus::GenericallySmoothComponent;
    return rep;
  }

  if (lhs - 2 <= mid && mid <= lhs && !is_s1_s) {
    rep.theorem_case = TheoremCase::CaseIII;
    if (s == Int(4)) {
      rep.status = ComponentStatus::NonReducedComponent;
    } else if (s == Int(5) && a % Int(4) == Int(0) && b % Int(3) == Int(0) &&
               a / 4 == b / 3 && a / 4 >= Int(2)) {
      // (a,b) = (4k,3k), k >= 2
      rep.status = ComponentStatus::NonReducedComponent;
    } else {
      rep.status = ComponentStatus::ConjecturedNonReduced;
    }
    return rep;
  }

  rep.theorem_case = TheoremCase::CaseIOnly;
  rep.status = ComponentStatus::IrreducibleComponent;
  return rep;
}

const char* to_string(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::Undetermined: return "Undetermined";
    case ComponentStatus::UniqueMaximalFamily: return "UniqueMaximalFamily";
    case ComponentStatus::IrreducibleComponent: return "IrreducibleComponent";
    case ComponentStatus::ConjecturedNonReduced: return "ConjecturedNonReduced";
    case ComponentStatus::GenericallySmoothComponent:
      return "GenericallySmoothComponent";
    case ComponentStatus::NonReducedComponent: return "NonReducedComponent";
  }
  return "?";
}

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::HypothesisFailed: return "HypothesisFailed";
    case TheoremCase::ExceptionalTriple: return "ExceptionalTriple";
    case TheoremCase::CaseII: return "CaseII";
    case TheoremCase::CaseIII: return "CaseIII";
    case TheoremCase::CaseIOnly: return "CaseIOnly";
  }
  return "?";
}

const char* to_string(CriticalFamily f) {
  switch (f) {
    case CriticalFamily::A: return "A";
    case CriticalFamily::B: return "B";
    case CriticalFamily::C: return "C";
  }
  return "?";
}

}  // namespace curveatlas
