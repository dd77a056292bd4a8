#include "curveatlas/audit.hpp"

#include <stdexcept>

#include "curveatlas/classifier.hpp"
#include "curveatlas/cubic.hpp"
#include "curveatlas/max_genus.hpp"
#include "curveatlas/picard.hpp"

namespace curveatlas {

Int chi_ideal(Int d, Int g, Int n) {
  if (n < Int(0)) throw std::invalid_argument("chi_ideal: n must be >= 0");
  return binom(n + 3, 3) - (d * n + 1 - g);
}

Int maxrank_h0_normal(Int d, Int hom_minus4, Int hom_0) {
  if (hom_minus4 < Int(0) || hom_0 < Int(0))
    throw std::invalid_argument("maxrank_h0_normal: Hom dimensions must be >= 0");
  return Int(4) * d + hom_minus4 + hom_0;
}

Int clifford_h0_upper(Int d, Int g, Int n) {
  if (n < Int(1)) throw std::invalid_argument("clifford_h0_upper: n must be >= 1");
  Int lin = n * d - g;
  Int half = floor_div(n * d, 2);
  return Int(1) + (lin > half ? lin : half);
}

Int component_dim_bound(Int s, Int d, Int g, Int h0_oc_s_minus_4) {
  if (!(d > s * s))
    throw std::domain_error("RangeError: component_dim_bound needs d > s^2");
  Int t1 = floor_div(d * d, s) - g;
  Int t2 = floor_div(d * d, Int(2) * s);
  Int t3 = (Int(4) - s) * d + g - 1 + h0_oc_s_minus_4;
  Int mx = t1 > t2 ? t1 : t2;
  if (t3 > mx) mx = t3;
  return binom(s + 3, 3) - 1 + mx;
}

std::pair<Int, Int> linkage_transform(Int dZ, Int gZ, Int f1_deg, Int f2_deg) {
  Int prod = f1_deg * f2_deg;
  if (!(prod > dZ && dZ >= Int(1)))
    throw std::invalid_argument("linkage_transform: requires f1*f2 > dZ >= 1");
  Int dX = prod - dZ;
  if (dX <= Int(0))
    throw std::domain_error("DegenerateLinkage: residual degree not positive");
  Int num = (f1_deg + f2_deg - 4) * (prod - Int(2) * dZ);
  if (num % Int(2) != Int(0))
    throw std::logic_error("linkage_transform: genus shift not integral");
  return {dX, gZ + num / 2};
}

Int null_correlation_chi(Int t) {
  Int num = t * t * t + Int(6) * t * t + Int(8) * t;
  if (num % Int(3) != Int(0))
    throw std::logic_error("null_correlation_chi: value not integral");
  return num / 3;
}

Int serre_moduli_dim(Int dim_moduli, Int h0_bundle, Int h0_omega_twist) {
  if (dim_moduli < Int(0) || h0_bundle < Int(0) || h0_omega_twist < Int(0))
    throw std::invalid_argument("serre_moduli_dim: inputs must be >= 0");
  return dim_moduli + h0_bundle - h0_omega_twist;
}

bool AuditTranscript::all_unflagged_match() const {
  for (const auto& r : rows)
    if (!r.flagged && !r.matches()) return false;
  return true;
}

bool AuditTranscript::has_flagged_row() const {
  for (const auto& r : rows)
    if (r.flagged) return true;
  return false;
}

namespace {

void check(AuditTranscript& t, std::string label, Int computed, Int printed) {
  t.rows.push_back({std::move(label), computed, printed, false});
}

void note(AuditTranscript& t, std::string label, Int computed) {
  t.rows.push_back({std::move(label), computed, std::nullopt, false});
}

void discrepancy(AuditTranscript& t, std::string label, Int computed,
                 Int printed) {
  t.rows.push_back({std::move(label), computed, printed, true});
}

Int exact_max_genus(Int d, Int s) {
  auto a = max_genus(d, s);
  if (!a.is_exact())
    throw std::logic_error("audit: expected exact max genus value");
  return a.value;
}

Int conjectural_max_genus(Int d, Int s) {
  auto a = max_genus(d, s);
  if (!a.is_conjectural())
    throw std::logic_error("audit: expected conjectural max genus value");
  return a.value;
}

AuditTranscript case_q12_8() {
  AuditTranscript t{"Q12_8", {}};
  SurfaceContext ctx(4);
  DivisorClass c{12, 8};
  Int d = degree_of(c, ctx), g = genus_of(c, ctx);
  check(t, "d of class (12,8), s=4", d, 36);
  check(t, "g of class (12,8), s=4", g, 145);
  check(t, "G(36,5)", exact_max_genus(36, 5), 147);
  check(t, "G(36,6)", exact_max_genus(36, 6), 145);
  Int dw = dim_w(4, d, g);
  check(t, "dim W = g + 33", dw, 178);

  // Generization with minimal surface degree 5 is ACM; its normal bundle
  // sections are counted by the maximal-rank formula.
  Int chi5 = chi_ideal(d, g, 5);
  check(t, "chi(I_X(5))", chi5, 20);
  check(t, "h1(O_X(5)) = chi(I_X(5)) - h0(I_X(5)), h0 = 1", chi5 - 1, 19);
  Int chi8 = chi_ideal(d, g, 8);
  check(t, "chi(I_X(8))", chi8, 21);
  check(t, "h1(O_X(8)) upper bound = chi(I_X(8)) - 20 (quintic multiples)",
        chi8 - 20, 1);
  Int h0n = maxrank_h0_normal(d, 0, 19);
  check(t, "h0(N_X) = 4d + 0 + 19", h0n, 163);
  check(t, "contradiction: h0(N_X) < dim W", Int(h0n < dw ? 1 : 0), 1);

  // Minimal surface degree >= 6 forces a complete intersection (6,6).
  check(t, "g equals G(36,6)", g, exact_max_genus(36, 6));
  note(t, "d mod 6", d % 6);
  Int chi6 = chi_ideal(d, g, 6);
  check(t, "chi(I_X(6))", chi6, 12);
  check(t, "h1(O_X(6)) = chi(I_X(6)) - h0(I_X(6)), h0 = 2", chi6 - 2, 10);
  Int dim_ci = Int(4) * d + Int(2) * (chi6 - 2);
  check(t, "dim at X = 4d + 2 h1(O_X(6))", dim_ci, 164);
  check(t, "contradiction: 164 < dim W", Int(dim_ci < dw ? 1 : 0), 1);
  return t;
}

AuditTranscript case_q7_5() {
  AuditTranscript t{"Q7_5", {}};
  SurfaceContext ctx(4);
  DivisorClass c{7, 5};
  Int d = degree_of(c, ctx), g = genus_of(c, ctx);
  check(t, "d of class (7,5), s=4", d, 22);
  check(t, "g of class (7,5), s=4", g, 57);
  check(t, "chi(I_C(5))", chi_ideal(d, g, 5), 2);
  check(t, "chi(I_C(6))", chi_ideal(d, g, 6), 8);
  check(t, "G(22,5)", exact_max_genus(22, 5), 58);
  note(t, "g = G(22,5) - 1", exact_max_genus(22, 5) - g);
  Int dw = dim_w(4, d, g);
  check(t, "dim W = g + 33", dw, 90);

  // Minimal surface degree 6: h1(O_X(5)) >= 2 puts d below the B-range bound.
  check(t, "h1(O_X(5)) lower bound = chi(I_C(5)) - h0(I_X(5)=0)",
        chi_ideal(d, g, 5), 2);
  check(t, "A(6,5) fixture", fixture_AB("A(6,5)"), 23);
  check(t, "contradiction: d < A(6,5)", Int(d < fixture_AB("A(6,5)") ? 1 : 0),
        1);
  check(t, "G(22,6) (conjectured B-range value)", conjectural_max_genus(22, 6),
        55);
  check(t, "contradiction: g > G(22,6)",
        Int(g > conjectural_max_genus(22, 6) ? 1 : 0), 1);

  // Minimal surface degree 5: bilinked through (5,4) then (5,8) to a
  // degree-2 curve with genus -1.
  auto [d1, g1] = linkage_transform(2, -1, 5, 4);
  note(t, "bilinkage step 1 degree", d1);
  note(t, "bilinkage step 1 genus", g1);
  auto [d2, g2] = linkage_transform(d1, g1, 5, 8);
  check(t, "bilinkage endpoint degree", d2, 22);
  check(t, "bilinkage endpoint genus", g2, 57);
  Int h0n = maxrank_h0_normal(d, 0, 2);
  check(t, "h0(N_X) <= 4d + 2 (h1(I_X(4))=1, h1(O_X(5))=1)", h0n, 90);
  check(t, "contradiction: h0(N_X) <= dim W", Int(h0n <= dw ? 1 : 0), 1);
  Int h0n_acm = maxrank_h0_normal(d, 0, 1);
  check(t, "ACM branch: h0(N_X) <= 4d + 1", h0n_acm, 89);
  check(t, "contradiction: 89 < dim W", Int(h0n_acm < dw ? 1 : 0), 1);
  return t;
}

AuditTranscript case_q8_6_s5() {
  AuditTranscript t{"Q8_6_s5", {}};
  SurfaceContext ctx(5);
  DivisorClass c{8, 6};
  Int d = degree_of(c, ctx), g = genus_of(c, ctx);
  check(t, "d of class (8,6), s=5", d, 32);
  check(t, "g of class (8,6), s=5", g, 113);
  check(t, "G(32,6)", exact_max_genus(32, 6), 115);
  note(t, "g = G(32,6) - 2", exact_max_genus(32, 6) - g);
  Int dw = dim_w(5, d, g);
  check(t, "dim W = -d + g + 56", dw, 137);

  // Minimal surface degree >= 7: B-range bounds.
  check(t, "A(7,7) fixture", fixture_AB("A(7,7)"), 33);
  check(t, "A(7,6) fixture", fixture_AB("A(7,6)"), 28);
  check(t, "B(7,6) fixture", fixture_AB("B(7,6)"), 31);
  check(t, "contradiction: d < A(7,7)", Int(d < fixture_AB("A(7,7)") ? 1 : 0),
        1);
  check(t, "G(32,7) (conjectured B-range value)", conjectural_max_genus(32, 7),
        111);
  check(t, "contradiction: g > G(32,7)",
        Int(g > conjectural_max_genus(32, 7) ? 1 : 0), 1);

  // Minimal surface degree 6: bilinked through (6,5) then (6,10) to a
  // degree-2 curve with genus -2.
  auto [d1, g1] = linkage_transform(2, -2, 6, 5);
  note(t, "bilinkage step 1 degree", d1);
  note(t, "bilinkage step 1 genus", g1);
  auto [d2, g2] = linkage_transform(d1, g1, 6, 10);
  check(t, "bilinkage endpoint degree", d2, 32);
  check(t, "bilinkage endpoint genus", g2, 113);
  check(t, "h1(I_X(4)) fixture", 1, 1);
  check(t, "h1(O_X(6)) fixture (= 4 + h1(O_Z(1)))", 4, 4);
  check(t, "h1(O_X(7)) fixture (= 1 + h1(O_Z(2)))", 1, 1);
  check(t, "Hom_0 bound = h1(O_X(6)) + 3 h1(O_X(7))", Int(4 + 3 * 1), 7);
  Int h0n = maxrank_h0_normal(d, 1, 7);
  check(t, "h0(N_X) <= 4d + 1 + 7", h0n, 136);
  check(t, "contradiction: h0(N_X) < dim W", Int(h0n < dw ? 1 : 0), 1);

  // ACM branch.
  Int chi6 = chi_ideal(d, g, 6);
  check(t, "chi(I_X(6))", chi6, 4);
  check(t, "chi(I_X(7))", chi_ideal(d, g, 7), 8);
  check(t, "h0(I_X(6))=1 branch: h1(O_X(6)) = chi - 1", chi6 - 1, 3);
  check(t, "h0(I_X(6))=1 branch: h1(O_X(8)) fixture", 0, 0);
  auto [d4, g4] = linkage_transform(d, g, 6, 6);
  check(t, "h0(I_X(6))=2 branch: linked (6,6) degree", d4, 4);
  check(t, "h0(I_X(6))=2 branch: linked (6,6) genus", g4, 1);
  check(t, "h0(I_X(6))=2 branch: Hom_0 fixture", 4, 4);
  Int h0n_acm = maxrank_h0_normal(d, 0, 7);
  check(t, "ACM branch: h0(N_X) <= 4d + 7", h0n_acm, 135);
  check(t, "contradiction: 135 < dim W", Int(h0n_acm < dw ? 1 : 0), 1);
  return t;
}

AuditTranscript case_q10_8_s6() {
  AuditTranscript t{"Q10_8_s6", {}};
  SurfaceContext ctx(6);
  DivisorClass c{10, 8};
  Int d = degree_of(c, ctx), g = genus_of(c, ctx);
  check(t, "d of class (10,8), s=6", d, 50);
  check(t, "g of class (10,8), s=6", g, 251);
  check(t, "G(50,7)", exact_max_genus(50, 7), 252);
  note(t, "g = G(50,7) - 1", exact_max_genus(50, 7) - g);
  Int dw = dim_w(6, d, g);
  check(t, "dim W = -2d + g + 84 + 10 - 5", dw, 240);

  // Minimal surface degree 7: the residual class lands on the extended-range
  // boundary t^2 - 2t + 2 = 50 with t = 8.
  check(t, "residual r (50 + r = 0 mod 7)", ((-d) % 7 + 7) % 7, 6);
  check(t, "t^2 - 2t + 2 at t = 8", Int(8 * 8 - 16 + 2), 50);
  check(t, "G(50,8) = 1 + d(t-3)", exact_max_genus(50, 8), 251);

  // Minimal surface degree >= 8: zero-section of the null-correlation bundle.
  Int h0f = null_correlation_chi(7);
  check(t, "h0(E(7)) by Riemann-Roch", h0f, 231);
  check(t, "dim M(0,1,0) fixture", 5, 5);
  check(t, "h0(omega_X(-10)) fixture", 1, 1);
  Int dv = serre_moduli_dim(5, h0f, 1);
  check(t, "dim V = dim M + h0(F) - h0(omega_X(-10))", dv, 235);
  check(t, "contradiction: dim V < dim W", Int(dv < dw ? 1 : 0), 1);
  return t;
}

AuditTranscript case_cubic_57_315() {
  AuditTranscript t{"CUBIC_57_315", {}};
  Int d = 57;
  Int g = exact_max_genus(d, 8);
  check(t, "g = G(57,8)", g, 315);
  check(t, "residual r (57 + r = 0 mod 8)", ((-d) % 8 + 8) % 8, 7);
  Int r = 7;
  Int plane_genus = binom(r - 1, 2);
  note(t, "plane curve X' genus = binom(6,2)", plane_genus);
  auto [dx, gx] = linkage_transform(r, plane_genus, 8, 8);
  check(t, "linkage (8,8) of (7,15): degree", dx, 57);
  check(t, "linkage (8,8) of (7,15): genus", gx, 315);
  // Liaison sends h1(O_X(v)) to h0(I_X'(12-v)); quartics (resp. cubics)
  // containing the plane curve are plane times cubics (resp. conics).
  Int h18 = binom(Int(3) + 3, 3);
  check(t, "h1(O_X(8)) = h0(I_X'(4)) = h0(O(3))", h18, 20);
  Int h19 = binom(Int(2) + 3, 3);
  check(t, "h1(O_X(9)) = h0(I_X'(3)) = h0(O(2))", h19, 10);
  // The printed total 285 does not match 4d + 3*20 - 10 = 278; both values
  // stay below dim W, so the conclusion is unaffected. Kept as a flagged
  // discrepancy; neither number is adopted as ground truth.
  Int dv = Int(4) * d + Int(3) * h18 - h19;
  discrepancy(t, "dim V = 4d + 3 h1(O_X(8)) - h1(O_X(9))", dv, 285);
  Int dw = dim_w_cubic(d, g);
  check(t, "dim W = d + g + 18", dw, 390);
  check(t, "contradiction (computed dim V): 278 < dim W",
        Int(dv < dw ? 1 : 0), 1);
  check(t, "contradiction (printed dim V): 285 < dim W",
        Int(Int(285) < dw ? 1 : 0), 1);
  return t;
}

}  // namespace

AuditTranscript audit_case(AuditCase c) {
  switch (c) {
    case AuditCase::Q12_8: return case_q12_8();
    case AuditCase::Q7_5: return case_q7_5();
    case AuditCase::Q8_6_s5: return case_q8_6_s5();
    case AuditCase::Q10_8_s6: return case_q10_8_s6();
    case AuditCase::CUBIC_57_315: return case_cubic_57_315();
  }
  throw std::invalid_argument("audit_case: unknown case");
}

std::optional<AuditCase> audit_case_from_string(const std::string& name) {
  if (name == "Q12_8") return AuditCase::Q12_8;
  if (name == "Q7_5") return AuditCase::Q7_5;
  if (name == "Q8_6_s5") return AuditCase::Q8_6_s5;
  if (name == "Q10_8_s6") return AuditCase::Q10_8_s6;
  if (name == "CUBIC_57_315") return AuditCase::CUBIC_57_315;
  return std::nullopt;
}

std::vector<std::string> audit_case_names() {
  return {"Q12_8", "Q7_5", "Q8_6_s5", "Q10_8_s6", "CUBIC_57_315"};
}

const char* to_string(AuditCase c) {
  switch (c) {
    case AuditCase::Q12_8: return "Q12_8";
    case AuditCase::Q7_5: return "Q7_5";
    case AuditCase::Q8_6_s5: return "Q8_6_s5";
    case AuditCase::Q10_8_s6: return "Q10_8_s6";
    case AuditCase::CUBIC_57_315: return "CUBIC_57_315";
  }
  return "?";
}

}  // namespace curveatlas
