#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curveatlas/checked_int.hpp"

namespace curveatlas {

// Replays, as pure integer arithmetic, the numeric chains behind the four
// quartic/quintic/sextic non-existence arguments and the d=57 cubic case.
// Each chain becomes a transcript of rows comparing recomputed values with
// the printed ones; rows flagged as known discrepancies are exempt from the
// match requirement but remain in the transcript.

// chi(I_X(n)) in P^3 = binom(n+3,3) - (dn + 1 - g), n >= 0.
Int chi_ideal(Int d, Int g, Int n);

// h^0(N_X) for maximal-rank curves:
// 4d + dim Hom_(-4)(I(X), H^1_*(I_X)) + dim Hom_0(I(X), H^1_*(O_X)).
// The Hom dimensions are fixture inputs, carried with citations.
Int maxrank_h0_normal(Int d, Int hom_minus4, Int hom_0);

// Clifford-style bound: h^0(O_X(n)) <= 1 + max(nd - g, floor(nd/2)), n >= 1.
Int clifford_h0_upper(Int d, Int g, Int n);

// Dimension bound for components whose general curve sits on an integral
// degree-s surface, d > s^2:
// binom(s+3,3) - 1 + max(floor(d^2/s) - g, floor(d^2/2s), (4-s)d+g-1+h0).
// Throws std::domain_error ("RangeError") when d <= s^2.
Int component_dim_bound(Int s, Int d, Int g, Int h0_oc_s_minus_4);

// Liaison through a complete intersection of type (f1,f2):
// dX = f1 f2 - dZ,  gX = gZ + (f1+f2-4)(f1 f2 - 2 dZ)/2 (always integral).
// Requires f1 f2 > dZ >= 1; throws std::domain_error ("DegenerateLinkage")
// if the residual degree fails to be positive.
std::pair<Int, Int> linkage_transform(Int dZ, Int gZ, Int f1_deg, Int f2_deg);

// chi(E(t)) for the null-correlation bundle (c1=0, c2=1):
// (t^3 + 6t^2 + 8t)/3, asserted integral. For t >= 0 this equals h^0(E(t)).
Int null_correlation_chi(Int t);

// Solves the moduli/Hilbert-scheme dimension relation
// dim M + h^0(F) = dim H(d,g) + h^0(omega_X(-c1+4)) for dim H(d,g).
Int serre_moduli_dim(Int dim_moduli, Int h0_bundle, Int h0_omega_twist);

struct AuditRow {
  std::string label;
  Int computed;
  std::optional<Int> printed;  // absent for intermediate (unprinted) steps
  bool flagged = false;        // known discrepancy; exempt from matching

  bool matches() const {
    return !printed.has_value() || computed == *printed;
  }
};

struct AuditTranscript {
  std::string case_id;
  std::vector<AuditRow> rows;

  bool all_unflagged_match() const;
  bool has_flagged_row() const;
};

enum class AuditCase { Q12_8, Q7_5, Q8_6_s5, Q10_8_s6, CUBIC_57_315 };

AuditTranscript audit_case(AuditCase c);
std::optional<AuditCase> audit_case_from_string(const std::string& name);
std::vector<std::string> audit_case_names();
const char* to_string(AuditCase c);

}  // namespace curveatlas
