#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "curveatlas/checked_int.hpp"

namespace curveatlas {

// Maximum genus G(d,s) of smooth connected space curves of degree d lying on
// no surface of degree s-1. Closed formulas cover the C-range d > s(s-1) and
// the extended C-range s(s-1) >= d >= s^2-2s+2; a small fixture table carries
// the handful of B-range values we need, tagged Conjectural.

enum class GenusRegime { CRange, ExtendedCRange };

struct MaxGenusAnswer {
  enum class Kind { Exact, Conjectural, OutOfRange };
  Kind kind;
  Int value;                 // meaningful for Exact and Conjectural
  GenusRegime regime;        // meaningful for Exact
  std::string note;          // citation text (Conjectural) or reason (OutOfRange)

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_conjectural() const { return kind == Kind::Conjectural; }
  bool is_out_of_range() const { return kind == Kind::OutOfRange; }

  static MaxGenusAnswer exact(Int v, GenusRegime r);
  static MaxGenusAnswer conjectural(Int v, std::string source);
  static MaxGenusAnswer out_of_range(std::string reason);
};

struct BRangeFixture {
  Int value;
  std::string source;
};

// Read-only table of B-range maximum-genus values, keyed by (d,s).
class BRangeFixtures {
 public:
  static const BRangeFixtures& builtin();
  static BRangeFixtures from_json_file(const std::string& path);

  std::optional<BRangeFixture> lookup(Int d, Int s) const;
  void insert(Int d, Int s, Int value, std::string source);

 private:
  std::map<std::pair<long long, long long>, BRangeFixture> table_;
};

// G(d,s) for d >= 1, s >= 2. Throws std::invalid_argument on bad input and
// std::logic_error ("NonIntegerG") if a divisibility assertion fails (it
// cannot for in-range formulas; the check guards transcription bugs).
MaxGenusAnswer max_genus(Int d, Int s);
MaxGenusAnswer max_genus(Int d, Int s, const BRangeFixtures& fixtures);

// Tabulated values of the A(k,f)/B(k,f) bounds used by the audit chains.
// Pure lookup; throws std::out_of_range ("UnknownFixture") for other keys.
Int fixture_AB(const std::string& key);

}  // namespace curveatlas
