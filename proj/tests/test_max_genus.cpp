#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveatlas/max_genus.hpp"

using namespace curveatlas;

TEST_CASE("printed values reproduce exactly") {
  struct Row {
    long long d, s, want;
  };
  for (Row r : {Row{36, 5, 147}, Row{50, 8, 251}, Row{57, 8, 315},
                Row{36, 6, 145}, Row{22, 5, 58}, Row{32, 6, 115},
                Row{50, 7, 252}}) {
    auto a = max_genus(r.d, r.s);
    REQUIRE(a.is_exact());
    CHECK(a.value == Int(r.want));
  }
  CHECK(max_genus(50, 8).regime == GenusRegime::ExtendedCRange);
  CHECK(max_genus(57, 8).regime == GenusRegime::CRange);
}

TEST_CASE("conjectural B-range fixtures") {
  auto a = max_genus(22, 6);
  REQUIRE(a.is_conjectural());
  CHECK(a.value == Int(55));
  auto b = max_genus(32, 7);
  REQUIRE(b.is_conjectural());
  CHECK(b.value == Int(111));
  // B-range point without a tabulated value
  CHECK(max_genus(25, 7).is_out_of_range());
}

TEST_CASE("monotone non-increasing in s where both values are exact") {
  for (long long d = 1; d <= 200; ++d) {
    for (long long s = 2; s <= 11; ++s) {
      auto a1 = max_genus(d, s);
      auto a2 = max_genus(d, s + 1);
      if (a1.is_exact() && a2.is_exact()) REQUIRE(a2.value <= a1.value);
    }
  }
}

TEST_CASE("C-range divisibility holds across the sweep") {
  // The closed formula divides by 2s; the internal assertion would throw on
  // any violation.
  for (long long d = 1; d <= 500; ++d)
    for (long long s = 2; s <= 15; ++s)
      if (d > s * (s - 1)) {
        auto a = max_genus(d, s);
        REQUIRE(a.is_exact());
        REQUIRE(a.regime == GenusRegime::CRange);
      }
}

TEST_CASE("regimes meet cleanly at the seam") {
  for (long long s = 4; s <= 12; ++s) {
    auto hi = max_genus(s * (s - 1) + 1, s);  // first C-range degree
    auto lo = max_genus(s * (s - 1), s);      // top of the extended range
    REQUIRE(hi.is_exact());
    REQUIRE(lo.is_exact());
    CHECK(hi.regime == GenusRegime::CRange);
    CHECK(lo.regime == GenusRegime::ExtendedCRange);
    CHECK(lo.value <= hi.value);
    // bottom of the extended range evaluates too
    REQUIRE(max_genus(s * s - 2 * s + 2, s).is_exact());
  }
}

TEST_CASE("exact values are non-negative for d >= 3") {
  for (long long d = 3; d <= 120; ++d)
    for (long long s = 2; s <= 12; ++s) {
      auto a = max_genus(d, s);
      if (a.is_exact()) REQUIRE(a.value >= Int(0));
    }
}

TEST_CASE("A/B bound fixtures") {
  CHECK(fixture_AB("A(7,7)") == Int(33));
  CHECK(fixture_AB("A(7,6)") == Int(28));
  CHECK(fixture_AB("B(7,6)") == Int(31));
  CHECK(fixture_AB("A(6,5)") == Int(23));
  CHECK_THROWS_AS(fixture_AB("A(9,9)"), std::out_of_range);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(max_genus(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(max_genus(10, 1), std::invalid_argument);
}
