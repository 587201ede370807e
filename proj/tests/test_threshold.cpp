#include <doctest.h>

#include <stdexcept>

#include "pathmaj/threshold.hpp"

using pathmaj::Threshold;

TEST_SUITE("threshold") {
  TEST_CASE("decimal strings parse to exact reduced fractions") {
    CHECK(Threshold::parse_decimal("0.35") == Threshold(7, 20));
    CHECK(Threshold::parse_decimal("0.5") == Threshold(1, 2));
    CHECK(Threshold::parse_decimal(".1") == Threshold(1, 10));
    CHECK(Threshold::parse_decimal("0.050").to_string() == "1/20");
    CHECK(Threshold::parse_rational("2/6").to_string() == "1/3");
  }

  TEST_CASE("out-of-range and malformed thresholds are rejected") {
    for (const char* bad : {"0", "0.0", "1", "1.0", "1.5", "abc", "0.3x", "", ".", "-0.2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Threshold::parse_decimal(bad), std::invalid_argument);
    }
    for (const char* bad : {"1/0", "0/3", "3/3", "4/3", "1-2", "a/b", "1/"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Threshold::parse_rational(bad), std::invalid_argument);
    }
  }

  TEST_CASE("majority comparison is strict and exact") {
    const Threshold t = Threshold::parse_decimal("0.35");
    CHECK_FALSE(t.exceeded_by(7, 20));  // 7 == 0.35 * 20
    CHECK(t.exceeded_by(8, 20));
    CHECK(t.exceeded_by(2, 5));  // 2 > 1.75
    const Threshold third(1, 3);
    CHECK_FALSE(third.exceeded_by(1, 3));
    CHECK(third.exceeded_by(2, 3));
    CHECK(Threshold(1, 2).exceeded_by(1, 1));
  }

  TEST_CASE("minority admits counts between 1 and tau * len") {
    const Threshold t(1, 5);
    CHECK_FALSE(t.admits_minority(0, 5));
    CHECK(t.admits_minority(1, 5));
    CHECK_FALSE(t.admits_minority(2, 5));
  }

  TEST_CASE("derived quantities") {
    CHECK(Threshold(1, 2).halved() == Threshold(1, 4));
    CHECK(Threshold(2, 5).halved() == Threshold(1, 5));
    CHECK(Threshold(7, 20).halved() == Threshold(7, 40));
    CHECK(Threshold(1, 2).ceil_inverse() == 2);
    CHECK(Threshold(7, 20).ceil_inverse() == 3);
    CHECK(Threshold(9, 10).ceil_inverse() == 2);
    CHECK(Threshold(1, 10).floor_scaled_inverse(8) == 80);
    CHECK(Threshold(7, 20).floor_scaled_inverse(8) == 22);
    CHECK(Threshold(9, 10).floor_scaled_inverse(1) == 1);
    CHECK(Threshold(1, 3).value() == doctest::Approx(1.0 / 3));
  }
}
