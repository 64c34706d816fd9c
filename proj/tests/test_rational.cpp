#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gik/error.hpp"
#include "gik/rational.hpp"

using namespace gik;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(to_string(Rational(22)) == "22");
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("floor and ceil") {
  CHECK(floor_div(Rational(7, 2)) == 3);
  CHECK(floor_div(Rational(-7, 2)) == -4);
  CHECK(ceil_div(Rational(7, 2)) == 4);
  CHECK(ceil_div(Rational(-7, 2)) == -3);
  CHECK(floor_ratio(Rational(5), Rational(1, 3)) == 15);
}

TEST_CASE("exact ceil log") {
  CHECK(ceil_log(Rational(5, 4), Rational(3)) == 5);      // (5/4)^4 < 3 <= (5/4)^5
  CHECK(ceil_log(Rational(2), Rational(8)) == 3);         // exact power
  CHECK(ceil_log(Rational(2), Rational(1)) == 0);
}

TEST_CASE("ln upper bound is outward and tight") {
  // Compare against interval brackets of the true logarithm.
  struct Bracket { Rational x, lo, hi; };
  const Bracket cases[] = {
      {Rational(1), Rational(0), Rational(1, 1000000)},
      {Rational(2), Rational(693147, 1000000), Rational(693148, 1000000)},
      {Rational(10), Rational(2302585, 1000000), Rational(2302586, 1000000)},
      {Rational(1000), Rational(6907755, 1000000), Rational(6907756, 1000000)},
  };
  for (const auto& c : cases) {
    const Rational ub = ln_upper_bound(c.x);
    CHECK(ub >= c.lo);          // never below the true value
    CHECK(ub <= c.hi + Rational(1, 1000000));  // and close above it
  }
  CHECK_THROWS_AS(ln_upper_bound(Rational(1, 2)), Error);
}
