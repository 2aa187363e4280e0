#include <stdexcept>

#include "doctest.h"
#include "singspec/linalg.hpp"
#include "singspec/rational.hpp"

using namespace singspec;

TEST_CASE("rational strings are in lowest terms") {
  CHECK(to_string(make_rational(10, 12)) == "5/6");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
  CHECK(to_string(make_rational(0, 5)) == "0");
}

TEST_CASE("parse_rational accepts p/q and p only") {
  CHECK(parse_rational("5/6") == make_rational(5, 6));
  CHECK(parse_rational("-2/4") == make_rational(-1, 2));
  CHECK(parse_rational("3") == 3);
  for (const char* bad : {"0.5", "1e3", " 1/2", "1/0", "", "/2", "1/", "1/-2", "+1", "1//2", "a/b"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("floor and ceil are exact on negatives") {
  CHECK(floor_i64(make_rational(-1, 3)) == -1);
  CHECK(ceil_i64(make_rational(-1, 3)) == 0);
  CHECK(floor_i64(make_rational(7, 2)) == 3);
  CHECK(ceil_i64(make_rational(7, 2)) == 4);
  CHECK(ceil_i64(Rational(5)) == 5);
  CHECK(is_integral(make_rational(6, 3)));
  CHECK_FALSE(is_integral(make_rational(5, 6)));
}

TEST_CASE("lcm and sort_unique") {
  CHECK(lcm_of({2, 3, 0, 4}) == 12);
  std::vector<Rational> v{make_rational(1, 2), make_rational(2, 4), make_rational(1, 3)};
  sort_unique(v);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == make_rational(1, 3));
}

TEST_CASE("rank and definiteness") {
  RationalMatrix m(3, 3);
  m(0, 0) = -3; m(0, 2) = 1;
  m(1, 1) = -2; m(1, 2) = 1;
  m(2, 0) = 1; m(2, 1) = 1; m(2, 2) = -1;
  CHECK(is_negative_definite(m));
  CHECK(rank(m) == 3);
  m(2, 2) = 0;
  CHECK_FALSE(is_negative_definite(m));

  RationalMatrix singular(2, 3);
  singular(0, 0) = 1; singular(0, 1) = 2; singular(0, 2) = 3;
  singular(1, 0) = 2; singular(1, 1) = 4; singular(1, 2) = 6;
  CHECK(rank(singular) == 1);
}
