#include <doctest.h>

#include <stdexcept>

#include "bakerlab/rational.hpp"

using namespace bakerlab;

TEST_SUITE("rational") {

TEST_CASE("floor and mod follow the mathematical convention for negatives") {
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(floor_of(Rational(-2)) == -2);
  CHECK(floor_of(Rational(7, 3)) == 2);
  CHECK(mod(Rational(-1, 4), Rational(1)) == Rational(3, 4));
  CHECK(mod(Rational(5, 2), Rational(2)) == Rational(1, 2));
  CHECK(frac(Rational(3)) == Rational(0));
  CHECK_THROWS_AS(mod(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("lcm of rationals") {
  CHECK(lcm(Rational(1, 2), Rational(1, 3)) == Rational(1));
  CHECK(lcm(Rational(3, 4), Rational(1)) == Rational(3));
  CHECK(lcm(Rational(2, 3), Rational(1, 2)) == Rational(2));
  CHECK_THROWS(lcm(Rational(0), Rational(1)));
}

TEST_CASE("turns is exact at quarter turns") {
  CHECK(turns(Rational(0)) == Complex(1, 0));
  CHECK(turns(Rational(1, 2)) == Complex(-1, 0));
  CHECK(turns(Rational(-3, 4)) == Complex(0, 1));
  CHECK(turns(Rational(7, 4)) == Complex(0, -1));
  const Complex z = turns(Rational(1, 8));
  CHECK(z.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("parse and format round trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational(" -1/2 ") == Rational(-1, 2));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(format_rational(Rational(6, 8)) == "3/4");
  CHECK(format_rational(Rational(-3)) == "-3");
  for (const char* bad : {"0.5", "", "1/0", "a/b", "1/2/3", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

}
