#include <doctest.h>

#include "dwind/errors.hpp"
#include "dwind/rational.hpp"

using dwind::Rational;

TEST_CASE("rationals are reduced with a positive denominator") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational(4).pretty() == "4");
    CHECK(Rational(7, 2).pretty() == "7/2");
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 4) - Rational(3, 4) == Rational(-1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-7, 2) < Rational(-3));
    CHECK(dwind::max(Rational(1, 2), Rational(2, 3)) == Rational(2, 3));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse(" -3/6 ") == Rational(-1, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), dwind::ValidationError);
    CHECK_THROWS_AS(Rational::parse("x"), dwind::ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/"), dwind::ValidationError);
    CHECK_THROWS_AS(Rational::parse("0.5"), dwind::ValidationError);
}

TEST_CASE("invalid operations") {
    CHECK_THROWS_AS(Rational(1, 0), dwind::ValidationError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), dwind::ValidationError);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), dwind::ValidationError);
    CHECK(Rational(-9, 3).to_int64() == -3);
}
