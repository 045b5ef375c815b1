#include "doctest.h"

#include "soblab/rational.hpp"

#include <random>
#include <stdexcept>

using namespace soblab;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) - Rational(1, 3)) == Rational(1, 6));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 2) / Rational(1, 8)) == Rational(4));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(2, 6) == Rational(1, 3));
}

TEST_CASE("rational parsing is exact") {
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.1") == Rational(-1, 10));
    CHECK(Rational::parse("8/3") == Rational(8, 3));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("2.5e-1") == Rational(1, 4));
    CHECK(Rational::parse("1e2") == Rational(100));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1.2.3"));
}

TEST_CASE("rational from_double round-trips binary rationals") {
    for (double x : {0.5, 0.25, -0.75, 3.0, 0.1, 1e-3, 123.456}) {
        Rational r = Rational::from_double(x);
        CHECK(r.to_double() == x); // doubles are binary rationals, conversion is exact
    }
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("extended real conventions") {
    ExtReal inf = ExtReal::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf.reciprocal() == Rational(0));
    CHECK(ExtReal(Rational(2)).reciprocal() == Rational(1, 2));
    CHECK(inf > ExtReal(Rational(1000000)));
    CHECK(ExtReal::parse("inf").is_infinite());
    CHECK(ExtReal::parse("2") == ExtReal(Rational(2)));
    CHECK(inf == ExtReal::infinity());
    CHECK_THROWS_AS(inf.finite(), std::domain_error);
    CHECK((inf * Rational(3)).is_infinite());
    CHECK_THROWS_AS(inf * Rational(0), std::domain_error);
    CHECK(inf.str() == "inf");
}
