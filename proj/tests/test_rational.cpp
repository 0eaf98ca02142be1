#include <doctest.h>

#include <random>

#include "pinlab/rational.hpp"

using pinlab::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalizes sign and common factors") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(-10, -15).str() == "2/3");
    CHECK(Rational(7).str() == "7/1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p/q and bare integers") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("0/1") == Rational(0));
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", " 1/2", "1/2 ", "a/b", "1//2", "1/-2x"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("floor and ceil round toward the correct side") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("arithmetic matches cross-multiplied integers") {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        const long long a = num(g), b = den(g), c = num(g), d = den(g);
        const Rational x(a, b), y(c, d);
        CHECK(x + y == Rational(a * d + c * b, b * d));
        CHECK(x - y == Rational(a * d - c * b, b * d));
        CHECK(x * y == Rational(a * c, b * d));
        if (c != 0) CHECK(x / y == Rational(a * d, b * c));
        CHECK((x < y) == (a * d < c * b));
        CHECK((x == y) == (a * d == c * b));
    }
}

TEST_CASE("overflow throws instead of wrapping") {
    const Rational big(INT64_MAX);
    CHECK_THROWS_AS(big + 1, std::overflow_error);
    CHECK_THROWS_AS(big * 2, std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) * Rational(1, 2), std::overflow_error);
    CHECK(big - 1 == Rational(INT64_MAX - 1));
    // large intermediate products that reduce back into range are fine
    CHECK(Rational(INT64_MAX, 3) * Rational(3, INT64_MAX) == Rational(1));
}

TEST_CASE("abs, min, max") {
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
    CHECK(pinlab::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(pinlab::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

}
