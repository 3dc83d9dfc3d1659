#include <doctest.h>

#include "hoffman/rational.hpp"

using namespace hoffman;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
}

TEST_CASE("parse_rational rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), InputError);
    CHECK_THROWS_AS(parse_rational("1.x"), InputError);
}

TEST_CASE("format_rational emits p or p/q") {
    CHECK(format_rational(Rational(3)) == "3");
    CHECK(format_rational(Rational(-3)) == "-3");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(5, 2)) == "5/2");
    CHECK(format_rational(Rational(-5, 2)) == "-5/2");
    CHECK(format_rational(Rational(4, 2)) == "2");
}

TEST_CASE("parse/format round trip") {
    for (long long num = -6; num <= 6; ++num)
        for (long long den = 1; den <= 4; ++den) {
            Rational r(num, den);
            CHECK(parse_rational(format_rational(r)) == r);
        }
}
