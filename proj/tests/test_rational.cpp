#include <catch_amalgamated.hpp>

#include "parter/rational.hpp"

using parter::InvalidArgumentError;
using parter::ParseError;
using parter::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-2, 6) == Rational(1, -3));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-4, -2).str() == "2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgumentError);
}

TEST_CASE("arithmetic stays canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(2, 6) == Rational(2, 3));
    CHECK((Rational(1, 3) + Rational(2, 6)).str() == "2/3");
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgumentError);

    Rational x(5, 6);
    x += Rational(1, 6);
    CHECK(x == Rational(1));
    x *= Rational(4);
    CHECK(x == Rational(4));
    x -= Rational(1, 2);
    CHECK(x.str() == "7/2");
    x /= Rational(7);
    CHECK(x.str() == "1/2");
}

TEST_CASE("predicates and comparisons") {
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
    CHECK(Rational(3, 3).is_one());
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(9, 2).sign() == 1);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(2) > Rational(3, 2));
    CHECK(Rational(1, 3) != Rational(2, 3));
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("10/-4").str() == "-5/2");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("2x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("+"), ParseError);
}

TEST_CASE("string round trip") {
    const char* samples[] = {"0", "1", "-1", "7/3", "-22/7", "1000000007",
                             "-13717421/109739369"};
    for (const char* s : samples) {
        const Rational x = Rational::parse(s);
        CHECK(Rational::parse(x.str()) == x);
        CHECK(x.str() == s);
    }
}

TEST_CASE("digest separates values and respects equality") {
    CHECK(Rational(1, 3).digest() == Rational(2, 6).digest());
    CHECK(Rational(1, 3).digest() != Rational(2, 3).digest());
    CHECK(Rational(1, 3).digest() != Rational(-1, 3).digest());
    CHECK(Rational(0).digest() == Rational(0, 9).digest());
}

TEST_CASE("big values survive exactly") {
    Rational big = Rational::parse("123456789123456789/2");
    big *= Rational(2);
    CHECK(big.str() == "123456789123456789");
    Rational tiny(1, 1000000000L);
    CHECK((tiny * Rational(1000000000L)).is_one());
}
