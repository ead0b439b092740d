#include "doctest.h"

#include <random>

#include "prymbn/rational.hpp"

using prymbn::Int;
using prymbn::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form: lowest terms, positive denominator") {
    Rational r(2, 4);
    CHECK(r.numerator() == 1);
    CHECK(r.denominator() == 2);
    CHECK(r == Rational(1, 2));

    Rational neg(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("exact fraction arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("factorials and powers of two") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::pow2(4) == Rational(16));
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
}

TEST_CASE("integrality checks") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_integer() == 2);
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 3).to_integer(), std::logic_error);
}

TEST_CASE("string encoding p/q and parse round trip") {
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-5, 2).str() == "-5/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(0).str() == "0");

    for (const char* s : {"1/3", "-5/2", "7", "0", "123456789123456789/2"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("results stay reduced under random arithmetic") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        for (Rational r : {a + b, a - b, a * b}) {
            Int g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() > 0);
        }
    }
}

}  // TEST_SUITE
