#include "doctest.h"

#include <random>

#include "pfaffian_oracle.hpp"
#include "prymbn/pfaffian.hpp"

using prymbn::AntisymmetricMatrix;
using prymbn::PrymClass;
using prymbn::Rational;
using prymbn::TruncatedPoly;
using prymbn::VanishingSequence;

TEST_SUITE("pfaffian") {

TEST_CASE("base cases") {
    AntisymmetricMatrix empty(0, 4);
    CHECK(prymbn::pfaffian(empty) == TruncatedPoly::constant(Rational(1), 4));

    AntisymmetricMatrix two(2, 4);
    two.set(0, 1, TruncatedPoly::monomial(Rational(5), 2, 4));
    CHECK(prymbn::pfaffian(two) == TruncatedPoly::monomial(Rational(5), 2, 4));

    AntisymmetricMatrix odd(3, 4);
    CHECK_THROWS_AS(prymbn::pfaffian(odd), std::invalid_argument);
}

TEST_CASE("classical 4x4 identity af - be + cd") {
    // Entries a..f at (1,2),(1,3),(1,4),(2,3),(2,4),(3,4) as constants 1..6.
    AntisymmetricMatrix m(4, 1);
    int v = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) m.set(i, j, TruncatedPoly::constant(Rational(v++), 1));
    }
    CHECK(prymbn::pfaffian(m).coeff(0) == Rational(1 * 6 - 2 * 5 + 3 * 4));
}

TEST_CASE("matches the perfect-matching oracle on random matrices") {
    std::mt19937 rng(4242);
    for (int size : {0, 2, 4, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            auto m = prymbn::testing::random_constant_matrix(size, rng);
            CHECK(prymbn::pfaffian(m) == prymbn::testing::pfaffian_matching_sum(m));
        }
    }
}

TEST_CASE("Pf squared equals det at size 4") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 10; ++rep) {
        auto m = prymbn::testing::random_constant_matrix(4, rng);
        Rational pf = prymbn::pfaffian(m).coeff(0);
        CHECK(pf * pf == prymbn::testing::determinant_leibniz(m));
    }
}

TEST_CASE("matrix index checks") {
    AntisymmetricMatrix m(4, 3);
    CHECK_THROWS_AS(m.at(2, 2), std::out_of_range);
    CHECK_THROWS_AS(m.at(3, 1), std::out_of_range);
    CHECK_THROWS_AS(m.set(0, 1, TruncatedPoly(5)), std::invalid_argument);
    CHECK(m.at(0, 3).is_zero());
}

}  // TEST_SUITE

TEST_SUITE("q_entry") {

TEST_CASE("pinned small entries") {
    // 1/(2!1!) - 2/3! = 1/6, carried by (2 xi)^3.
    CHECK(prymbn::q_entry(2, 1, 4) == TruncatedPoly::monomial(Rational(4, 3), 3, 4));
    // Single class: (2 xi)^3 / 3!.
    CHECK(prymbn::q_entry(3, 0, 4) == TruncatedPoly::monomial(Rational(4, 3), 3, 4));
    // 1/(1!1!) - 2/(2!0!) = 0.
    CHECK(prymbn::q_entry(1, 1, 4).is_zero());

    CHECK_THROWS_AS(prymbn::q_entry(1, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(prymbn::q_entry(2, -1, 4), std::invalid_argument);
}

TEST_CASE("q_entry(a, a) = 0 (antisymmetry of the pair class)") {
    for (int a = 0; a <= 8; ++a) {
        CHECK(prymbn::q_entry(a, a, 2 * a + 2).is_zero());
    }
}

TEST_CASE("entries are homogeneous of degree a + b") {
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= a; ++b) {
            TruncatedPoly e = prymbn::q_entry(a, b, a + b + 3);
            for (const auto& [d, c] : e.terms()) {
                (void)c;
                CHECK(d == a + b);
            }
        }
    }
}

}  // TEST_SUITE

TEST_SUITE("class_B_pfaffian") {

TEST_CASE("pinned examples") {
    PrymClass b = prymbn::class_B_pfaffian(4, VanishingSequence({1, 2}));
    CHECK(b.codim == 3);
    CHECK(b.coeff == Rational(1, 3));

    PrymClass unit = prymbn::class_B_pfaffian(2, VanishingSequence({0}));
    CHECK(unit.codim == 0);
    CHECK(unit.coeff == Rational(1));

    PrymClass zero = prymbn::class_B_pfaffian(3, VanishingSequence({0, 1, 2}));
    CHECK(zero.is_zero());
    CHECK(zero.codim == 3);
}

TEST_CASE("agrees with the closed product over the sweep") {
    for (const auto& values : prymbn::enumerate_vanishing_sequences(8)) {
        VanishingSequence a(values);
        long w = a.weight();
        for (long g : {w, w + 1, w + 3}) {
            if (g < 2) continue;
            CHECK(prymbn::class_B_pfaffian(static_cast<int>(g), a) ==
                  prymbn::class_B_closed(static_cast<int>(g), a));
        }
    }
}

}  // TEST_SUITE
