#include <catch2/catch_amalgamated.hpp>

#include "zpsym/polynomial.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using zpsym::polynomial;
using zpsym::rational;

TEST_CASE("zero polynomial has empty coefficients and no degree") {
    const polynomial z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(z(rational(7, 3)) == rational(0));
    CHECK(polynomial({rational(0), rational(0)}) == z); // trailing zeros trim
}

TEST_CASE("evaluation and derivative") {
    // 2x^3 - x + 5
    const polynomial p({rational(5), rational(-1), rational(0), rational(2)});
    CHECK(p.degree() == 3);
    CHECK(p(rational(2)) == rational(19));
    CHECK(p(rational(1, 2)) == rational(19, 4));
    CHECK(p.derivative() == polynomial({rational(-1), rational(0), rational(6)}));
    CHECK(polynomial::constant(rational(4)).derivative().is_zero());
}

TEST_CASE("argument shift expands exactly") {
    const polynomial x2 = polynomial::monomial(2);
    CHECK(x2.shifted(rational(1)) ==
          polynomial({rational(1), rational(2), rational(1)}));

    const polynomial p({rational(3, 7), rational(-2), rational(0), rational(5)});
    CHECK(p.shifted(rational(0)) == p);

    // x^3 shifted by -1/2, against binomial-expansion oracle coefficients.
    const polynomial x3 = polynomial::monomial(3);
    const polynomial shifted = x3.shifted(rational(-1, 2));
    CHECK(shifted == polynomial({rational(-1, 8), rational(3, 4), rational(-3, 2),
                                 rational(1)}));
    const auto tri = oracles::pascal(3);
    for (std::size_t j = 0; j <= 3; ++j)
        CHECK(shifted.coefficient(j) ==
              rational(tri[3][j]) * zpsym::pow(rational(-1, 2), 3 - static_cast<long>(j)));
}

TEST_CASE("shift round-trips for random polynomials") {
    test_support::rng rng(0xA11CE);
    for (int trial = 0; trial < 120; ++trial) {
        const polynomial p = test_support::random_polynomial(rng, 10);
        const rational a = test_support::random_rational(rng, 12, 7);
        CHECK(p.shifted(a).shifted(-a) == p);
    }
}

TEST_CASE("ring operations") {
    const polynomial a({rational(1), rational(2)});        // 1 + 2x
    const polynomial b({rational(-1), rational(0), rational(3)}); // -1 + 3x^2
    CHECK(a * b == polynomial({rational(-1), rational(-2), rational(3), rational(6)}));
    CHECK(a + b == polynomial({rational(0), rational(2), rational(3)}));
    CHECK((a - a).is_zero());
    CHECK((polynomial() * b).is_zero());
    test_support::rng rng(0xB0B);
    for (int trial = 0; trial < 60; ++trial) {
        const polynomial p = test_support::random_polynomial(rng, 6);
        const polynomial q = test_support::random_polynomial(rng, 6);
        const rational x = test_support::random_rational(rng, 8, 5);
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p + q)(x) == p(x) + q(x));
    }
}
