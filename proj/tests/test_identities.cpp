#include <catch2/catch_amalgamated.hpp>

#include "zpsym/identities.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using zpsym::rational;
using zpsym::symmetry_params;
using zpsym::truncated_series;

namespace {
const std::vector<rational> x_grid{rational(0), rational(1), rational(-1, 2),
                                   rational(3, 7)};
}

TEST_CASE("corollary 2: Bernoulli/power-sum symmetry") {
    CHECK(zpsym::corollary2_sides({0, 2, 3, rational(1)}).pass);
    CHECK(zpsym::corollary2_sides({2, 2, 1, rational(0)}).pass);
    CHECK(zpsym::corollary2_sides({6, 3, 5, rational(3, 7)}).pass);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned w1 = 1; w1 <= 4; ++w1)
            for (unsigned w2 = 1; w2 <= 4; ++w2)
                for (const auto& x : x_grid)
                    CHECK(zpsym::corollary2_sides({n, w1, w2, x}).pass);
}

TEST_CASE("corollary 4: shifted Bernoulli sum symmetry") {
    const auto trivial = zpsym::corollary4_sides({5, 1, 1, rational(3, 7)});
    CHECK(trivial.pass);
    CHECK(std::get<rational>(trivial.lhs) ==
          zpsym::bernoulli_polynomial(5)(rational(3, 7)));
    CHECK(zpsym::corollary4_sides({4, 2, 3, rational(0)}).pass);
    CHECK(zpsym::corollary4_sides({7, 4, 5, rational(-1, 3)}).pass);
}

TEST_CASE("Bernoulli multiplication theorem") {
    CHECK(zpsym::bernoulli_multiplication(5, 1, rational(2, 9)).pass);
    const auto r = zpsym::bernoulli_multiplication(2, 2, rational(1, 2));
    CHECK(r.pass);
    CHECK(std::get<rational>(r.lhs) == rational(1, 6)); // B_2(1)
    CHECK(zpsym::bernoulli_multiplication(9, 3, rational(2, 5)).pass);
}

TEST_CASE("Deeba-Rodriguez formula reproduces B_n") {
    CHECK(zpsym::deeba_rodriguez(1, 2) == rational(-1, 2));
    CHECK(zpsym::deeba_rodriguez(2, 2) == rational(1, 6));
    CHECK(zpsym::deeba_rodriguez(12, 3) == rational(-691, 2730));
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned w : {2u, 3u, 5u})
            CHECK(zpsym::deeba_rodriguez(n, w) == zpsym::bernoulli_number(n));
    CHECK_THROWS_AS(zpsym::deeba_rodriguez(3, 1), zpsym::degenerate_divisor_error);
    CHECK_THROWS_AS(zpsym::deeba_rodriguez(0, 2), zpsym::precondition_error);
}

TEST_CASE("theorem 5: Euler/alternating-sum symmetry (odd w)") {
    const auto trivial = zpsym::theorem5_sides({0, 1, 1, rational(0)});
    CHECK(trivial.pass);
    CHECK(std::get<rational>(trivial.lhs) == rational(1)); // T_0(0)
    CHECK(zpsym::theorem5_sides({3, 3, 1, rational(0)}).pass);
    CHECK(zpsym::theorem5_sides({8, 5, 7, rational(1, 2)}).pass);
    CHECK_THROWS_AS(zpsym::theorem5_sides({2, 2, 3, rational(0)}),
                    zpsym::precondition_error);
}

TEST_CASE("equation 30 specialization") {
    const auto trivial = zpsym::eq30_identity(6, 1, rational(2, 3));
    CHECK(trivial.pass);
    CHECK(std::get<rational>(trivial.lhs) == zpsym::euler_polynomial(6)(rational(2, 3)));
    CHECK(zpsym::eq30_identity(4, 3, rational(0)).pass);
    CHECK(zpsym::eq30_identity(6, 5, rational(-2, 3)).pass);
    CHECK_THROWS_AS(zpsym::eq30_identity(4, 2, rational(0)), zpsym::precondition_error);
}

TEST_CASE("corollary 6 reproduces E_n") {
    CHECK(zpsym::euler_from_corollary6(1, 3) == rational(-1, 2));
    CHECK(zpsym::euler_from_corollary6(3, 3) == rational(1, 4));
    CHECK(zpsym::euler_from_corollary6(8, 5) == rational(0));
    for (unsigned n = 1; n <= 16; ++n)
        for (unsigned w : {3u, 5u, 9u})
            CHECK(zpsym::euler_from_corollary6(n, w) == zpsym::euler_number(n));
    CHECK_THROWS_AS(zpsym::euler_from_corollary6(3, 1), zpsym::degenerate_divisor_error);
    CHECK_THROWS_AS(zpsym::euler_from_corollary6(3, 4), zpsym::precondition_error);
    CHECK_THROWS_AS(zpsym::euler_from_corollary6(0, 3), zpsym::precondition_error);
}

TEST_CASE("theorem 7: alternating shifted Euler sums (odd w)") {
    const auto trivial = zpsym::theorem7_sides({4, 1, 1, rational(1, 4)});
    CHECK(trivial.pass);
    CHECK(std::get<rational>(trivial.lhs) == zpsym::euler_polynomial(4)(rational(1, 4)));
    CHECK(zpsym::theorem7_sides({2, 3, 1, rational(0)}).pass);
    CHECK(zpsym::theorem7_sides({5, 3, 5, rational(1, 4)}).pass);
    CHECK_THROWS_AS(zpsym::theorem7_sides({2, 3, 4, rational(0)}),
                    zpsym::precondition_error);
}

TEST_CASE("Euler multiplication theorem (odd w)") {
    CHECK(zpsym::euler_multiplication(5, 1, rational(-3, 8)).pass);
    CHECK(zpsym::euler_multiplication(3, 3, rational(0)).pass);
    CHECK(zpsym::euler_multiplication(7, 5, rational(1, 2)).pass);
    CHECK_THROWS_AS(zpsym::euler_multiplication(3, 6, rational(0)),
                    zpsym::precondition_error);
}

TEST_CASE("swapping w1 and w2 swaps lhs and rhs exactly") {
    test_support::rng rng(0x57AB);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = static_cast<unsigned>(test_support::pick(rng, 0, 9));
        const unsigned w1 = static_cast<unsigned>(test_support::pick(rng, 1, 6));
        const unsigned w2 = static_cast<unsigned>(test_support::pick(rng, 1, 6));
        const rational x = test_support::random_rational(rng, 5, 7);
        const auto a = zpsym::corollary2_sides({n, w1, w2, x});
        const auto b = zpsym::corollary2_sides({n, w2, w1, x});
        CHECK(a.lhs == b.rhs);
        CHECK(a.rhs == b.lhs);
        const unsigned ow1 = 2 * (w1 / 2) + 1, ow2 = 2 * (w2 / 2) + 1;
        const auto c = zpsym::theorem7_sides({n, ow1, ow2, x});
        const auto d = zpsym::theorem7_sides({n, ow2, ow1, x});
        CHECK(c.lhs == d.rhs);
        CHECK(c.rhs == d.lhs);
    }
}

TEST_CASE("theorem 1 as series") {
    // Degenerate w = 1: both pipelines reduce to the Bernoulli EGF t/(e^t - 1).
    const auto degenerate = zpsym::theorem1_series(1, 1, rational(0), 8);
    CHECK(degenerate.pass);
    const auto& lhs = std::get<truncated_series>(degenerate.lhs);
    const auto b = oracles::bernoulli_upto(8);
    rational fact(1);
    for (std::size_t k = 0; k <= 8; ++k) {
        if (k > 0)
            fact *= rational(mpz_class(k));
        CHECK(lhs.coefficient(k) == b[k] / fact);
    }
    CHECK(zpsym::theorem1_series(2, 3, rational(0), 12).pass);
    CHECK(zpsym::theorem1_series(3, 5, rational(1, 2), 12).pass);
}

TEST_CASE("equation 12 ratio: Bernoulli EGF route vs closed form") {
    CHECK(zpsym::series_identity_bosonic_ratio(1, 1, 10).pass);
    CHECK(zpsym::series_identity_bosonic_ratio(2, 3, 14).pass);
    CHECK(zpsym::series_identity_bosonic_ratio(5, 7, 10).pass);
}

TEST_CASE("equation 26 ratio: closed form vs both fermionic expansions") {
    const auto degenerate = zpsym::series_identity_fermionic_ratio(1, 1, rational(0), 8);
    CHECK(degenerate.pass);
    const auto& closed = std::get<truncated_series>(degenerate.lhs);
    const auto e = oracles::euler_polynomials_upto(8);
    rational fact(1);
    for (std::size_t k = 0; k <= 8; ++k) {
        if (k > 0)
            fact *= rational(mpz_class(k));
        CHECK(closed.coefficient(k) == e[k](rational(0)) / fact);
    }
    CHECK(zpsym::series_identity_fermionic_ratio(3, 1, rational(0), 12).pass);
    CHECK(zpsym::series_identity_fermionic_ratio(3, 5, rational(1, 2), 10).pass);
    CHECK_THROWS_AS(zpsym::series_identity_fermionic_ratio(2, 3, rational(0), 8),
                    zpsym::precondition_error);
}

TEST_CASE("reports serialize to {identity, params, lhs, rhs, pass}") {
    const auto r = zpsym::corollary2_sides({2, 2, 1, rational(-1, 2)});
    const auto j = zpsym::to_json(r);
    CHECK(j["identity"] == "corollary2");
    CHECK(j["params"]["n"] == 2);
    CHECK(j["params"]["w1"] == 2);
    CHECK(j["params"]["w2"] == 1);
    CHECK(j["params"]["x"] == "-1/2");
    CHECK(j["lhs"].is_string());
    CHECK(j["pass"] == true);
    CHECK(j.begin().key() == "identity"); // insertion order preserved

    const auto s = zpsym::theorem1_series(2, 3, rational(0), 4);
    const auto js = zpsym::to_json(s);
    CHECK(js["params"]["order"] == 4);
    CHECK(js["lhs"].is_array());
    CHECK(js["lhs"].size() == 5);
}

TEST_CASE("w1 = w2 degenerate grids still pass and report") {
    CHECK(zpsym::corollary2_sides({5, 4, 4, rational(1)}).pass);
    CHECK(zpsym::theorem5_sides({5, 3, 3, rational(1)}).pass);
}
