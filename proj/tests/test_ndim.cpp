#include <catch2/catch_amalgamated.hpp>

#include <negdim/ndim.hpp>

#include "support/term_matching.hpp"

using namespace negdim;

TEST_CASE("generating closed form") {
    CHECK(generating_closed_form({0, 1, 0}) == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-15));
    // exponent cancellation: -beta a^2 + alpha^2/(4 beta) = -1 + 1 = 0
    CHECK(generating_closed_form({2, 1, 1}) == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-15));
    CHECK(generating_closed_form({0, 2, 1}) ==
          Catch::Approx(std::sqrt(M_PI / 2) * std::exp(-2)).epsilon(1e-15));
    CHECK_THROWS_AS(generating_closed_form({0, 0, 0}), NonPositiveBeta);
    CHECK_THROWS_AS(generating_closed_form({0, -1, 0}), NonPositiveBeta);
}

TEST_CASE("generating series coefficients") {
    SeriesTerm t00 = generating_series_coefficient(0, 0);
    CHECK(t00.coeff == ExactValue::sqrt_pi());
    CHECK(t00.a_power == 0);
    CHECK(t00.alpha_power == 0);
    CHECK(t00.beta_power == Rational(-1, 2));

    SeriesTerm t10 = generating_series_coefficient(1, 0);
    CHECK(t10.coeff == -ExactValue::sqrt_pi());
    CHECK(t10.a_power == 2);
    CHECK(t10.beta_power == Rational(1, 2));

    SeriesTerm t02 = generating_series_coefficient(0, 2);
    CHECK(t02.coeff == ExactValue(Rational(1, 32), 1));
    CHECK(t02.alpha_power == 4);
    CHECK(t02.beta_power == Rational(-5, 2));
}

TEST_CASE("constraint solving") {
    ConstraintTarget t = solve_constraints_forward({0, 0});
    CHECK(t.r == 0);
    CHECK(t.s == Rational(-1, 2));
    t = solve_constraints_forward({2, 1});
    CHECK(t.r == 2);
    CHECK(t.s == Rational(1, 2));
    t = solve_constraints_forward({0, 3});
    CHECK(t.r == 6);
    CHECK(t.s == Rational(-7, 2));

    SeriesIndex idx = solve_constraints_inverse(0, Rational(-1, 2));
    CHECK(idx.k == 0);
    CHECK(idx.l == 0);
    idx = solve_constraints_inverse(4, Rational(1, 2));
    CHECK(idx.k == 3);
    CHECK(idx.l == 2);
    CHECK_THROWS_AS(solve_constraints_inverse(1, Rational(-1, 2)), NoPreimage);
    CHECK_THROWS_AS(solve_constraints_inverse(0, Rational(-3, 2)), NoPreimage);
    CHECK_THROWS_AS(solve_constraints_inverse(2, Rational(0)), NoPreimage);
}

TEST_CASE("constraint roundtrip up to 50") {
    for (long k = 0; k <= 50; ++k) {
        for (long l = 0; l <= 50; ++l) {
            ConstraintTarget t = solve_constraints_forward({k, l});
            SeriesIndex idx = solve_constraints_inverse(t.r, t.s);
            CHECK(idx.k == k);
            CHECK(idx.l == l);
        }
    }
}

TEST_CASE("i_star at the leading lattice point") {
    ScaledExact v = i_star(IntegralSpec(0, Rational(-1, 2)));
    CHECK(v.value == ExactValue(Rational(1), 2, 1));  // i * pi
    CHECK(v.a_power == 0);
}

TEST_CASE("i_star matches the term-matching oracle at quoted points") {
    // (r, s) = (2, -1/2) corresponds to (k, l) = (1, 1)
    auto m = testsupport::match_coefficient(1, 1);
    CHECK(m.ndim_route == m.direct_route);
    CHECK(m.ndim_a_power == Rational(m.direct_a_power));
    // (r, s) = (0, 1/2) corresponds to (k, l) = (1, 0)
    m = testsupport::match_coefficient(1, 0);
    CHECK(m.ndim_route == m.direct_route);
}

TEST_CASE("term matching is exact on the whole truncated lattice") {
    for (long k = 0; k <= 12; ++k) {
        for (long l = 0; l <= 12; ++l) {
            auto m = testsupport::match_coefficient(k, l);
            CHECK(m.ndim_route == m.direct_route);
            CHECK(m.ndim_a_power == Rational(m.direct_a_power));
        }
    }
}

TEST_CASE("term matching is covariant under the shared branch flip") {
    for (long k = 0; k <= 6; ++k) {
        for (long l = 0; l <= 6; ++l) {
            auto m = testsupport::match_coefficient(k, l, Branch::minus_i);
            CHECK(m.ndim_route == m.direct_route);
        }
    }
}

TEST_CASE("i_star under the flipped branch conjugates") {
    ScaledExact v = i_star(IntegralSpec(0, Rational(-1, 2)), Branch::minus_i);
    CHECK(v.value == ExactValue(Rational(-1), 2, 1));  // -i * pi
}

TEST_CASE("analytic continuation at s = -1") {
    ScaledExact v = i_star_ac(IntegralSpec(0, Rational(-1)));
    CHECK(v.value == ExactValue(Rational(1), 2));  // pi
    CHECK(v.a_power == -1);

    v = i_star_ac(IntegralSpec(2, Rational(-1)));
    CHECK(v.bind(Rational(1)) == ExactValue(Rational(1), 2));  // pi at a = 1

    CHECK(i_star_ac(IntegralSpec(1, Rational(-1))).value.is_pole());
}

TEST_CASE("continuation consistency on even r") {
    for (int r = 0; r <= 40; r += 2) {
        ScaledExact v = i_star_ac(IntegralSpec(r, Rational(-1)));
        for (Rational a : {Rational(1, 2), Rational(1), Rational(2)}) {
            CHECK(v.bind(a) == a_of_r_exact(r, a));
        }
    }
}

TEST_CASE("odd r: the continuation reports a pole, the prescription stays finite") {
    for (int r = 1; r <= 39; r += 2) {
        CHECK(i_star_ac(IntegralSpec(r, Rational(-1))).value.is_pole());
        ExactValue pres = a_of_r_exact(r, Rational(1));
        CHECK(pres.is_finite());
        CHECK(pres == ExactValue(Rational(-1), 2));  // -pi for odd r at a = 1
    }
}

TEST_CASE("flipping the branch breaks the even-r continuation") {
    bool all_equal = true;
    for (int r = 0; r <= 12; r += 2) {
        ScaledExact v = i_star_ac(IntegralSpec(r, Rational(-1)), Branch::minus_i);
        if (v.bind(Rational(1)) != a_of_r_exact(r, Rational(1))) all_equal = false;
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("s = -1 prescription values") {
    CHECK(a_of_r(0, 1.0) == Catch::Approx(M_PI).epsilon(1e-15));
    CHECK(a_of_r(1, 1.0) == Catch::Approx(-M_PI).epsilon(1e-15));
    CHECK(a_of_r(2, 2.0) == Catch::Approx(2 * M_PI).epsilon(1e-15));
    CHECK(a_of_r_exact(0, Rational(1)) == ExactValue(Rational(1), 2));
    CHECK(a_of_r_exact(1, Rational(1)) == ExactValue(Rational(-1), 2));
    CHECK(a_of_r_exact(2, Rational(2)) == ExactValue(Rational(2), 2));
}

TEST_CASE("polynomial integrals vanish in both modes") {
    for (int n = 0; n <= 20; ++n) {
        PolynomialIntegral plain = i_pol(n, false);
        CHECK(plain.value == ExactValue::zero());
        PolynomialIntegral cont = i_pol(n, true);
        CHECK(cont.value == ExactValue::zero());
        CHECK_FALSE(cont.delta_satisfied);
        Rational f(factorial_integer(n));
        CHECK(cont.continued_prefactor == ExactValue(n % 2 == 0 ? f : -f, 1));
    }
    CHECK_THROWS_AS(i_pol(-1, false), NegativeN);
}

TEST_CASE("i_star propagates poles from the s-bearing Pochhammer") {
    // (s+1)_q vanishes for integer s <= -1 on even r, so i_star is a pole
    CHECK(i_star(IntegralSpec(0, Rational(-1))).value.is_pole());
    CHECK(i_star(IntegralSpec(2, Rational(-1))).value.is_pole());
}

TEST_CASE("continuation swaps the pole structure on even r at s = -1") {
    for (int r = 0; r <= 20; r += 2) {
        CHECK(i_star(IntegralSpec(r, Rational(-1))).value.is_pole());
        CHECK(i_star_ac(IntegralSpec(r, Rational(-1))).value.is_finite());
    }
}

TEST_CASE("odd r: continued and direct values differ by a unit factor") {
    // Integer reflection subscript: the identity is exact, so the continued
    // value differs from the direct one only by the committed imaginary unit
    // times the branch factor (-1)^q with q = (r+1)/2.
    for (int r : {1, 3, 5, 7, 9}) {
        ScaledExact direct = i_star(IntegralSpec(r, Rational(-1, 2)));
        ScaledExact continued = i_star_ac(IntegralSpec(r, Rational(-1, 2)));
        REQUIRE(direct.value.is_finite());
        REQUIRE(continued.value.is_finite());
        ExactValue ratio = continued.value / direct.value;
        ExactValue expected =
            ExactValue::imaginary_unit() * minus_one_power(Rational(r + 1) / 2);
        CHECK(ratio == expected);
        CHECK(continued.a_power == direct.a_power);
    }
}

TEST_CASE("ndim input validation") {
    CHECK_THROWS_AS(IntegralSpec(-1, Rational(0)), Error);
    CHECK_THROWS_AS(IntegralSpec(0, Rational(1, 3)), DenominatorUnsupported);
    CHECK_THROWS_AS(IntegralSpec(0, Rational(0), -1.0), Error);
    CHECK_THROWS_AS(a_of_r(-1, 1.0), Error);
    CHECK_THROWS_AS(a_of_r(0, 0.0), Error);
}
