#include <catch2/catch_amalgamated.hpp>

#include <negdim/quadrature.hpp>
#include <negdim/residues.hpp>

using namespace negdim;

namespace {

RationalIntegrand lorentzian(double a, double omega, int multiplicity = 1) {
    RationalIntegrand g;
    g.numerator = {1.0};
    g.factors = {{Complex(0.0, a), multiplicity}};
    g.omega = omega;
    return g;
}

} // namespace

TEST_CASE("per-pole residues at quoted values") {
    // e^{ix}/(x^2+a^2) at ia: e^{-a}/(2ia)
    for (double a : {1.0, 2.0}) {
        RationalIntegrand g = lorentzian(a, 1.0);
        Complex res = residue_at(g, Complex(0.0, a), 1);
        Complex expected = std::exp(-a) / Complex(0.0, 2.0 * a);
        CHECK(std::abs(res - expected) < 1e-15);
    }
    // 1/(x^2+1) at i: 1/(2i)
    RationalIntegrand g = lorentzian(1.0, 0.0);
    Complex res = residue_at(g, Complex(0.0, 1.0), 1);
    CHECK(std::abs(res - Complex(0.0, -0.5)) < 1e-15);
    // 1/(x^2+1)^2 at i, multiplicity 2: -i/4
    g = lorentzian(1.0, 0.0, 2);
    res = residue_at(g, Complex(0.0, 1.0), 2);
    CHECK(std::abs(res - Complex(0.0, -0.25)) < 1e-15);
}

TEST_CASE("residue of an unlisted root is rejected") {
    RationalIntegrand g = lorentzian(1.0, 0.0);
    CHECK_THROWS_AS(residue_at(g, Complex(0.0, 2.0), 1), RootNotListed);
    CHECK_THROWS_AS(residue_at(g, Complex(0.0, 1.0), 2), RootNotListed);
}

TEST_CASE("contour integrals of the damped exponential family") {
    Complex v = integrate_by_residues(lorentzian(1.0, 1.0));
    CHECK(std::abs(v.real() - M_PI / std::exp(1.0)) < 1e-14);
    CHECK(std::abs(v.imag()) < 1e-13);

    v = integrate_by_residues(lorentzian(2.0, 1.0));
    CHECK(std::abs(v.real() - M_PI / 2 * std::exp(-2.0)) < 1e-14);
}

TEST_CASE("pure rational contour integral with a double pole") {
    Complex v = integrate_by_residues(lorentzian(1.0, 0.0, 2));
    CHECK(std::abs(v.real() - M_PI / 2) < 1e-14);
    CHECK(std::abs(v.imag()) < 1e-13);

    QuadratureRequest req;
    req.abs_tol = 1e-11;
    req.rel_tol = 1e-11;
    req.integrand = cos_projected_integrand(lorentzian(1.0, 0.0, 2));
    QuadratureResult q = integrate_numeric(req);
    CHECK(std::abs(v.real() - q.value) < 1e-10);
}

TEST_CASE("scaling law across a") {
    for (double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        Complex v = integrate_by_residues(lorentzian(a, 1.0));
        double expected = M_PI / a * std::exp(-a);
        CHECK(std::abs(v.real() - expected) <= 1e-12 * std::abs(expected));
        CHECK(std::abs(v.imag()) < 1e-13);
    }
}

TEST_CASE("degree conditions") {
    RationalIntegrand g;
    g.numerator = {0.0, 0.0, 1.0};  // x^2
    g.factors = {{Complex(0.0, 1.0), 1}};
    g.omega = 0.0;  // needs degree >= 4
    CHECK_THROWS_AS(integrate_by_residues(g), DegreeConditionViolated);
    g.omega = 1.0;  // Jordan regime: degree 2 >= 3 still violated
    CHECK_THROWS_AS(integrate_by_residues(g), DegreeConditionViolated);
    g.numerator = {0.0, 1.0};  // x, degree 1: Jordan regime passes
    CHECK_NOTHROW(integrate_by_residues(g));
    g.omega = 0.0;
    CHECK_THROWS_AS(integrate_by_residues(g), DegreeConditionViolated);
}

TEST_CASE("real-axis roots are rejected") {
    RationalIntegrand g;
    g.numerator = {1.0};
    g.factors = {{Complex(1.0, 0.0), 1}, {Complex(0.0, 1.0), 1}};
    CHECK_THROWS_AS(g.validate(), InvalidIntegrand);
    g.factors[0].root = Complex(0.0, -1.0);
    CHECK_THROWS_AS(g.validate(), InvalidIntegrand);
}

TEST_CASE("asymmetric conjugate-pair integrand agrees with quadrature") {
    // 1/(((x-1)^2+1)((x+1)^2+1)): roots 1+i and -1+i; even overall
    RationalIntegrand g;
    g.numerator = {1.0};
    g.factors = {{Complex(1.0, 1.0), 1}, {Complex(-1.0, 1.0), 1}};
    g.omega = 0.0;
    Complex v = integrate_by_residues(g);
    CHECK(std::abs(v.imag()) < 1e-13);

    QuadratureRequest req;
    req.abs_tol = 1e-11;
    req.rel_tol = 1e-11;
    req.integrand = cos_projected_integrand(g);
    QuadratureResult q = integrate_numeric(req);
    CHECK(std::abs(v.real() - q.value) < 1e-9);
}

TEST_CASE("rational evaluation is overflow-safe at double-exponential samples") {
    RationalIntegrand g;
    g.numerator = {0.0, 0.0, 1.0};  // x^2
    g.factors = {{Complex(0.0, 1.0), 2}};
    g.omega = 0.0;
    double huge = 1e200;
    double v = g.rational_value(huge);
    CHECK(std::isfinite(v));
    CHECK(v == Catch::Approx(1.0 / (huge * huge)).epsilon(1e-12));
    CHECK(g.rational_value(0.5) == Catch::Approx(0.25 / std::pow(1.25, 2)).epsilon(1e-14));
}
