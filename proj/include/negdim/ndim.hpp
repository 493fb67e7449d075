#pragma once

// The negative-dimensional integration pipeline for the family
// integral x^r (x^2+a^2)^s dx: Gaussian generating functional, double-series
// coefficients, index constraints, the closed-form negative-dimensional
// value, its analytic continuation in s, and the s = -1 prescription used by
// the resummation engine.

#include <cmath>

#include "errors.hpp"
#include "exact_value.hpp"
#include "rational.hpp"
#include "specfun.hpp"

namespace negdim {

/// The pair (r, s) of integral x^r (x^2+a^2)^s dx, plus the scale a. The
/// scale stays symbolic through the exact pipeline (results carry a power of
/// a); the numeric field is only consulted by the reporting layer.
struct IntegralSpec {
    int r = 0;
    Rational s{0};
    double a = 1.0;

    IntegralSpec(int r_, Rational s_, double a_ = 1.0) : r(r_), s(std::move(s_)), a(a_) {
        if (r < 0) throw Error("IntegralSpec: r must be non-negative");
        if (!has_denominator_at_most_two(s))
            throw DenominatorUnsupported("IntegralSpec: s must have denominator 1 or 2");
        if (!(a > 0)) throw Error("IntegralSpec: a must be positive");
    }
};

/// Parameters (alpha, beta, a) of the Gaussian generating functional
/// G = integral exp(-alpha x) exp(-beta (x^2 + a^2)) dx.
struct GeneratingParams {
    double alpha = 0.0;
    double beta = 1.0;
    double a = 0.0;
};

struct SeriesIndex {
    long k = 0;
    long l = 0;
};

/// Exact coefficient of one double-series term together with its monomial
/// exponents in a, alpha and beta.
struct SeriesTerm {
    ExactValue coeff;
    long a_power = 0;
    long alpha_power = 0;
    Rational beta_power{0};
};

/// An exact value scaled by a symbolic power of a.
struct ScaledExact {
    ExactValue value;
    Rational a_power{0};

    /// Bind the symbolic scale to an exact rational a > 0.
    ExactValue bind(const Rational& a) const {
        if (value.is_pole()) return value;
        if (!is_integer(a_power)) throw Error("ScaledExact::bind: non-integer power of a");
        long e = detail::to_long_checked(rational_num(a_power), "ScaledExact::bind");
        return value * pow_rational(a, e);
    }
};

/// Closed form of the generating functional: sqrt(pi/beta) * exp(-beta a^2 + alpha^2/(4 beta)).
inline double generating_closed_form(const GeneratingParams& p) {
    if (!(p.beta > 0)) throw NonPositiveBeta("generating_closed_form: beta must be positive");
    return std::sqrt(M_PI / p.beta) * std::exp(-p.beta * p.a * p.a + p.alpha * p.alpha / (4 * p.beta));
}

/// Integrand of the generating functional, for quadrature cross-checks.
/// Single exp of the combined exponent: the Gaussian factor must absorb the
/// growing source factor before either is rendered, or huge samples hit
/// inf * 0.
inline double generating_integrand(const GeneratingParams& p, double x) {
    return std::exp(-p.alpha * x - p.beta * (x * x + p.a * p.a));
}

/// Term (k, l) of the expanded closed form:
/// sqrt(pi) * (-1)^k (a^2)^k / (4^l k! l!) * alpha^(2l) * beta^(k-l-1/2).
inline SeriesTerm generating_series_coefficient(long k, long l) {
    if (k < 0 || l < 0) throw Error("generating_series_coefficient: negative index");
    Rational denom = Rational(pow_rational(Rational(4), l)) * factorial_integer(k) * factorial_integer(l);
    Rational c = Rational(k % 2 == 0 ? 1 : -1) / denom;
    SeriesTerm term;
    term.coeff = ExactValue(c, 1);
    term.a_power = 2 * k;
    term.alpha_power = 2 * l;
    term.beta_power = Rational(k) - Rational(l) - Rational(1, 2);
    return term;
}

struct ConstraintTarget {
    int r = 0;
    Rational s{0};
};

/// Index constraints matching the two expansions: 2l = r, k - l - 1/2 = s.
inline ConstraintTarget solve_constraints_forward(const SeriesIndex& idx) {
    if (idx.k < 0 || idx.l < 0) throw Error("solve_constraints_forward: negative index");
    return {static_cast<int>(2 * idx.l), Rational(idx.k) - Rational(idx.l) - Rational(1, 2)};
}

/// Inverse of the constraints: l = r/2, k = s + l + 1/2. Throws NoPreimage
/// when (r, s) is not reachable by term matching (odd r, or k negative or
/// non-integer) -- those pairs exist only through analytic continuation.
inline SeriesIndex solve_constraints_inverse(int r, const Rational& s) {
    if (r < 0 || r % 2 != 0)
        throw NoPreimage("solve_constraints_inverse: r = " + std::to_string(r) +
                         " has no series preimage");
    long l = r / 2;
    Rational k = s + l + Rational(1, 2);
    if (!is_integer(k) || k < 0)
        throw NoPreimage("solve_constraints_inverse: k = " + rational_to_string(k) +
                         " is not a non-negative integer");
    return {detail::to_long_checked(rational_num(k), "solve_constraints_inverse"), l};
}

/// Closed form of the negative-dimensional integral:
///
///   I*(r, s) = (-1)^((r+1)/2) sqrt(pi) a^(r+2s+1)
///              / (2^r (r+1)_(-r/2) (s+1)_(r/2+1/2))
///
/// with (-1)^((r+1)/2) rendered under the branch constant. The prefactor is
/// fixed by matching the expansion of the generating functional term by term
/// (the identity suite pins it exactly); at r = 0 it reduces to the bare
/// (-pi)^(1/2).
inline ScaledExact i_star(const IntegralSpec& spec, Branch branch = kDefaultBranch) {
    Rational r(spec.r);
    Rational q = Rational(spec.r) / 2 + Rational(1, 2);
    ExactValue prefactor = minus_one_power(q, branch) * ExactValue::sqrt_pi();
    ExactValue denom = ExactValue(pow_rational(Rational(2), spec.r)) *
                       pochhammer(r + 1, -r / 2) * pochhammer(spec.s + 1, q);
    ScaledExact out;
    out.value = prefactor / denom;
    out.a_power = r + spec.s * 2 + 1;
    return out;
}

/// Analytic continuation of i_star to negative s: the s-bearing Pochhammer is
/// replaced through the reflection identity, moving (-s)_(-r/2-1/2) into the
/// numerator with the branch factor (-1)^(-q),
///
///   I*AC(r, s) = i * (-1)^(-q) sqrt(pi) a^(r+2s+1) (-s)_(-q) / (2^r (r+1)_(-r/2)),
///   q = r/2 + 1/2.
///
/// The leading i is the committed value of (-pi)^(1/2) in the closed form and
/// does not follow the branch toggle; under the default branch the prefactor
/// collapses to i^r on even r, reproducing the s = -1 prescription exactly.
inline ScaledExact i_star_ac(const IntegralSpec& spec, Branch branch = kDefaultBranch) {
    Rational r(spec.r);
    Rational q = Rational(spec.r) / 2 + Rational(1, 2);
    ExactValue continued = pochhammer_inverse_continued(spec.s + 1, q, branch);
    ExactValue prefactor = ExactValue::imaginary_unit() * ExactValue::sqrt_pi();
    ExactValue denom = ExactValue(pow_rational(Rational(2), spec.r)) * pochhammer(r + 1, -r / 2);
    ScaledExact out;
    out.value = prefactor * continued / denom;
    out.a_power = r + spec.s * 2 + 1;
    return out;
}

/// The s = -1 prescription adopted by the resummation engine:
/// (pi/a) (-a)^r, for every r >= 0.
inline double a_of_r(int r, double a) {
    if (r < 0) throw Error("a_of_r: r must be non-negative");
    if (!(a > 0)) throw Error("a_of_r: a must be positive");
    return M_PI / a * std::pow(-a, r);
}

/// Exact form of the prescription: pi * (-1)^r * a^(r-1).
inline ExactValue a_of_r_exact(int r, const Rational& a) {
    if (r < 0) throw Error("a_of_r_exact: r must be non-negative");
    if (!(a > 0)) throw Error("a_of_r_exact: a must be positive");
    Rational c = pow_rational(a, r - 1);
    if (r % 2 != 0) c = -c;
    return ExactValue(c, 2);
}

/// Polynomial integral of (x^2)^n over the real line.
struct PolynomialIntegral {
    ExactValue value;                ///< always exactly zero for n >= 0
    ExactValue continued_prefactor;  ///< (-1)^n n! sqrt(pi), reported for documentation
    bool delta_satisfied = false;    ///< Kronecker delta_{n+1/2, 0}; never true for integer n
};

/// In positive dimension the integral vanishes outright. The continued form
/// is (-1)^n n! sqrt(pi) delta_{n+1/2,0}: the delta never fires for integer
/// n >= 0, so the value is exact zero in both modes; the prefactor is kept
/// for reporting.
inline PolynomialIntegral i_pol(int n, bool continued) {
    if (n < 0) throw NegativeN("i_pol: n must be non-negative");
    PolynomialIntegral out;
    out.value = ExactValue::zero();
    if (continued) {
        Rational c(factorial_integer(n));
        if (n % 2 != 0) c = -c;
        out.continued_prefactor = ExactValue(c, 1);
        out.delta_satisfied = (Rational(n) + Rational(1, 2) == 0);
        if (out.delta_satisfied) out.value = out.continued_prefactor;
    }
    return out;
}

} // namespace negdim
