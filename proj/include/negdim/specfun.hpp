#pragma once

// Exact evaluation of gamma functions and Pochhammer symbols on the
// integer/half-integer lattice, with explicit pole tracking. All values are
// ExactValue monomials (rational * pi^(e/2) * i^t), so identities can be
// tested with zero tolerance.

#include <limits>

#include "errors.hpp"
#include "exact_value.hpp"
#include "rational.hpp"

namespace negdim {

/// Branch of (-1)^(1/2) used when a half-integer power of -1 has to be
/// rendered as a concrete imaginary unit. plus_i means (-1)^w = e^{+i*pi*w}.
/// A single constant shared by the reflection identity and the series
/// bookkeeping; flipping it is a deliberate mutation hook for the identity
/// suites.
enum class Branch { plus_i, minus_i };

inline constexpr Branch kDefaultBranch = Branch::plus_i;

namespace detail {

inline long to_long_checked(const Integer& n, const char* what) {
    if (n > Integer(std::numeric_limits<long>::max()) ||
        n < Integer(std::numeric_limits<long>::min()))
        throw Error(std::string(what) + ": argument out of range");
    return n.convert_to<long>();
}

inline void require_lattice(const Rational& r, const char* what) {
    if (!has_denominator_at_most_two(r))
        throw DenominatorUnsupported(std::string(what) + ": denominator of " +
                                     rational_to_string(r) + " is neither 1 nor 2");
}

} // namespace detail

/// (-1)^w for w on the half-integer lattice, rendered under the given branch:
/// (-1)^w = ((-1)^(1/2))^(2w) with (-1)^(1/2) = +i or -i.
inline ExactValue minus_one_power(const Rational& w, Branch branch = kDefaultBranch) {
    detail::require_lattice(w, "minus_one_power");
    long two_w = detail::to_long_checked(rational_num(w * 2), "minus_one_power");
    int unit = branch == Branch::plus_i ? 1 : 3;  // i or i^3 = -i
    return ExactValue(Rational(1), 0, static_cast<int>(((two_w % 4) * unit) % 4));
}

/// Exact gamma at integer and half-integer arguments.
///
/// Integers: Gamma(n) = (n-1)! for n >= 1, a first-order pole otherwise.
/// Half-integers: recurrence Gamma(z+1) = z Gamma(z) anchored at
/// Gamma(1/2) = sqrt(pi); the result is rational * sqrt(pi) and never a pole.
inline ExactValue gamma_exact(const Rational& arg) {
    detail::require_lattice(arg, "gamma_exact");
    if (is_integer(arg)) {
        if (arg <= 0) return ExactValue::pole(1);
        long n = detail::to_long_checked(rational_num(arg), "gamma_exact");
        return ExactValue(Rational(factorial_integer(n - 1)));
    }
    // arg = m + 1/2 for integer m
    Rational m = arg - Rational(1, 2);
    long mi = detail::to_long_checked(rational_num(m), "gamma_exact");
    Rational coeff(1);
    if (mi >= 0) {
        for (long j = 0; j < mi; ++j) coeff *= Rational(2 * j + 1, 2);
    } else {
        for (long j = mi; j < 0; ++j) coeff /= Rational(2 * j + 1, 2);
    }
    return ExactValue(coeff, 1);
}

/// Pochhammer symbol (p)_q = Gamma(p+q)/Gamma(p).
///
/// Integer q is evaluated by the product form p(p+1)...(p+q-1) (reciprocal
/// product for negative q), so pole/pole gamma ratios cancel exactly and the
/// empty product gives (p)_0 = 1 even at gamma poles. Half-integer q goes
/// through the gamma ratio, with the pole/zero classification of the ratio:
///   Gamma(p+q) pole, Gamma(p) finite -> pole
///   Gamma(p) pole, Gamma(p+q) finite -> exact zero
inline ExactValue pochhammer(const Rational& p, const Rational& q) {
    detail::require_lattice(p, "pochhammer");
    detail::require_lattice(q, "pochhammer");
    if (is_integer(q)) {
        long n = detail::to_long_checked(rational_num(q), "pochhammer");
        if (n >= 0) {
            Rational prod(1);
            for (long j = 0; j < n; ++j) prod *= p + j;
            return ExactValue(prod);
        }
        // (p)_{-n} = 1 / ((p-n)(p-n+1)...(p-1))
        Rational prod(1);
        int zero_factors = 0;
        for (long j = 1; j <= -n; ++j) {
            Rational factor = p - j;
            if (factor == 0)
                ++zero_factors;
            else
                prod *= factor;
        }
        if (zero_factors > 0) return ExactValue::pole(zero_factors);
        return ExactValue(Rational(1) / prod);
    }
    ExactValue num = gamma_exact(p + q);
    ExactValue den = gamma_exact(p);
    if (num.is_pole() && den.is_pole())
        throw IndeterminateRatio("pochhammer(" + rational_to_string(p) + ", " +
                                 rational_to_string(q) + "): Gamma pole over Gamma pole");
    if (num.is_pole()) return ExactValue::pole(num.pole_order());
    if (den.is_pole()) return ExactValue::zero();
    return num / den;
}

/// Reflected Pochhammer, the right-hand side of (p)_q = (-1)^{-q} / (1-p)_{-q}.
/// Exact identity for integer q; for half-integer q it is the formal
/// continuation rule, with (-1)^{-q} rendered under the chosen branch.
inline ExactValue pochhammer_reflect(const Rational& p, const Rational& q,
                                     Branch branch = kDefaultBranch) {
    return minus_one_power(-q, branch) / pochhammer(Rational(1) - p, -q);
}

/// Continuation replacement for 1/(p)_q: the factor (-1)^{-q} (1-p)_{-q}
/// obtained by moving the reflected symbol into the numerator. This is the
/// form the negative-dimensional pipeline uses to continue the exponent s.
inline ExactValue pochhammer_inverse_continued(const Rational& p, const Rational& q,
                                               Branch branch = kDefaultBranch) {
    return minus_one_power(-q, branch) * pochhammer(Rational(1) - p, -q);
}

} // namespace negdim
