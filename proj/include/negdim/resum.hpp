#pragma once

// Reconstruction of the damped exponential integral by summing the series of
// negative-dimensional term values: term(m) = (pi/a)(-a)^m / m!. Terms are
// accumulated in exact rational arithmetic (a is converted to its exact
// dyadic value) and rendered to floating point only for diagnostics, so
// alternating cancellation costs no precision even when terms grow before
// they shrink.

#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "exact_value.hpp"
#include "ndim.hpp"
#include "rational.hpp"

namespace negdim {

struct SeriesDiagnostics {
    int terms_used = 0;
    double last_term_magnitude = 0.0;
    std::vector<double> partial_sums;  // tail window of the running sum
    bool converged = false;
    std::optional<double> closed_form_target;
};

struct ResumResult {
    double value = 0.0;
    SeriesDiagnostics diagnostics;
};

/// One row of the per-term ledger.
struct TermRow {
    int m = 0;
    ExactValue term;           // exact rational multiple of pi
    double term_value = 0.0;
    double partial_sum = 0.0;
};

namespace detail {

/// Exact term m of the expansion, a_of_r(m, a) / m!, as a coefficient of pi.
/// The prescription is the engine's only entry into the continued values.
inline Rational term_coefficient(int m, const Rational& a) {
    return a_of_r_exact(m, a).coeff() / Rational(factorial_integer(m));
}

} // namespace detail

/// Sum the series until two consecutive terms fall below
/// stop_tolerance * max(1, |partial sum|). A single-term test would misfire
/// near cancellation points of the alternating series (a close to 1 at m=1).
inline ResumResult resum_exp_series(double a, double stop_tolerance, int max_terms) {
    if (!(a > 0)) throw Error("resum_exp_series: a must be positive");
    if (!(stop_tolerance > 0)) throw Error("resum_exp_series: stop_tolerance must be positive");
    if (max_terms < 1) throw Error("resum_exp_series: max_terms must be >= 1");

    const Rational a_exact = rational_from_double(a);
    constexpr std::size_t window = 8;

    ResumResult out;
    out.diagnostics.closed_form_target = M_PI / a * std::exp(-a);

    Rational sum(0);
    int small_streak = 0;
    for (int m = 0; m < max_terms; ++m) {
        Rational coeff = detail::term_coefficient(m, a_exact);
        sum += coeff;
        double partial = M_PI * to_double(sum);
        double magnitude = M_PI * std::abs(to_double(coeff));

        out.diagnostics.terms_used = m + 1;
        out.diagnostics.last_term_magnitude = magnitude;
        out.diagnostics.partial_sums.push_back(partial);
        if (out.diagnostics.partial_sums.size() > window)
            out.diagnostics.partial_sums.erase(out.diagnostics.partial_sums.begin());

        small_streak = magnitude <= stop_tolerance * std::max(1.0, std::abs(partial))
                           ? small_streak + 1
                           : 0;
        if (small_streak >= 2) {
            out.diagnostics.converged = true;
            out.value = partial;
            return out;
        }
    }
    throw NotConverged("resum_exp_series: " + std::to_string(max_terms) +
                       " terms exhausted without meeting the stop rule");
}

/// Exact per-term ledger for m = 0..m_max with running floating partial sums.
inline std::vector<TermRow> term_table(const Rational& a, int m_max) {
    if (!(a > 0)) throw Error("term_table: a must be positive");
    if (m_max < 0) throw Error("term_table: m_max must be >= 0");
    std::vector<TermRow> rows;
    rows.reserve(m_max + 1);
    Rational sum(0);
    for (int m = 0; m <= m_max; ++m) {
        Rational coeff = detail::term_coefficient(m, a);
        sum += coeff;
        TermRow row;
        row.m = m;
        row.term = ExactValue(coeff, 2);
        row.term_value = M_PI * to_double(coeff);
        row.partial_sum = M_PI * to_double(sum);
        rows.push_back(row);
    }
    return rows;
}

} // namespace negdim
