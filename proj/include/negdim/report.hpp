#pragma once

// Evaluation reports and their serializations. JSON (one object per line) is
// the machine format of record; CSV carries the same columns flattened; the
// human table is lossy. Floating-point fields print with 17 significant
// digits so values round-trip; discrepancies are always recomputed from the
// value fields rather than stored.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "residues.hpp"
#include "resum.hpp"

namespace negdim {

enum class Method { ndim, residue, quad };
enum class OutputFormat { human, json, csv };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::ndim: return "ndim";
        case Method::residue: return "residue";
        case Method::quad: return "quad";
    }
    return "?";
}

struct RunConfig {
    std::vector<Method> methods{Method::ndim, Method::residue, Method::quad};
    std::vector<double> a_values{1.0};
    double quad_abs_tol = 1e-12;
    double quad_rel_tol = 1e-12;
    double series_stop_tol = 1e-14;
    int max_terms = 200;
    double compare_tol = 1e-9;
    OutputFormat format = OutputFormat::human;
    std::int64_t eval_budget = 2'000'000;
    int terms_table = -1;  // >= 0 requests the per-term ledger

    void validate() const {
        if (methods.empty()) throw ConfigParseError("at least one method must be selected");
        if (a_values.empty()) throw ConfigParseError("at least one value of a is required");
        for (double a : a_values)
            if (!(a > 0)) throw ConfigParseError("all a values must be positive");
        if (!(compare_tol > 0)) throw ConfigParseError("comparison tolerance must be positive");
    }

    bool has(Method m) const {
        for (Method x : methods)
            if (x == m) return true;
        return false;
    }
};

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Echo of the inputs the methods ran with.
struct InputEcho {
    double series_stop_tol = 0.0;
    int max_terms = 0;
    double quad_abs_tol = 0.0;
    double quad_rel_tol = 0.0;
    std::int64_t eval_budget = 0;
};

struct EvaluationReport {
    double a = 0.0;
    InputEcho echo;
    std::optional<double> ndim_value;
    std::optional<double> residue_value;
    std::optional<double> quad_value;
    std::optional<double> quad_error_estimate;
    std::optional<std::int64_t> quad_evaluations;
    std::optional<SeriesDiagnostics> series;
    double ndim_ms = 0.0, residue_ms = 0.0, quad_ms = 0.0;

    struct Discrepancy {
        std::string pair;
        double abs_diff = 0.0;
        double rel_diff = 0.0;
    };

    /// Pairwise discrepancies, recomputed from the value fields on demand.
    std::vector<Discrepancy> discrepancies() const {
        std::vector<std::pair<std::string, double>> vals;
        if (ndim_value) vals.emplace_back("ndim", *ndim_value);
        if (residue_value) vals.emplace_back("residue", *residue_value);
        if (quad_value) vals.emplace_back("quad", *quad_value);
        std::vector<Discrepancy> out;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                Discrepancy d;
                d.pair = vals[i].first + "-" + vals[j].first;
                d.abs_diff = std::abs(vals[i].second - vals[j].second);
                double scale = std::max(std::abs(vals[i].second), std::abs(vals[j].second));
                d.rel_diff = scale > 0 ? d.abs_diff / scale : 0.0;
                out.push_back(std::move(d));
            }
        }
        return out;
    }

    double max_relative_discrepancy() const {
        double worst = 0.0;
        for (const auto& d : discrepancies()) worst = std::max(worst, d.rel_diff);
        return worst;
    }
};

/// The target integrand e^{ix}/(x^2+a^2) as a factored rational.
inline RationalIntegrand exponential_lorentzian(double a) {
    RationalIntegrand g;
    g.numerator = {1.0};
    g.factors = {{Complex(0.0, a), 1}};
    g.omega = 1.0;
    return g;
}

/// Evaluate the target integral at one value of a with every selected method.
inline EvaluationReport evaluate_integral(double a, const RunConfig& config) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    EvaluationReport report;
    report.a = a;
    report.echo = {config.series_stop_tol, config.max_terms, config.quad_abs_tol,
                   config.quad_rel_tol, config.eval_budget};

    if (config.has(Method::ndim)) {
        auto t0 = clock::now();
        try {
            ResumResult r = resum_exp_series(a, config.series_stop_tol, config.max_terms);
            report.ndim_value = r.value;
            report.series = std::move(r.diagnostics);
        } catch (const std::exception& e) {
            throw MethodFailure("ndim", e.what());
        }
        report.ndim_ms = ms_since(t0);
    }
    if (config.has(Method::residue)) {
        auto t0 = clock::now();
        try {
            report.residue_value = integrate_by_residues(exponential_lorentzian(a)).real();
        } catch (const std::exception& e) {
            throw MethodFailure("residue", e.what());
        }
        report.residue_ms = ms_since(t0);
    }
    if (config.has(Method::quad)) {
        auto t0 = clock::now();
        try {
            QuadratureRequest req;
            req.integrand = cos_projected_integrand(exponential_lorentzian(a));
            req.abs_tol = config.quad_abs_tol;
            req.rel_tol = config.quad_rel_tol;
            req.transform = Transform::oscillatory_panels;
            req.omega = 1.0;
            req.max_evaluations = config.eval_budget;
            QuadratureResult q = integrate_numeric(req);
            report.quad_value = q.value;
            report.quad_error_estimate = q.error_estimate;
            report.quad_evaluations = q.evaluations;
        } catch (const std::exception& e) {
            throw MethodFailure("quad", e.what());
        }
        report.quad_ms = ms_since(t0);
    }
    return report;
}

// --- serialization ---------------------------------------------------------

inline std::string report_to_json(const EvaluationReport& r) {
    std::string s = "{\"a\": " + format_double(r.a);
    s += ", \"inputs\": {\"series_stop_tol\": " + format_double(r.echo.series_stop_tol) +
         ", \"max_terms\": " + std::to_string(r.echo.max_terms) +
         ", \"quad_abs_tol\": " + format_double(r.echo.quad_abs_tol) +
         ", \"quad_rel_tol\": " + format_double(r.echo.quad_rel_tol) +
         ", \"eval_budget\": " + std::to_string(r.echo.eval_budget) + "}";
    auto field = [&s](const char* name, const std::optional<double>& v) {
        if (v) s += std::string(", \"") + name + "\": " + format_double(*v);
    };
    field("ndim", r.ndim_value);
    field("residue", r.residue_value);
    field("quad", r.quad_value);
    field("quad_error_estimate", r.quad_error_estimate);
    if (r.quad_evaluations) s += ", \"quad_evaluations\": " + std::to_string(*r.quad_evaluations);
    if (r.series) {
        s += ", \"series\": {\"terms_used\": " + std::to_string(r.series->terms_used);
        s += ", \"last_term_magnitude\": " + format_double(r.series->last_term_magnitude);
        s += ", \"converged\": " + std::string(r.series->converged ? "true" : "false");
        if (r.series->closed_form_target)
            s += ", \"closed_form_target\": " + format_double(*r.series->closed_form_target);
        s += "}";
    }
    s += ", \"discrepancies\": {";
    bool first = true;
    for (const auto& d : r.discrepancies()) {
        if (!first) s += ", ";
        first = false;
        s += "\"" + d.pair + "\": {\"abs\": " + format_double(d.abs_diff) +
             ", \"rel\": " + format_double(d.rel_diff) + "}";
    }
    s += "}";
    s += ", \"timing_ms\": {\"ndim\": " + format_double(r.ndim_ms) +
         ", \"residue\": " + format_double(r.residue_ms) +
         ", \"quad\": " + format_double(r.quad_ms) + "}";
    s += "}";
    return s;
}

inline std::string report_csv_header() {
    return "a,ndim,residue,quad,quad_error_estimate,quad_evaluations,series_terms,"
           "series_converged,max_rel_discrepancy,series_stop_tol,quad_abs_tol,quad_rel_tol,"
           "eval_budget,ndim_ms,residue_ms,quad_ms";
}

inline std::string report_to_csv(const EvaluationReport& r) {
    auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    std::string s = format_double(r.a);
    s += "," + opt(r.ndim_value);
    s += "," + opt(r.residue_value);
    s += "," + opt(r.quad_value);
    s += "," + opt(r.quad_error_estimate);
    s += "," + (r.quad_evaluations ? std::to_string(*r.quad_evaluations) : std::string());
    s += "," + (r.series ? std::to_string(r.series->terms_used) : std::string());
    s += "," + (r.series ? std::string(r.series->converged ? "true" : "false") : std::string());
    s += "," + format_double(r.max_relative_discrepancy());
    s += "," + format_double(r.echo.series_stop_tol);
    s += "," + format_double(r.echo.quad_abs_tol);
    s += "," + format_double(r.echo.quad_rel_tol);
    s += "," + std::to_string(r.echo.eval_budget);
    s += "," + format_double(r.ndim_ms);
    s += "," + format_double(r.residue_ms);
    s += "," + format_double(r.quad_ms);
    return s;
}

inline std::string report_to_table(const EvaluationReport& r) {
    char buf[256];
    std::string s;
    std::snprintf(buf, sizeof(buf), "a = %.6g\n", r.a);
    s += buf;
    auto line = [&](const char* name, const std::optional<double>& v, const char* extra) {
        if (!v) return;
        std::snprintf(buf, sizeof(buf), "  %-8s %.15g%s\n", name, *v, extra);
        s += buf;
    };
    std::string series_note;
    if (r.series) {
        series_note = "  (" + std::to_string(r.series->terms_used) + " terms, " +
                      (r.series->converged ? "converged" : "not converged") + ")";
    }
    line("ndim", r.ndim_value, series_note.c_str());
    line("residue", r.residue_value, "");
    std::string quad_note;
    if (r.quad_evaluations) {
        quad_note = "  (" + std::to_string(*r.quad_evaluations) + " evaluations)";
    }
    line("quad", r.quad_value, quad_note.c_str());
    for (const auto& d : r.discrepancies()) {
        std::snprintf(buf, sizeof(buf), "  %-16s abs %.3g  rel %.3g\n", d.pair.c_str(),
                      d.abs_diff, d.rel_diff);
        s += buf;
    }
    return s;
}

} // namespace negdim
