// negdim: evaluate the damped exponential integral by negative-dimensional
// resummation, residues and quadrature; run the oracle corpus; run the
// exact-identity suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <negdim/corpus.hpp>
#include <negdim/identities.hpp>
#include <negdim/report.hpp>
#include <negdim/resum.hpp>

namespace {

using namespace negdim;

std::vector<double> parse_a_values(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0))
            throw ConfigParseError("bad range '" + text + "', expected start:stop:step");
        for (double a = start; a <= stop + 1e-12 * step; a += step) out.push_back(a);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigParseError("bad a value '" + item + "'");
        }
    }
    return out;
}

std::vector<Method> parse_methods(const std::string& text) {
    std::vector<Method> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "ndim")
            out.push_back(Method::ndim);
        else if (item == "residue")
            out.push_back(Method::residue);
        else if (item == "quad")
            out.push_back(Method::quad);
        else
            throw ConfigParseError("unknown method '" + item + "' (expected ndim, residue, quad)");
    }
    return out;
}

OutputFormat parse_format(const std::string& text) {
    if (text == "table" || text == "human") return OutputFormat::human;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw ConfigParseError("unknown format '" + text + "'");
}

std::int64_t budget_from_env(std::int64_t fallback) {
    const char* env = std::getenv("NDIM_EVAL_BUDGET");
    if (!env) return fallback;
    try {
        std::int64_t v = std::stoll(env);
        if (v <= 0) throw std::invalid_argument("non-positive");
        return v;
    } catch (const std::exception&) {
        throw ConfigParseError("bad NDIM_EVAL_BUDGET value");
    }
}

void print_terms_table(double a, int m_max, OutputFormat format) {
    auto rows = term_table(rational_from_double(a), m_max);
    switch (format) {
        case OutputFormat::human:
            std::printf("terms for a = %.6g\n", a);
            std::printf("  %4s  %-24s %-24s %s\n", "m", "term (exact)", "term", "partial sum");
            for (const auto& row : rows)
                std::printf("  %4d  %-24s %-24.17g %.17g\n", row.m, row.term.to_string().c_str(),
                            row.term_value, row.partial_sum);
            break;
        case OutputFormat::json: {
            std::string s = "{\"a\": " + format_double(a) + ", \"terms\": [";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i) s += ", ";
                s += "{\"m\": " + std::to_string(rows[i].m) + ", \"term_exact\": \"" +
                     rows[i].term.to_string() + "\", \"term\": " + format_double(rows[i].term_value) +
                     ", \"partial\": " + format_double(rows[i].partial_sum) + "}";
            }
            s += "]}";
            std::printf("%s\n", s.c_str());
            break;
        }
        case OutputFormat::csv:
            std::printf("a,m,term_exact,term,partial\n");
            for (const auto& row : rows)
                std::printf("%s,%d,%s,%s,%s\n", format_double(a).c_str(), row.m,
                            row.term.to_string().c_str(), format_double(row.term_value).c_str(),
                            format_double(row.partial_sum).c_str());
            break;
    }
}

int cmd_eval(const RunConfig& config) {
    config.validate();
    if (config.terms_table >= 0) {
        for (double a : config.a_values) print_terms_table(a, config.terms_table, config.format);
        return 0;
    }
    bool all_within = true;
    bool csv_header_done = false;
    for (double a : config.a_values) {
        EvaluationReport report = evaluate_integral(a, config);
        if (report.max_relative_discrepancy() > config.compare_tol) all_within = false;
        switch (config.format) {
            case OutputFormat::human: std::printf("%s", report_to_table(report).c_str()); break;
            case OutputFormat::json: std::printf("%s\n", report_to_json(report).c_str()); break;
            case OutputFormat::csv:
                if (!csv_header_done) {
                    std::printf("%s\n", report_csv_header().c_str());
                    csv_header_done = true;
                }
                std::printf("%s\n", report_to_csv(report).c_str());
                break;
        }
    }
    return all_within ? 0 : 1;
}

int cmd_corpus(const std::string& path, double abs_tol, double rel_tol,
               std::int64_t eval_budget) {
    std::vector<CorpusEntry> entries;
    if (path.empty()) {
        entries = builtin_corpus();
    } else {
        std::ifstream in(path);
        if (!in) throw ConfigParseError("cannot open corpus file '" + path + "'");
        entries = parse_corpus(in);
    }
    int failures = 0;
    int index = 0;
    for (const auto& entry : entries) {
        ++index;
        double residue = integrate_by_residues(entry.integrand).real();
        QuadratureRequest req;
        req.integrand = cos_projected_integrand(entry.integrand);
        req.abs_tol = std::min(1e-11, abs_tol / 10);
        req.rel_tol = std::min(1e-10, rel_tol / 10);
        req.max_evaluations = eval_budget;
        if (entry.integrand.omega > 0) {
            req.transform = Transform::oscillatory_panels;
            req.omega = entry.integrand.omega;
        }
        QuadratureResult quad = integrate_numeric(req);
        double diff = std::abs(residue - quad.value);
        double bound = std::max(abs_tol, rel_tol * std::abs(residue));
        bool ok = diff <= bound;
        if (entry.expected)
            ok = ok && std::abs(residue - *entry.expected) <= bound &&
                 std::abs(quad.value - *entry.expected) <= bound;
        if (!ok) ++failures;
        std::printf("%s entry %2d: residue %.17g  quad %.17g  diff %.3g  [%s]\n",
                    ok ? "PASS" : "FAIL", index, residue, quad.value, diff,
                    entry.provenance.c_str());
    }
    std::printf("corpus summary: %d/%d entries within tolerance\n",
                static_cast<int>(entries.size()) - failures, static_cast<int>(entries.size()));
    return failures == 0 ? 0 : 1;
}

int cmd_identities(const std::string& suite_filter, long max_q, int max_r,
                   const std::string& branch_name, std::int64_t eval_budget) {
    Branch branch;
    if (branch_name == "plus-i")
        branch = Branch::plus_i;
    else if (branch_name == "minus-i")
        branch = Branch::minus_i;
    else
        throw ConfigParseError("unknown branch '" + branch_name + "' (expected plus-i or minus-i)");

    bool any_failed = false;
    bool any_selected = false;
    for (const auto& spec : identity_suite_specs(max_q, max_r, branch, eval_budget)) {
        if (!suite_filter.empty() && spec.name.find(suite_filter) == std::string::npos) continue;
        any_selected = true;
        SuiteResult s = spec.run();
        if (!s.passed) any_failed = true;
        std::printf("%s %-24s checked %-6ld failed %-4ld %s\n", s.passed ? "PASS" : "FAIL",
                    s.name.c_str(), s.checked, s.failed, s.detail.c_str());
    }
    if (!any_selected) throw ConfigParseError("no suite matches '" + suite_filter + "'");
    return any_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluate real integrals by negative-dimensional resummation, "
                 "residues and quadrature"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate the integral for one or more a values");
    std::string a_text = "1";
    std::string methods_text = "ndim,residue,quad";
    std::string format_text = "table";
    RunConfig config;
    eval->add_option("--a", a_text, "a values: list '1,2' or range 'start:stop:step'");
    eval->add_option("--methods", methods_text, "comma list of ndim, residue, quad");
    eval->add_option("--format", format_text, "table, json or csv");
    eval->add_option("--compare-tol", config.compare_tol, "pairwise relative tolerance for exit status");
    eval->add_option("--quad-abs-tol", config.quad_abs_tol, "quadrature absolute tolerance");
    eval->add_option("--quad-rel-tol", config.quad_rel_tol, "quadrature relative tolerance");
    eval->add_option("--series-tol", config.series_stop_tol, "series stop tolerance");
    eval->add_option("--max-terms", config.max_terms, "series term budget");
    eval->add_option("--terms-table", config.terms_table, "emit the per-term ledger up to m");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "run the oracle-agreement corpus");
    std::string corpus_path;
    std::string write_builtin;
    double corpus_abs = 1e-9, corpus_rel = 1e-8;
    corpus->add_option("path", corpus_path, "corpus file (JSON lines); built-in when omitted");
    corpus->add_option("--abs-tol", corpus_abs, "absolute agreement tolerance");
    corpus->add_option("--rel-tol", corpus_rel, "relative agreement tolerance");
    corpus->add_option("--write-builtin", write_builtin, "write the built-in corpus to a file and exit");

    // identities
    auto* identities = app.add_subcommand("identities", "run the exact-identity suites");
    std::string suite_filter;
    std::string branch_name = "plus-i";
    long max_q = 20;
    int max_r = 40;
    identities->add_option("--suite", suite_filter, "run only suites whose name contains this");
    identities->add_option("--max-q", max_q, "Pochhammer subscript range");
    identities->add_option("--max-r", max_r, "continuation power range");
    identities->add_option("--branch", branch_name, "branch of (-1)^(1/2): plus-i or minus-i");

    CLI11_PARSE(app, argc, argv);

    try {
        std::int64_t budget = budget_from_env(config.eval_budget);
        config.eval_budget = budget;
        if (eval->parsed()) {
            config.a_values = parse_a_values(a_text);
            config.methods = parse_methods(methods_text);
            config.format = parse_format(format_text);
            return cmd_eval(config);
        }
        if (corpus->parsed()) {
            if (!write_builtin.empty()) {
                std::ofstream out(write_builtin);
                if (!out) throw ConfigParseError("cannot open '" + write_builtin + "' for writing");
                for (const auto& entry : builtin_corpus())
                    out << serialize_corpus_entry(entry) << "\n";
                return 0;
            }
            return cmd_corpus(corpus_path, corpus_abs, corpus_rel, budget);
        }
        if (identities->parsed())
            return cmd_identities(suite_filter, max_q, max_r, branch_name, budget);
    } catch (const CorpusParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ConfigParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
