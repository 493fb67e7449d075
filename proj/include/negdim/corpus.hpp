#pragma once

// Corpus of rational x exponential integrands for the oracle-agreement
// harness. File format: one JSON object per line with fields
//   numerator   - ascending real coefficients of P
//   roots       - [re, im, multiplicity] triples (upper half-plane)
//   omega       - frequency of the e^{i omega x} factor (0 = pure rational)
//   expected    - known value of the cosine-projected integral, or null
//   provenance  - where the expected value comes from
// Blank lines are ignored. Parse errors carry the 1-based line number.

#include <cstdio>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "residues.hpp"

namespace negdim {

struct CorpusEntry {
    RationalIntegrand integrand;
    std::optional<double> expected;
    std::string provenance;
};

inline CorpusEntry parse_corpus_line(const std::string& line, int line_number) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CorpusParseError(e.what(), line_number);
    }
    try {
        CorpusEntry entry;
        entry.integrand.numerator = j.at("numerator").get<std::vector<double>>();
        for (const auto& triple : j.at("roots")) {
            if (!triple.is_array() || triple.size() != 3)
                throw CorpusParseError("root must be a [re, im, multiplicity] triple",
                                       line_number);
            entry.integrand.factors.push_back(
                {Complex(triple[0].get<double>(), triple[1].get<double>()),
                 triple[2].get<int>()});
        }
        entry.integrand.omega = j.at("omega").get<double>();
        if (j.contains("expected") && !j["expected"].is_null())
            entry.expected = j["expected"].get<double>();
        entry.provenance = j.value("provenance", "unknown");
        entry.integrand.validate();
        return entry;
    } catch (const CorpusParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw CorpusParseError(e.what(), line_number);
    }
}

inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        entries.push_back(parse_corpus_line(line, line_number));
    }
    return entries;
}

namespace detail {
inline std::string json_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
} // namespace detail

inline std::string serialize_corpus_entry(const CorpusEntry& entry) {
    std::string out = "{\"numerator\": [";
    for (std::size_t i = 0; i < entry.integrand.numerator.size(); ++i) {
        if (i) out += ", ";
        out += detail::json_number(entry.integrand.numerator[i]);
    }
    out += "], \"roots\": [";
    for (std::size_t i = 0; i < entry.integrand.factors.size(); ++i) {
        const auto& f = entry.integrand.factors[i];
        if (i) out += ", ";
        out += "[" + detail::json_number(f.root.real()) + ", " +
               detail::json_number(f.root.imag()) + ", " + std::to_string(f.multiplicity) + "]";
    }
    out += "], \"omega\": " + detail::json_number(entry.integrand.omega);
    out += ", \"expected\": ";
    out += entry.expected ? detail::json_number(*entry.expected) : "null";
    out += ", \"provenance\": \"" + entry.provenance + "\"}";
    return out;
}

/// Built-in corpus: multiplicities 1..3, omega in {0, 1, 2}, symmetric and
/// off-axis conjugate pairs. Expected values are closed forms where known and
/// otherwise values frozen from the quadrature oracle.
inline std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> c;
    auto add = [&c](std::vector<double> num, std::vector<DenominatorFactor> factors,
                    double omega, std::optional<double> expected, std::string provenance) {
        CorpusEntry e;
        e.integrand.numerator = std::move(num);
        e.integrand.factors = std::move(factors);
        e.integrand.omega = omega;
        e.expected = expected;
        e.provenance = std::move(provenance);
        c.push_back(std::move(e));
    };

    const Complex i1(0.0, 1.0), i2(0.0, 2.0), i3(0.0, 3.0);
    add({1}, {{i1, 1}}, 0, M_PI, "closed-form");
    add({1}, {{i1, 2}}, 0, M_PI / 2, "closed-form");
    add({1}, {{i1, 3}}, 0, 3 * M_PI / 8, "closed-form");
    add({0, 0, 1}, {{i1, 2}}, 0, M_PI / 2, "closed-form");
    add({1}, {{i1, 1}, {i2, 1}}, 0, M_PI / 6, "closed-form");
    add({1}, {{i1, 1}}, 1, M_PI * std::exp(-1.0), "closed-form");
    add({1}, {{i2, 1}}, 1, M_PI / 2 * std::exp(-2.0), "closed-form");
    add({1}, {{i1, 1}}, 2, M_PI * std::exp(-2.0), "closed-form");
    add({1}, {{i1, 2}}, 1, M_PI * std::exp(-1.0), "closed-form");
    add({2, 0, 1}, {{i1, 1}, {i3, 1}}, 1,
        M_PI / 8 * std::exp(-1.0) + 7 * M_PI / 24 * std::exp(-3.0), "closed-form");
    add({1}, {{i1, 2}, {i2, 1}}, 2,
        7 * M_PI / 18 * std::exp(-2.0) + M_PI / 18 * std::exp(-4.0), "closed-form");
    add({1}, {{Complex(1.0, 1.0), 1}, {Complex(-1.0, 1.0), 1}}, 0, M_PI / 4, "closed-form");
    add({1}, {{Complex(1.0, 1.0), 1}, {Complex(-1.0, 1.0), 1}}, 1, 0.39923829581122339,
        "quadrature-oracle");
    add({0, 0, 1}, {{i1, 2}, {i2, 1}}, 0, M_PI / 18, "closed-form");
    return c;
}

} // namespace negdim
