// hqreg: regularity, energy and holomorphicity analysis of quaternionic
// polynomial functions.
//
//   hqreg analyze --function "<expr>" [--domain unit-ball|ball:<r>|box:...] [--json] [--approx]
//   hqreg check --function "<expr>" --direction w1,w2,w3
//   hqreg examples
//   hqreg appendix --q1 <c>,<c> --q2 <c>,<c> --q3 <c>,<c>
//
// Exit codes: 0 success, 1 analysis error (or failed check), 2 parse error.

#include "hqreg/appendixpoly.hpp"
#include "hqreg/criterion.hpp"
#include "hqreg/expression.hpp"
#include "hqreg/reference_examples.hpp"
#include "hqreg/regularity.hpp"
#include "hqreg/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kAnalysisError = 1;
constexpr int kParseError = 2;

// "a,b" -> two complex constants. Commas inside parentheses do not split.
std::pair<hqreg::GaussianRational, hqreg::GaussianRational> parse_complex_pair(const std::string& text) {
    int depth = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == '(') ++depth;
        else if (text[p] == ')') --depth;
        else if (text[p] == ',' && depth == 0)
            return {hqreg::parse_complex_constant(text.substr(0, p)), hqreg::parse_complex_constant(text.substr(p + 1))};
    }
    throw hqreg::ParseError("expected two complex numbers separated by ','", 0);
}

hqreg::ImaginaryDirection parse_direction(const std::string& text) {
    std::vector<hqreg::Rational> w;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            w.push_back(hqreg::parse_rational(piece));
        } catch (const std::invalid_argument& e) {
            throw hqreg::ParseError(e.what(), start);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (w.size() != 3) throw hqreg::ParseError("direction needs three components w1,w2,w3", 0);
    try {
        return {w[0], w[1], w[2]};
    } catch (const std::invalid_argument& e) {
        throw hqreg::ParseError(e.what(), 0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularity and holomorphicity analysis of quaternionic polynomial functions"};
    app.require_subcommand(1);

    std::string function;
    std::string domain = "unit-ball";
    bool as_json = false;
    bool approx = false;
    auto* analyze = app.add_subcommand("analyze", "Full report: regularity, energy, matrix A, classification");
    analyze->add_option("--function,-f", function, "Function, e.g. \"conj(z1) + (z1 + conj(z2))*j\"")->required();
    analyze->add_option("--domain,-d", domain, "unit-ball | ball:<r> | box:<a,b>x<c,d>x<e,f>x<g,h>");
    analyze->add_flag("--json", as_json, "Machine-readable report");
    analyze->add_flag("--approx", approx, "Add decimal approximations (marked as such)");

    std::string direction;
    auto* check = app.add_subcommand("check", "Decide J_p-holomorphicity for p = w/|w|");
    check->add_option("--function,-f", function, "Function expression")->required();
    check->add_option("--direction,-w", direction, "w1,w2,w3 (rationals, not all zero)")->required();

    auto* examples = app.add_subcommand("examples", "Run the built-in regression table of published examples");
    examples->alias("paper-examples");

    std::string q1, q2, q3;
    auto* appendix = app.add_subcommand("appendix", "Degree-6 holomorphicity form for a linear psi-regular function");
    appendix->add_option("--q1", q1, "a1,a2 (complex, e.g. 1+2*i,0)")->required();
    appendix->add_option("--q2", q2, "b1,b2")->required();
    appendix->add_option("--q3", q3, "c1,c2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*analyze) {
            const hqreg::AnalysisReport report = hqreg::analyze(function, hqreg::parse_domain(domain));
            const hqreg::ReportOptions options{approx};
            std::cout << (as_json ? hqreg::to_json(report, options) + "\n" : hqreg::to_text(report, options));
            return kOk;
        }
        if (*check) {
            const hqreg::QFunction f = hqreg::parse_function(function);
            const hqreg::ImaginaryDirection w = parse_direction(direction);
            const bool holds = hqreg::check_holomorphic_p(f, w);
            std::cout << (holds ? "holomorphic" : "not holomorphic") << " for w = (" << hqreg::to_string(w[0]) << ","
                      << hqreg::to_string(w[1]) << "," << hqreg::to_string(w[2]) << ")\n";
            return holds ? kOk : kAnalysisError;
        }
        if (*examples) {
            const hqreg::ExampleSummary summary = hqreg::run_reference_examples();
            std::cout << summary.to_text();
            return summary.all_passed() ? kOk : kAnalysisError;
        }
        if (*appendix) {
            const auto [a1, a2] = parse_complex_pair(q1);
            const auto [b1, b2] = parse_complex_pair(q2);
            const auto [c1, c2] = parse_complex_pair(q3);
            const auto coeffs = hqreg::LinearCoefficients::from_complex(a1, a2, b1, b2, c1, c2);
            const hqreg::AppendixCheck result = hqreg::appendix_consistency(coeffs);
            std::cout << "f = " << hqreg::to_string(hqreg::linear_function(coeffs)) << "\n"
                      << result.describe() << "\n"
                      << (result.pipeline == 0 ? "holomorphic for some J_p" : "not holomorphic for any J_p") << "\n";
            return result.consistent ? kOk : kAnalysisError;
        }
    } catch (const hqreg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAnalysisError;
    }
    return kOk;
}
