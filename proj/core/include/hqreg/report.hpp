#pragma once

// Full analysis of one function on one domain, with text and JSON emitters.
// JSON carries every rational as an exact "n" or "n/d" string.

#include "hqreg/ballintegrals.hpp"
#include "hqreg/criterion.hpp"
#include "hqreg/qpolynomial.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hqreg {

struct AnalysisReport {
    static constexpr int kSchemaVersion = 1;

    std::string input;
    std::string normal_form;
    std::string domain;

    bool fueter_regular = false;
    bool psi_regular = false;
    bool q_holomorphic = false;
    bool harmonic = false;

    Rational energy;
    Matrix3 A;
    Rational trace;
    bool symmetric = false;
    std::array<Rational, 4> char_poly_shifted;

    ClassificationType type = ClassificationType::not_psi_regular;
    StructureSet structures;
    bool directions_verified = false;

    Rational invariant_K;
    Rational invariant_I;
    /// E + K - I/4; zero for every input.
    Rational identity_residual;

    /// Rank of the complex Jacobian when it is constant (affine f).
    std::optional<int> jacobian_rank;

    const Rational& shifted_determinant() const { return char_poly_shifted[0]; }

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b);
};

AnalysisReport analyze(const QFunction& f, const DomainSpec& domain, std::string input = {});

/// Parses then analyzes. Throws ParseError on malformed text.
AnalysisReport analyze(std::string_view text, const DomainSpec& domain);

struct ReportOptions {
    /// Adds an "approximations" block of decimal values, marked as such.
    bool approximations = false;
};

std::string to_json(const AnalysisReport& r, const ReportOptions& options = {});
/// Throws std::invalid_argument on schema mismatch or malformed values.
AnalysisReport report_from_json(std::string_view json);

std::string to_text(const AnalysisReport& r, const ReportOptions& options = {});

}  // namespace hqreg
