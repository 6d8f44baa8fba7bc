#pragma once

// Built-in regression table: published worked examples for the energy,
// the energy matrix A, the classification, and J_p-holomorphicity.

#include "hqreg/ballintegrals.hpp"

#include <string>
#include <vector>

namespace hqreg {

struct ExampleOutcome {
    std::string name;
    std::string function;
    bool passed = true;
    /// "expected ..., computed ..." lines for each failed check.
    std::vector<std::string> mismatches;
};

struct ExampleSummary {
    std::vector<ExampleOutcome> cases;

    bool all_passed() const;
    std::size_t failures() const;
    std::string to_text() const;
};

/// Runs every case on the unit ball. The integrator is injectable so a
/// corrupted measure can be shown to fail.
ExampleSummary run_reference_examples(const Integrator& integrate = make_integrator(DomainSpec::unit_ball()));

}  // namespace hqreg
