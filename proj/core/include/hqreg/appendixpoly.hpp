#pragma once

// Linear psi-regular functions
//   f = (z1 + z2 j) q1 + (z2 + z1 j) q2 + (conj z1 + conj z2 j) q3,
//   q1 = a1 + a2 j, q2 = b1 + b2 j, q3 = c1 + c2 j,
// and the explicit degree-6 real form in (a, b, c) that equals
// (1/16) det(A - (tr A) I) on the unit ball.

#include "hqreg/hstructures.hpp"
#include "hqreg/qpolynomial.hpp"
#include "hqreg/rational.hpp"

#include <string>

namespace hqreg {

struct LinearCoefficients {
    Quaternion q1, q2, q3;

    static LinearCoefficients from_complex(const GaussianRational& a1, const GaussianRational& a2,
                                           const GaussianRational& b1, const GaussianRational& b2,
                                           const GaussianRational& c1, const GaussianRational& c2) {
        return {Quaternion::from_complex_pair(a1, a2), Quaternion::from_complex_pair(b1, b2),
                Quaternion::from_complex_pair(c1, c2)};
    }
};

QFunction linear_function(const LinearCoefficients& coeffs);

/// Number of monomials in the explicit form.
std::size_t appendix_term_count();

/// Evaluates the explicit form term by term. Real for every input.
GaussianRational appendix_value(const LinearCoefficients& coeffs);

struct AppendixCheck {
    bool consistent = false;
    GaussianRational appendix;
    /// (1/16) det(A - (tr A) I) for linear_function(coeffs) on the unit ball.
    Rational pipeline;

    std::string describe() const;
};

AppendixCheck appendix_consistency(const LinearCoefficients& coeffs);

}  // namespace hqreg
