#pragma once

// Exact checkers for the first-order operators on quaternionic polynomials:
// Fueter D, the psi-variant D' (k-term sign flipped), q-holomorphicity,
// J_p-holomorphicity and harmonicity.

#include "hqreg/hstructures.hpp"
#include "hqreg/qpolynomial.hpp"

namespace hqreg {

struct OperatorCheck {
    bool holds = false;
    /// Operator output; the zero function exactly when the check holds.
    QFunction residual;
};

struct RegularityVerdict {
    bool fueter_regular = false;
    bool psi_regular = false;
    bool harmonic = false;
    /// D' f; zero iff psi_regular.
    QFunction residual;
};

/// D f = df/dx0 + i df/dx1 + j df/dx2 + k df/dx3, computed in real coordinates.
QFunction fueter_operator(const QFunction& f);
/// D' f = df/dx0 + i df/dx1 + j df/dx2 - k df/dx3.
QFunction psi_operator(const QFunction& f);

/// Decided by check_psi on the x3 -> -x3 pullback; residual is D f itself.
OperatorCheck check_fueter(const QFunction& f);

/// Cauchy-Riemann form: df1/dz1bar = d(f2bar)/dz2 and df1/dz2bar = -d(f2bar)/dz1.
/// Residual is D' f.
OperatorCheck check_psi(const QFunction& f);

/// df + i J1*(df) + j J2*(df) + k J3*(df) = 0, evaluated with the real Jacobian
/// and the structure matrices.
bool check_q_holomorphic(const QFunction& f);

/// |w|^2 df + L_w df J_w = 0, the cleared form of df + p J_p*(df) = 0.
bool check_holomorphic_p(const QFunction& f, const ImaginaryDirection& w);

bool check_harmonic(const QFunction& f);

RegularityVerdict check_regularity(const QFunction& f);

}  // namespace hqreg
