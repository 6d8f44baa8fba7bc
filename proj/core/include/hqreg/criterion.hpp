#pragma once

// Energy, the invariants K, I, I_p, the 3x3 energy matrix A and the
// holomorphicity criterion for psi-regular functions.
//
// Conventions (all integrals volume-normalized):
//   E(f)     = 1/2 avg tr(Jc conj(Jc)^T)
//   a_ab     = 1/2 avg tr(conj(B_a)^T C_b),  B_a = M_a Jc^T,  C_b = s_b Jc^T M_b,
//              s_1 = s_2 = 1, s_3 = -1  (left multiplication by k acts as -M_3)
//            = -1/2 avg tr(D^T L_{i_b} D J_a) in real coordinates
//   K(f)     = -tr A
//   I(f)     = 1/2 avg ||D + sum_a L_{i_a} D J_a||^2          so that E + K = I/4
//   I_p(f)   = avg ||D + L_p D J_p||^2                         so that X A X^T = E - I_p/4
//
// For psi-regular f: A is symmetric, E = tr A >= lambda_max, and f is J_p-holomorphic
// for some p exactly when det(A - (tr A) I) = 0; the admissible p span the kernel.

#include "hqreg/ballintegrals.hpp"
#include "hqreg/hstructures.hpp"
#include "hqreg/qpolynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hqreg {

struct EnergyMatrix {
    Matrix3 A;
    Rational energy;
    Rational trace;
    /// Coefficients c0..c3 of det(A - (tr A) I - t I) = c0 + c1 t + c2 t^2 + c3 t^3.
    std::array<Rational, 4> char_poly_shifted;

    /// det(A - (tr A) I).
    const Rational& shifted_determinant() const { return char_poly_shifted[0]; }
    bool is_symmetric() const { return A == A.transpose(); }
};

enum class ClassificationType { I_constant, II_circle, III_pair, IV_empty, not_psi_regular };

const char* to_string(ClassificationType t);
/// Inverse of to_string; throws std::invalid_argument for unknown names.
ClassificationType classification_type_from_string(const std::string& s);

using IntegerDirection = std::array<mpz_class, 3>;

/// The set of p in S^2 with f J_p-holomorphic, described with primitive integer vectors.
struct StructureSet {
    enum class Shape { empty, antipodal_pair, circle, sphere };
    Shape shape = Shape::empty;
    /// antipodal_pair: the direction w (and -w). circle: two directions spanning the plane.
    std::vector<IntegerDirection> directions;
    /// circle only: normal of the plane cutting the circle out of S^2.
    std::optional<IntegerDirection> normal;

    std::string describe() const;
};

const char* to_string(StructureSet::Shape s);

struct Classification {
    ClassificationType type = ClassificationType::not_psi_regular;
    StructureSet structures;
    EnergyMatrix energy_matrix;
    /// Every reported direction passed check_holomorphic_p.
    bool directions_verified = false;
};

Rational energy(const QFunction& f, const Integrator& integrate);
Rational energy(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

/// Energy matrix from the complex Jacobian and the M_a matrices.
EnergyMatrix matrix_A(const QFunction& f, const Integrator& integrate);
EnergyMatrix matrix_A(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

/// Same matrix computed from the real Jacobian, J_a and L_{i_b}; independent oracle.
Matrix3 matrix_A_real_coordinates(const QFunction& f, const Integrator& integrate);
Matrix3 matrix_A_real_coordinates(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

Rational invariant_K(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

Rational invariant_I(const QFunction& f, const Integrator& integrate);
Rational invariant_I(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

/// With p = w/|w| folded in exactly: avg ||(|w|^2 D + L_w D J_w)||^2 / |w|^4.
Rational invariant_I_p(const QFunction& f, const ImaginaryDirection& w, const Integrator& integrate);
Rational invariant_I_p(const QFunction& f, const ImaginaryDirection& w,
                       const DomainSpec& domain = DomainSpec::unit_ball());

/// X A X^T for the unit vector X = w/|w|.
Rational quadratic_form(const Matrix3& A, const ImaginaryDirection& w);

Classification classify(const QFunction& f, const Integrator& integrate);
Classification classify(const QFunction& f, const DomainSpec& domain = DomainSpec::unit_ball());

/// u = f + (1 - |z1|^2 - |z2|^2) g; agrees with f on the unit sphere.
QFunction perturb_fixed_boundary(const QFunction& f, const QFunction& g);

}  // namespace hqreg
