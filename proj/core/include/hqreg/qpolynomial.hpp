#pragma once

// Exact polynomials in z1, conj(z1), z2, conj(z2) with Gaussian-rational
// coefficients, and quaternionic functions f = f1 + f2 j built from them.

#include "hqreg/hstructures.hpp"
#include "hqreg/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace hqreg {

/// The four formal variables, in the slot order used by exponent tuples.
enum class Var : std::uint8_t { z1 = 0, z1bar = 1, z2 = 2, z2bar = 3 };

/// Powers of (z1, conj z1, z2, conj z2).
using Exponents = std::array<unsigned, 4>;

class CPoly {
public:
    using TermMap = std::map<Exponents, GaussianRational>;

    CPoly() = default;
    CPoly(const GaussianRational& c);  // NOLINT: constants promote
    CPoly(const Rational& c) : CPoly(GaussianRational(c)) {}  // NOLINT
    CPoly(int c) : CPoly(GaussianRational(c)) {}  // NOLINT

    static CPoly monomial(const Exponents& e, const GaussianRational& coef = GaussianRational(1));
    static CPoly variable(Var v);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of the given monomial, zero when absent.
    GaussianRational coefficient(const Exponents& e) const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True when the polynomial takes only real values (P = conj P).
    bool is_real_valued() const;
    bool is_constant() const;

    CPoly conj() const;
    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const CPoly& o);
    CPoly& operator*=(const GaussianRational& s);

    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(CPoly a, const GaussianRational& s) { return a *= s; }
    friend CPoly operator*(const GaussianRational& s, CPoly a) { return a *= s; }
    friend bool operator==(const CPoly&, const CPoly&) = default;

    std::complex<double> evaluate(std::complex<double> z1, std::complex<double> z2) const;

private:
    void add_term(const Exponents& e, const GaussianRational& c);

    TermMap terms_;
};

CPoly poly_add(const CPoly& a, const CPoly& b);
CPoly poly_mul(const CPoly& a, const CPoly& b);
CPoly poly_conj(const CPoly& p);
CPoly poly_scale(const CPoly& p, const GaussianRational& s);
CPoly power(const CPoly& p, unsigned n);

/// Formal partial derivative in one of the four independent variables.
CPoly wirtinger(const CPoly& p, Var v);

/// Partial derivative in the real coordinate x_b (b = 0..3).
CPoly real_partial(const CPoly& p, int b);

/// 4 (d^2/dz1 dz1bar + d^2/dz2 dz2bar) P, the Euclidean Laplacian.
CPoly laplacian(const CPoly& p);

/// Pullback under x3 -> -x3, i.e. z2 <-> conj(z2).
CPoly reflect_x3(const CPoly& p);

/// Parser-compatible text, e.g. "z1^2*conj(z2) - 1/2*i*z2".
std::string to_string(const CPoly& p);

/// f = f1 + f2 j, stored in this normal form.
struct QFunction {
    CPoly f1;
    CPoly f2;

    static QFunction constant(const Quaternion& q);
    static QFunction identity();

    bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
    int degree() const;

    QFunction operator-() const { return {-f1, -f2}; }
    friend QFunction operator+(const QFunction& a, const QFunction& b) { return {a.f1 + b.f1, a.f2 + b.f2}; }
    friend QFunction operator-(const QFunction& a, const QFunction& b) { return {a.f1 - b.f1, a.f2 - b.f2}; }
    /// Noncommutative product, using j P = conj(P) j for complex-valued P.
    friend QFunction operator*(const QFunction& a, const QFunction& b);
    friend bool operator==(const QFunction&, const QFunction&) = default;

    /// Values (f1, f2) at the point x0 + x1 i + x2 j + x3 k.
    std::array<std::complex<double>, 2> evaluate(const std::array<double, 4>& x) const;
    /// Real components (Re f1, Im f1, Re f2, Im f2) as real-valued polynomials.
    std::array<CPoly, 4> real_components() const;
};

/// f q for a constant quaternion q.
QFunction qfun_right_mul(const QFunction& f, const Quaternion& q);
/// q f for a constant quaternion q.
QFunction qfun_left_mul(const Quaternion& q, const QFunction& f);

/// Multiplication by a real-valued scalar polynomial s (commutes with j).
QFunction scale_real(const CPoly& s, const QFunction& f);

QFunction reflect_x3(const QFunction& f);

/// Partial derivative of f in x_b, as a quaternionic function.
QFunction real_partial(const QFunction& f, int b);

std::string to_string(const QFunction& f);

using PolyMatrix4 = SquareMatrix<CPoly, 4>;

/// Rows (f1bar, f1, f2bar, f2), columns (z1bar, z1, z2bar, z2).
using JacobianC = PolyMatrix4;
/// Entry (a, b) is d(component a)/dx_b in the basis 1, i, j, k; entries are real-valued.
using JacobianR = PolyMatrix4;

JacobianC jacobian_complex(const QFunction& f);
JacobianR jacobian_real(const QFunction& f);

PolyMatrix4 operator*(const RealMatrix4& a, const PolyMatrix4& b);
PolyMatrix4 operator*(const PolyMatrix4& a, const RealMatrix4& b);
PolyMatrix4 operator*(const ComplexMatrix4& a, const PolyMatrix4& b);
PolyMatrix4 operator*(const PolyMatrix4& a, const ComplexMatrix4& b);
PolyMatrix4 conj(const PolyMatrix4& a);

/// Sum over entries of a_rc * conj(b_rc), i.e. tr(conj(B)^T A) pointwise.
CPoly frobenius_pairing(const PolyMatrix4& a, const PolyMatrix4& b);

/// Rank over the rationals of a matrix with constant entries.
/// Throws std::invalid_argument when some entry is not constant.
int constant_rank(const PolyMatrix4& m);

}  // namespace hqreg
