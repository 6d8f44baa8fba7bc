#pragma once

// Quaternions over Q and exact matrix representations of the complex
// structures on H = C^2:
//   J_1, J_2  left multiplication by i, j on the source;  J_3 = -J_1 J_2
//   L_q       left multiplication by q on the target
//   M_a       the dual J_a^* on the basis {dz1bar, dz1, dz2bar, dz2}

#include "hqreg/rational.hpp"

#include <array>
#include <cstddef>
#include <ostream>

namespace hqreg {

/// x0 + x1 i + x2 j + x3 k, identified with z1 + z2 j where
/// z1 = x0 + i x1 and z2 = x2 + i x3.
struct Quaternion {
    Rational x0{0}, x1{0}, x2{0}, x3{0};

    Quaternion() = default;
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    /// q = c1 + c2 j with complex c1, c2.
    static Quaternion from_complex_pair(const GaussianRational& c1, const GaussianRational& c2) {
        return {c1.re(), c1.im(), c2.re(), c2.im()};
    }
    GaussianRational complex1() const { return {x0, x1}; }
    GaussianRational complex2() const { return {x2, x3}; }

    Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
    Rational norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    bool is_zero() const { return sgn(x0) == 0 && sgn(x1) == 0 && sgn(x2) == 0 && sgn(x3) == 0; }

    Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) { return a + (-b); }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Rational& s, const Quaternion& q) {
        return {s * q.x0, s * q.x1, s * q.x2, s * q.x3};
    }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
Quaternion quat_mul(const Quaternion& a, const Quaternion& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Unnormalized imaginary direction w; stands for p = (w1 i + w2 j + w3 k)/|w|.
class ImaginaryDirection {
public:
    /// Throws std::invalid_argument when w = 0.
    ImaginaryDirection(Rational w1, Rational w2, Rational w3);

    const Rational& operator[](std::size_t a) const { return w_[a]; }
    const std::array<Rational, 3>& components() const { return w_; }
    Rational norm2() const { return w_[0] * w_[0] + w_[1] * w_[1] + w_[2] * w_[2]; }
    Quaternion as_quaternion() const { return {0, w_[0], w_[1], w_[2]}; }
    ImaginaryDirection operator-() const { return {-w_[0], -w_[1], -w_[2]}; }

    friend bool operator==(const ImaginaryDirection&, const ImaginaryDirection&) = default;

private:
    std::array<Rational, 3> w_;
};

/// Fixed-size square matrix over an exact ring.
template <typename T, std::size_t N>
struct SquareMatrix {
    std::array<std::array<T, N>, N> m{};

    static SquareMatrix zero() {
        SquareMatrix r;
        for (auto& row : r.m)
            for (auto& e : row) e = T(0);
        return r;
    }
    static SquareMatrix identity() {
        SquareMatrix r = zero();
        for (std::size_t a = 0; a < N; ++a) r.m[a][a] = T(1);
        return r;
    }

    T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

    SquareMatrix transpose() const {
        SquareMatrix t;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) t.m[c][r] = m[r][c];
        return t;
    }
    T trace() const {
        T t(0);
        for (std::size_t a = 0; a < N; ++a) t += m[a][a];
        return t;
    }

    SquareMatrix operator-() const {
        SquareMatrix r;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) r.m[a][b] = -m[a][b];
        return r;
    }
    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix r;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) r.m[a][b] = x.m[a][b] + y.m[a][b];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) { return x + (-y); }
    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix r = zero();
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t c = 0; c < N; ++c)
                for (std::size_t b = 0; b < N; ++b) r.m[a][b] += x.m[a][c] * y.m[c][b];
        return r;
    }
    friend SquareMatrix operator*(const T& s, const SquareMatrix& x) {
        SquareMatrix r;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) r.m[a][b] = s * x.m[a][b];
        return r;
    }
    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.m == y.m; }
};

using RealMatrix4 = SquareMatrix<Rational, 4>;
using ComplexMatrix4 = SquareMatrix<GaussianRational, 4>;
using Matrix3 = SquareMatrix<Rational, 3>;

/// Coordinates of v in the basis 1, i, j, k.
std::array<Rational, 4> coords(const Quaternion& q);

/// Matrix of v -> q v in coordinates (x0, x1, x2, x3).
RealMatrix4 left_mult_matrix(const Quaternion& q);

/// J_1, J_2, J_3 for alpha = 1, 2, 3, with J_3 = -J_1 J_2.
/// Throws std::out_of_range for other indices.
RealMatrix4 structure_J(int alpha);

/// Matrix of J_alpha^* on {dz1bar, dz1, dz2bar, dz2}; columns are images of basis forms.
ComplexMatrix4 structure_M(int alpha);

/// w1 J_1 + w2 J_2 + w3 J_3, not normalized; squares to -|w|^2 I.
RealMatrix4 structure_Jp(const ImaginaryDirection& w);

/// Left multiplication by w1 i + w2 j + w3 k on the target, not normalized.
RealMatrix4 structure_Lp(const ImaginaryDirection& w);

}  // namespace hqreg
