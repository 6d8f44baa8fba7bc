#include "hqreg/hstructures.hpp"

#include <stdexcept>

namespace hqreg {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
        a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
        a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
    };
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << to_string(q.x0) << ", " << to_string(q.x1) << ", " << to_string(q.x2) << ", "
              << to_string(q.x3) << ")";
}

ImaginaryDirection::ImaginaryDirection(Rational w1, Rational w2, Rational w3)
    : w_{std::move(w1), std::move(w2), std::move(w3)} {
    if (sgn(w_[0]) == 0 && sgn(w_[1]) == 0 && sgn(w_[2]) == 0)
        throw std::invalid_argument("imaginary direction must be nonzero");
}

std::array<Rational, 4> coords(const Quaternion& q) { return {q.x0, q.x1, q.x2, q.x3}; }

RealMatrix4 left_mult_matrix(const Quaternion& q) {
    // Column b is q * e_b.
    RealMatrix4 r;
    const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (std::size_t b = 0; b < 4; ++b) {
        const auto c = coords(q * basis[b]);
        for (std::size_t a = 0; a < 4; ++a) r(a, b) = c[a];
    }
    return r;
}

RealMatrix4 structure_J(int alpha) {
    switch (alpha) {
        case 1: return left_mult_matrix(Quaternion::i());
        case 2: return left_mult_matrix(Quaternion::j());
        case 3: return -(structure_J(1) * structure_J(2));
        default: throw std::out_of_range("structure index must be 1, 2 or 3");
    }
}

ComplexMatrix4 structure_M(int alpha) {
    // Basis slots: 0 = dz1bar, 1 = dz1, 2 = dz2bar, 3 = dz2.
    const GaussianRational i = GaussianRational::i();
    ComplexMatrix4 m = ComplexMatrix4::zero();
    switch (alpha) {
        case 1:
            // J1* dz = i dz, J1* dzbar = -i dzbar
            m(0, 0) = -i;
            m(1, 1) = i;
            m(2, 2) = -i;
            m(3, 3) = i;
            break;
        case 2:
            // J2* dz1 = -dz2bar, J2* dz2 = dz1bar, and conjugates
            m(2, 1) = -1;
            m(0, 3) = 1;
            m(3, 0) = -1;
            m(1, 2) = 1;
            break;
        case 3:
            // J3* dz1 = i dz2bar, J3* dz2 = -i dz1bar, and conjugates
            m(2, 1) = i;
            m(0, 3) = -i;
            m(3, 0) = -i;
            m(1, 2) = i;
            break;
        default: throw std::out_of_range("structure index must be 1, 2 or 3");
    }
    return m;
}

RealMatrix4 structure_Jp(const ImaginaryDirection& w) {
    return w[0] * structure_J(1) + w[1] * structure_J(2) + w[2] * structure_J(3);
}

RealMatrix4 structure_Lp(const ImaginaryDirection& w) { return left_mult_matrix(w.as_quaternion()); }

}  // namespace hqreg
