#pragma once

// Dense exact linear algebra over Q and Q(i) for small systems.

#include "hqreg/hstructures.hpp"
#include "hqreg/rational.hpp"

#include <vector>

namespace hqreg {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Basis of the null space, one vector per free column of the reduced row echelon form.
std::vector<RationalVector> nullspace(RationalMatrix rows, std::size_t columns);

/// Rank via Gaussian elimination.
std::size_t rank(RationalMatrix rows, std::size_t columns);
std::size_t rank(std::vector<std::vector<GaussianRational>> rows, std::size_t columns);

Rational determinant(const Matrix3& m);

/// Scales to an integer vector with coprime entries and positive leading nonzero entry.
std::vector<mpz_class> primitive_integer_vector(const RationalVector& v);

/// Cross product of two 3-vectors.
RationalVector cross(const RationalVector& a, const RationalVector& b);

}  // namespace hqreg
