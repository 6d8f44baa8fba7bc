#include "hqreg/linalg.hpp"

#include <stdexcept>

namespace hqreg {

namespace {

bool is_zero(const Rational& r) { return sgn(r) == 0; }
bool is_zero(const GaussianRational& z) { return z.is_zero(); }

// In-place reduced row echelon form; returns pivot columns.
template <typename T>
std::vector<std::size_t> rref(std::vector<std::vector<T>>& rows, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const T inv = T(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || is_zero(rows[k][c])) continue;
            const T factor = rows[k][c];
            for (std::size_t j = c; j < columns; ++j) rows[k][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
void check_width(const std::vector<std::vector<T>>& rows, std::size_t columns) {
    for (const auto& row : rows)
        if (row.size() != columns) throw std::invalid_argument("ragged matrix");
}

}  // namespace

std::vector<RationalVector> nullspace(RationalMatrix rows, std::size_t columns) {
    check_width(rows, columns);
    const auto pivots = rref(rows, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(RationalMatrix rows, std::size_t columns) {
    check_width(rows, columns);
    return rref(rows, columns).size();
}

std::size_t rank(std::vector<std::vector<GaussianRational>> rows, std::size_t columns) {
    check_width(rows, columns);
    return rref(rows, columns).size();
}

Rational determinant(const Matrix3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::vector<mpz_class> primitive_integer_vector(const RationalVector& v) {
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    std::vector<mpz_class> out;
    out.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (den / x.get_den());
        g = gcd(g, n);
        out.push_back(std::move(n));
    }
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    int sign = 0;
    for (const auto& n : out)
        if (n != 0) {
            sign = sgn(n);
            break;
        }
    for (auto& n : out) n = n / g * sign;
    return out;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
    if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("cross product needs 3-vectors");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace hqreg
