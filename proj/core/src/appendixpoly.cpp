#include "hqreg/appendixpoly.hpp"

#include "hqreg/criterion.hpp"

#include <array>
#include <cstdint>

namespace hqreg {

namespace {

struct Term {
    int coefficient;
    // Powers of a1 a2 b1 b2 c1 c2, then of their conjugates in the same order.
    std::array<std::uint8_t, 12> powers;
};

// clang-format off
constexpr Term kTerms[] = {
    { 1, {1, 1, 0, 1, 2, 0, 0, 0, 1, 0, 0, 0}},
    {-1, {1, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0}},
    {-1, {2, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0}},
    { 1, {2, 0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 0}},
    {-1, {1, 0, 0, 0, 2, 0, 1, 0, 2, 0, 0, 0}},
    {-1, {1, 0, 0, 0, 1, 1, 0, 1, 2, 0, 0, 0}},
    { 1, {0, 2, 0, 1, 2, 0, 0, 0, 0, 1, 0, 0}},
    {-1, {0, 2, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0}},
    {-1, {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0}},
    { 1, {1, 1, 1, 0, 0, 2, 0, 0, 0, 1, 0, 0}},
    {-1, {0, 1, 0, 0, 2, 0, 1, 0, 1, 1, 0, 0}},
    {-1, {1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0}},
    {-1, {0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0}},
    {-1, {1, 0, 0, 0, 0, 2, 0, 1, 1, 1, 0, 0}},
    {-1, {0, 1, 0, 0, 1, 1, 1, 0, 0, 2, 0, 0}},
    {-1, {0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 0, 0}},
    { 1, {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0}},
    {-1, {2, 0, 0, 2, 1, 0, 0, 0, 0, 0, 1, 0}},
    {-1, {1, 1, 2, 0, 0, 1, 0, 0, 0, 0, 1, 0}},
    { 1, {2, 0, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0}},
    {-2, {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}},
    {-1, {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0}},
    {-1, {1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0}},
    {-1, {0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0}},
    {-2, {1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0}},
    { 1, {1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0}},
    {-2, {0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0}},
    { 1, {0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0}},
    {-1, {1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0}},
    { 1, {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 0}},
    { 1, {0, 0, 0, 0, 0, 1, 0, 2, 1, 1, 1, 0}},
    {-1, {0, 0, 0, 0, 1, 0, 2, 0, 0, 2, 1, 0}},
    {-1, {0, 0, 0, 0, 0, 1, 1, 1, 0, 2, 1, 0}},
    {-1, {1, 0, 2, 0, 0, 0, 1, 0, 0, 0, 2, 0}},
    {-1, {1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 2, 0}},
    { 1, {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 0}},
    { 1, {0, 0, 0, 1, 0, 0, 0, 2, 0, 1, 2, 0}},
    { 1, {0, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
    {-1, {1, 1, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
    {-1, {0, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 1}},
    { 1, {1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
    {-1, {0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
    { 1, {1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
    {-2, {1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1}},
    { 1, {0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}},
    {-2, {0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1}},
    {-1, {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1}},
    {-1, {0, 0, 0, 0, 1, 0, 1, 1, 2, 0, 0, 1}},
    {-1, {0, 0, 0, 0, 0, 1, 0, 2, 2, 0, 0, 1}},
    {-1, {0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1}},
    {-1, {0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1}},
    {-2, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}},
    { 1, {0, 0, 0, 0, 1, 0, 2, 0, 1, 1, 0, 1}},
    { 1, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1}},
    {-1, {0, 1, 2, 0, 0, 0, 1, 0, 0, 0, 1, 1}},
    {-1, {1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1}},
    {-1, {0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 1}},
    {-1, {1, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 1}},
    {-1, {0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1}},
    {-1, {0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 1, 1}},
    {-1, {0, 0, 1, 0, 0, 0, 2, 0, 0, 1, 1, 1}},
    {-1, {0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1}},
    {-1, {0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 2}},
    {-1, {0, 1, 0, 2, 0, 0, 0, 1, 0, 0, 0, 2}},
    { 1, {0, 0, 1, 0, 0, 0, 2, 0, 1, 0, 0, 2}},
    { 1, {0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 2}},
};
// clang-format on

GaussianRational pow_small(const GaussianRational& z, unsigned n) {
    GaussianRational r(1);
    for (unsigned s = 0; s < n; ++s) r *= z;
    return r;
}

}  // namespace

QFunction linear_function(const LinearCoefficients& coeffs) {
    const CPoly z1 = CPoly::variable(Var::z1);
    const CPoly z2 = CPoly::variable(Var::z2);
    const QFunction g1 = QFunction::identity();
    const QFunction g2{z2, z1};
    const QFunction g3{z1.conj(), z2.conj()};
    return qfun_right_mul(g1, coeffs.q1) + qfun_right_mul(g2, coeffs.q2) + qfun_right_mul(g3, coeffs.q3);
}

std::size_t appendix_term_count() { return std::size(kTerms); }

GaussianRational appendix_value(const LinearCoefficients& coeffs) {
    std::array<GaussianRational, 12> vars;
    const GaussianRational base[6] = {coeffs.q1.complex1(), coeffs.q1.complex2(), coeffs.q2.complex1(),
                                      coeffs.q2.complex2(), coeffs.q3.complex1(), coeffs.q3.complex2()};
    for (std::size_t v = 0; v < 6; ++v) {
        vars[v] = base[v];
        vars[v + 6] = base[v].conj();
    }
    GaussianRational sum;
    for (const Term& t : kTerms) {
        GaussianRational product(t.coefficient);
        for (std::size_t v = 0; v < 12; ++v)
            if (t.powers[v]) product *= pow_small(vars[v], t.powers[v]);
        sum += product;
    }
    return sum;
}

std::string AppendixCheck::describe() const {
    return std::string(consistent ? "consistent" : "MISMATCH") + ": explicit form = " + to_string(appendix) +
           ", (1/16) det(A - (tr A) I) = " + to_string(pipeline);
}

AppendixCheck appendix_consistency(const LinearCoefficients& coeffs) {
    AppendixCheck check;
    check.appendix = appendix_value(coeffs);
    const EnergyMatrix em = matrix_A(linear_function(coeffs), DomainSpec::unit_ball());
    check.pipeline = em.shifted_determinant() / 16;
    check.consistent = check.appendix == GaussianRational(check.pipeline);
    return check;
}

}  // namespace hqreg
