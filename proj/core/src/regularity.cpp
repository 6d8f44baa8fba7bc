#include "hqreg/regularity.hpp"

namespace hqreg {

namespace {

QFunction dirac_type(const QFunction& f, const Quaternion& last) {
    const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), last};
    QFunction sum;
    for (int b = 0; b < 4; ++b) sum = sum + qfun_left_mul(units[b], real_partial(f, b));
    return sum;
}

bool all_zero(const PolyMatrix4& m) {
    for (const auto& row : m.m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

}  // namespace

QFunction fueter_operator(const QFunction& f) { return dirac_type(f, Quaternion::k()); }

QFunction psi_operator(const QFunction& f) { return dirac_type(f, -Quaternion::k()); }

OperatorCheck check_psi(const QFunction& f) {
    const CPoly f2bar = f.f2.conj();
    const bool cr1 = wirtinger(f.f1, Var::z1bar) == wirtinger(f2bar, Var::z2);
    const bool cr2 = wirtinger(f.f1, Var::z2bar) == -wirtinger(f2bar, Var::z1);
    return {cr1 && cr2, psi_operator(f)};
}

OperatorCheck check_fueter(const QFunction& f) {
    return {check_psi(reflect_x3(f)).holds, fueter_operator(f)};
}

bool check_q_holomorphic(const QFunction& f) {
    const JacobianR d = jacobian_real(f);
    const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    PolyMatrix4 sum = d;
    for (int a = 1; a <= 3; ++a) sum = sum + left_mult_matrix(units[a - 1]) * d * structure_J(a);
    return all_zero(sum);
}

bool check_holomorphic_p(const QFunction& f, const ImaginaryDirection& w) {
    const JacobianR d = jacobian_real(f);
    const GaussianRational n2(w.norm2());
    PolyMatrix4 scaled;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) scaled(r, c) = d(r, c) * n2;
    return all_zero(scaled + structure_Lp(w) * d * structure_Jp(w));
}

bool check_harmonic(const QFunction& f) { return laplacian(f.f1).is_zero() && laplacian(f.f2).is_zero(); }

RegularityVerdict check_regularity(const QFunction& f) {
    auto psi = check_psi(f);
    return {check_fueter(f).holds, psi.holds, check_harmonic(f), std::move(psi.residual)};
}

}  // namespace hqreg
