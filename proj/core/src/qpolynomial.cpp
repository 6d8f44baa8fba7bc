#include "hqreg/qpolynomial.hpp"

#include "hqreg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hqreg {

namespace {

constexpr std::size_t slot(Var v) { return static_cast<std::size_t>(v); }

std::complex<double> ipow(std::complex<double> z, unsigned n) {
    std::complex<double> r(1.0, 0.0);
    while (n) {
        if (n & 1u) r *= z;
        z *= z;
        n >>= 1u;
    }
    return r;
}

std::string monomial_text(const Exponents& e) {
    static const char* const names[4] = {"z1", "conj(z1)", "z2", "conj(z2)"};
    std::string out;
    for (std::size_t s = 0; s < 4; ++s) {
        if (e[s] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[s];
        if (e[s] > 1) out += "^" + std::to_string(e[s]);
    }
    return out;
}

}  // namespace

CPoly::CPoly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

CPoly CPoly::monomial(const Exponents& e, const GaussianRational& coef) {
    CPoly p;
    p.add_term(e, coef);
    return p;
}

CPoly CPoly::variable(Var v) {
    Exponents e{0, 0, 0, 0};
    e[slot(v)] = 1;
    return monomial(e);
}

void CPoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational CPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

int CPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(e[0] + e[1] + e[2] + e[3]));
    return d;
}

bool CPoly::is_real_valued() const { return *this == conj(); }

bool CPoly::is_constant() const { return degree() <= 0; }

CPoly CPoly::conj() const {
    CPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e[1], e[0], e[3], e[2]}, c.conj());
    return r;
}

CPoly CPoly::operator-() const {
    CPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
    *this = *this * o;
    return *this;
}

CPoly& CPoly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
}

std::complex<double> CPoly::evaluate(std::complex<double> z1, std::complex<double> z2) const {
    const std::complex<double> vars[4] = {z1, std::conj(z1), z2, std::conj(z2)};
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t s = 0; s < 4; ++s)
            if (e[s]) t *= ipow(vars[s], e[s]);
        sum += t;
    }
    return sum;
}

CPoly poly_add(const CPoly& a, const CPoly& b) { return a + b; }
CPoly poly_mul(const CPoly& a, const CPoly& b) { return a * b; }
CPoly poly_conj(const CPoly& p) { return p.conj(); }
CPoly poly_scale(const CPoly& p, const GaussianRational& s) { return p * s; }

CPoly power(const CPoly& p, unsigned n) {
    CPoly r(1);
    CPoly base = p;
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

CPoly wirtinger(const CPoly& p, Var v) {
    const std::size_t s = slot(v);
    CPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e[s] == 0) continue;
        Exponents d = e;
        --d[s];
        r += CPoly::monomial(d, c * GaussianRational(static_cast<long>(e[s])));
    }
    return r;
}

CPoly real_partial(const CPoly& p, int b) {
    const GaussianRational i = GaussianRational::i();
    switch (b) {
        case 0: return wirtinger(p, Var::z1) + wirtinger(p, Var::z1bar);
        case 1: return (wirtinger(p, Var::z1) - wirtinger(p, Var::z1bar)) * i;
        case 2: return wirtinger(p, Var::z2) + wirtinger(p, Var::z2bar);
        case 3: return (wirtinger(p, Var::z2) - wirtinger(p, Var::z2bar)) * i;
        default: throw std::out_of_range("real coordinate index must be 0..3");
    }
}

CPoly laplacian(const CPoly& p) {
    return (wirtinger(wirtinger(p, Var::z1), Var::z1bar) + wirtinger(wirtinger(p, Var::z2), Var::z2bar)) *
           GaussianRational(4);
}

CPoly reflect_x3(const CPoly& p) {
    CPoly r;
    for (const auto& [e, c] : p.terms()) r += CPoly::monomial({e[0], e[1], e[3], e[2]}, c);
    return r;
}

std::string to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest powers of z1 first, constant term last.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const std::string mono = monomial_text(e);
        const bool single_part = c.is_real() || sgn(c.re()) == 0;
        const bool negative = single_part && (sgn(c.re()) < 0 || sgn(c.im()) < 0);
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        const GaussianRational mag = negative ? -c : c;
        const std::string coef = single_part ? to_string(mag) : "(" + to_string(mag) + ")";
        if (mono.empty()) os << coef;
        else if (mag == GaussianRational(1)) os << mono;
        else os << coef << "*" << mono;
    }
    return os.str();
}

QFunction QFunction::constant(const Quaternion& q) { return {CPoly(q.complex1()), CPoly(q.complex2())}; }

QFunction QFunction::identity() { return {CPoly::variable(Var::z1), CPoly::variable(Var::z2)}; }

int QFunction::degree() const { return std::max(f1.degree(), f2.degree()); }

QFunction operator*(const QFunction& a, const QFunction& b) {
    // (a1 + a2 j)(b1 + b2 j) = (a1 b1 - a2 conj(b2)) + (a1 b2 + a2 conj(b1)) j
    return {a.f1 * b.f1 - a.f2 * b.f2.conj(), a.f1 * b.f2 + a.f2 * b.f1.conj()};
}

std::array<std::complex<double>, 2> QFunction::evaluate(const std::array<double, 4>& x) const {
    const std::complex<double> z1(x[0], x[1]);
    const std::complex<double> z2(x[2], x[3]);
    return {f1.evaluate(z1, z2), f2.evaluate(z1, z2)};
}

std::array<CPoly, 4> QFunction::real_components() const {
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
    return {(f1 + f1.conj()) * half, (f1 - f1.conj()) * minus_half_i, (f2 + f2.conj()) * half,
            (f2 - f2.conj()) * minus_half_i};
}

QFunction qfun_right_mul(const QFunction& f, const Quaternion& q) { return f * QFunction::constant(q); }

QFunction qfun_left_mul(const Quaternion& q, const QFunction& f) { return QFunction::constant(q) * f; }

QFunction scale_real(const CPoly& s, const QFunction& f) { return {s * f.f1, s * f.f2}; }

QFunction reflect_x3(const QFunction& f) { return {reflect_x3(f.f1), reflect_x3(f.f2)}; }

QFunction real_partial(const QFunction& f, int b) { return {real_partial(f.f1, b), real_partial(f.f2, b)}; }

std::string to_string(const QFunction& f) {
    if (f.f2.is_zero()) return to_string(f.f1);
    std::string out;
    if (!f.f1.is_zero()) out = to_string(f.f1) + " + ";
    return out + "(" + to_string(f.f2) + ")*j";
}

JacobianC jacobian_complex(const QFunction& f) {
    const CPoly rows[4] = {f.f1.conj(), f.f1, f.f2.conj(), f.f2};
    const Var cols[4] = {Var::z1bar, Var::z1, Var::z2bar, Var::z2};
    JacobianC jac;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) jac(r, c) = wirtinger(rows[r], cols[c]);
    return jac;
}

JacobianR jacobian_real(const QFunction& f) {
    const auto comps = f.real_components();
    JacobianR jac;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) jac(a, b) = real_partial(comps[a], static_cast<int>(b));
    return jac;
}

namespace {

template <typename L, typename R>
PolyMatrix4 mixed_product(const L& a, const R& b) {
    PolyMatrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CPoly sum;
            for (std::size_t k = 0; k < 4; ++k) {
                if constexpr (std::is_same_v<L, PolyMatrix4>)
                    sum += a(i, k) * GaussianRational(b(k, j));
                else
                    sum += GaussianRational(a(i, k)) * b(k, j);
            }
            r(i, j) = std::move(sum);
        }
    return r;
}

}  // namespace

PolyMatrix4 operator*(const RealMatrix4& a, const PolyMatrix4& b) { return mixed_product(a, b); }
PolyMatrix4 operator*(const PolyMatrix4& a, const RealMatrix4& b) { return mixed_product(a, b); }
PolyMatrix4 operator*(const ComplexMatrix4& a, const PolyMatrix4& b) { return mixed_product(a, b); }
PolyMatrix4 operator*(const PolyMatrix4& a, const ComplexMatrix4& b) { return mixed_product(a, b); }

PolyMatrix4 conj(const PolyMatrix4& a) {
    PolyMatrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = a(i, j).conj();
    return r;
}

CPoly frobenius_pairing(const PolyMatrix4& a, const PolyMatrix4& b) {
    CPoly sum;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!a(i, j).is_zero() && !b(i, j).is_zero()) sum += a(i, j) * b(i, j).conj();
    return sum;
}

int constant_rank(const PolyMatrix4& m) {
    std::vector<std::vector<GaussianRational>> rows(4, std::vector<GaussianRational>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (!m(i, j).is_constant()) throw std::invalid_argument("matrix entry is not constant");
            rows[i][j] = m(i, j).coefficient({0, 0, 0, 0});
        }
    return static_cast<int>(rank(std::move(rows), 4));
}

}  // namespace hqreg
