#include "hqreg/criterion.hpp"

#include "hqreg/linalg.hpp"
#include "hqreg/regularity.hpp"

#include <sstream>
#include <stdexcept>

namespace hqreg {

namespace {

Rational real_integral(const Integrator& integrate, const CPoly& p, const char* what) {
    const GaussianRational v = integrate(p);
    if (!v.is_real()) throw std::logic_error(std::string("integral of ") + what + " is not real");
    return v.re();
}

const Rational half(1, 2);

std::array<Rational, 4> shifted_char_poly(const Matrix3& A, const Rational& tr) {
    Matrix3 B = A - tr * Matrix3::identity();
    const Rational minors = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0) + B(0, 0) * B(2, 2) - B(0, 2) * B(2, 0) +
                            B(1, 1) * B(2, 2) - B(1, 2) * B(2, 1);
    return {determinant(B), -minors, B.trace(), Rational(-1)};
}

IntegerDirection to_direction(const RationalVector& v) {
    auto p = primitive_integer_vector(v);
    return {p[0], p[1], p[2]};
}

ImaginaryDirection to_imaginary(const IntegerDirection& d) {
    return {Rational(d[0]), Rational(d[1]), Rational(d[2])};
}

std::string direction_text(const IntegerDirection& d) {
    return "(" + d[0].get_str() + "," + d[1].get_str() + "," + d[2].get_str() + ")";
}

}  // namespace

const char* to_string(ClassificationType t) {
    switch (t) {
        case ClassificationType::I_constant: return "I_constant";
        case ClassificationType::II_circle: return "II_circle";
        case ClassificationType::III_pair: return "III_pair";
        case ClassificationType::IV_empty: return "IV_empty";
        case ClassificationType::not_psi_regular: return "not_psi_regular";
    }
    return "unknown";
}

ClassificationType classification_type_from_string(const std::string& s) {
    for (auto t : {ClassificationType::I_constant, ClassificationType::II_circle, ClassificationType::III_pair,
                   ClassificationType::IV_empty, ClassificationType::not_psi_regular})
        if (s == to_string(t)) return t;
    throw std::invalid_argument("unknown classification type: " + s);
}

const char* to_string(StructureSet::Shape s) {
    switch (s) {
        case StructureSet::Shape::empty: return "empty";
        case StructureSet::Shape::antipodal_pair: return "antipodal_pair";
        case StructureSet::Shape::circle: return "circle";
        case StructureSet::Shape::sphere: return "sphere";
    }
    return "unknown";
}

std::string StructureSet::describe() const {
    switch (shape) {
        case Shape::empty: return "empty set";
        case Shape::sphere: return "all of S^2";
        case Shape::antipodal_pair: return "{+p, -p} with p along " + direction_text(directions.at(0));
        case Shape::circle:
            return "great circle orthogonal to " + direction_text(normal.value()) + ", through " +
                   direction_text(directions.at(0)) + " and " + direction_text(directions.at(1));
    }
    return "unknown";
}

Rational energy(const QFunction& f, const Integrator& integrate) {
    const JacobianC jc = jacobian_complex(f);
    return half * real_integral(integrate, frobenius_pairing(jc, jc), "|df|^2");
}

Rational energy(const QFunction& f, const DomainSpec& domain) { return energy(f, make_integrator(domain)); }

EnergyMatrix matrix_A(const QFunction& f, const Integrator& integrate) {
    const JacobianC jc = jacobian_complex(f);
    const JacobianC jt = jc.transpose();
    std::array<PolyMatrix4, 3> B;
    std::array<PolyMatrix4, 3> C;
    for (int a = 1; a <= 3; ++a) {
        const ComplexMatrix4 M = structure_M(a);
        B[a - 1] = M * jt;
        C[a - 1] = jt * (a == 3 ? -M : M);
    }
    EnergyMatrix em;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            em.A(a, b) = half * real_integral(integrate, frobenius_pairing(C[b], B[a]), "a_ab integrand");
    em.energy = half * real_integral(integrate, frobenius_pairing(jc, jc), "|df|^2");
    em.trace = em.A.trace();
    em.char_poly_shifted = shifted_char_poly(em.A, em.trace);
    return em;
}

EnergyMatrix matrix_A(const QFunction& f, const DomainSpec& domain) { return matrix_A(f, make_integrator(domain)); }

Matrix3 matrix_A_real_coordinates(const QFunction& f, const Integrator& integrate) {
    const JacobianR d = jacobian_real(f);
    const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Matrix3 A;
    for (int a = 1; a <= 3; ++a) {
        const PolyMatrix4 dj = d * structure_J(a);
        for (int b = 1; b <= 3; ++b) {
            const PolyMatrix4 ldj = left_mult_matrix(units[b - 1]) * dj;
            A(a - 1, b - 1) = -half * real_integral(integrate, frobenius_pairing(ldj, d), "<D, L D J>");
        }
    }
    return A;
}

Matrix3 matrix_A_real_coordinates(const QFunction& f, const DomainSpec& domain) {
    return matrix_A_real_coordinates(f, make_integrator(domain));
}

Rational invariant_K(const QFunction& f, const DomainSpec& domain) { return -matrix_A(f, domain).trace; }

Rational invariant_I(const QFunction& f, const Integrator& integrate) {
    const JacobianR d = jacobian_real(f);
    const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    PolyMatrix4 t = d;
    for (int a = 1; a <= 3; ++a) t = t + left_mult_matrix(units[a - 1]) * d * structure_J(a);
    return half * real_integral(integrate, frobenius_pairing(t, t), "I integrand");
}

Rational invariant_I(const QFunction& f, const DomainSpec& domain) { return invariant_I(f, make_integrator(domain)); }

Rational invariant_I_p(const QFunction& f, const ImaginaryDirection& w, const Integrator& integrate) {
    const JacobianR d = jacobian_real(f);
    const Rational n2 = w.norm2();
    PolyMatrix4 t = structure_Lp(w) * d * structure_Jp(w);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(r, c) += d(r, c) * GaussianRational(n2);
    return real_integral(integrate, frobenius_pairing(t, t), "I_p integrand") / (n2 * n2);
}

Rational invariant_I_p(const QFunction& f, const ImaginaryDirection& w, const DomainSpec& domain) {
    return invariant_I_p(f, w, make_integrator(domain));
}

Rational quadratic_form(const Matrix3& A, const ImaginaryDirection& w) {
    Rational sum = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) sum += w[a] * w[b] * A(a, b);
    return sum / w.norm2();
}

Classification classify(const QFunction& f, const Integrator& integrate) {
    Classification out;
    out.energy_matrix = matrix_A(f, integrate);
    const EnergyMatrix& em = out.energy_matrix;
    if (em.energy != em.trace) {
        out.type = ClassificationType::not_psi_regular;
        out.directions_verified = true;
        return out;
    }
    if (sgn(em.shifted_determinant()) != 0) {
        out.type = ClassificationType::IV_empty;
        out.directions_verified = true;
        return out;
    }

    RationalMatrix rows(3, RationalVector(3));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) rows[a][b] = em.A(a, b) - (a == b ? em.trace : Rational(0));
    const auto kernel = nullspace(rows, 3);

    std::vector<IntegerDirection> to_verify;
    StructureSet& s = out.structures;
    switch (kernel.size()) {
        case 1:
            out.type = ClassificationType::III_pair;
            s.shape = StructureSet::Shape::antipodal_pair;
            s.directions = {to_direction(kernel[0])};
            to_verify = s.directions;
            break;
        case 2: {
            out.type = ClassificationType::II_circle;
            s.shape = StructureSet::Shape::circle;
            s.directions = {to_direction(kernel[0]), to_direction(kernel[1])};
            s.normal = to_direction(cross(kernel[0], kernel[1]));
            RationalVector mid(3);
            for (std::size_t a = 0; a < 3; ++a) mid[a] = kernel[0][a] + kernel[1][a];
            to_verify = s.directions;
            to_verify.push_back(to_direction(mid));
            break;
        }
        case 3:
            out.type = ClassificationType::I_constant;
            s.shape = StructureSet::Shape::sphere;
            to_verify = {IntegerDirection{1, 0, 0}, IntegerDirection{0, 1, 0}, IntegerDirection{0, 0, 1}};
            break;
        default:
            // det = 0 forces a nontrivial kernel.
            throw std::logic_error("singular shifted matrix with trivial kernel");
    }
    out.directions_verified = true;
    for (const auto& d : to_verify)
        if (!check_holomorphic_p(f, to_imaginary(d))) out.directions_verified = false;
    return out;
}

Classification classify(const QFunction& f, const DomainSpec& domain) { return classify(f, make_integrator(domain)); }

QFunction perturb_fixed_boundary(const QFunction& f, const QFunction& g) {
    const CPoly bump = CPoly(1) - CPoly::monomial({1, 1, 0, 0}) - CPoly::monomial({0, 0, 1, 1});
    return f + scale_real(bump, g);
}

}  // namespace hqreg
