// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "hqreg/appendixpoly.hpp"
#include "hqreg/criterion.hpp"
#include "hqreg/expression.hpp"
#include "hqreg/regularity.hpp"
#include "generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hqreg;
using testing::Rng;

namespace {

// Collects failed checks for one criterion; the first few are reported.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok) failures_.push_back(what);
    }
    template <typename T>
    void equal(const T& expected, const T& computed, const std::string& what) {
        std::ostringstream os;
        os << what << ": expected " << show(expected) << ", computed " << show(computed);
        expect(expected == computed, os.str());
    }
    void note(std::string s) { notes_ = std::move(s); }

    bool passed() const { return failures_.empty() && count_ > 0; }
    std::string summary() const {
        std::string s = std::to_string(count_ - failures_.size()) + "/" + std::to_string(count_) + " checks";
        if (!notes_.empty()) s += ", " + notes_;
        return s;
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    static std::string show(const Rational& r) { return to_string(r); }
    static std::string show(ClassificationType t) { return to_string(t); }
    static std::string show(int n) { return std::to_string(n); }
    static std::string show(const IntegerDirection& d) {
        return "(" + d[0].get_str() + "," + d[1].get_str() + "," + d[2].get_str() + ")";
    }
    static std::string show(const Matrix3& m) {
        std::string s = "[";
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) s += (a || b ? "," : "") + to_string(m(a, b));
        return s + "]";
    }

    std::size_t count_ = 0;
    std::vector<std::string> failures_;
    std::string notes_;
};

Matrix3 mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    Matrix3 m;
    std::size_t a = 0;
    for (const auto& row : rows) {
        std::size_t b = 0;
        for (const auto& v : row) m(a, b++) = v;
        ++a;
    }
    return m;
}

ImaginaryDirection random_rational_direction(Rng& rng) {
    while (true) {
        const Rational a = testing::random_rational(rng), b = testing::random_rational(rng),
                       c = testing::random_rational(rng);
        if (sgn(a) || sgn(b) || sgn(c)) return {a, b, c};
    }
}

void example_one(Checks& c) {
    const QFunction f = parse_function("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j");
    const Classification cl = classify(f);
    c.equal(Rational(6), cl.energy_matrix.energy, "energy");
    c.equal(Rational(2) * Matrix3::identity(), cl.energy_matrix.A, "A");
    c.equal(ClassificationType::IV_empty, cl.type, "type");
    // E = tr A = 6 > 2 = largest eigenvalue.
    c.expect(cl.energy_matrix.trace == 6, "tr A = 6");
}

void example_h(Checks& c) {
    const QFunction h = parse_function("conj(z1) + (z1 + conj(z2))*j");
    const Classification cl = classify(h);
    c.equal(Rational(3), cl.energy_matrix.energy, "energy");
    c.equal(mat({{-1, 0, 2}, {0, 2, 0}, {2, 0, 2}}), cl.energy_matrix.A, "A");
    c.equal(ClassificationType::III_pair, cl.type, "type");
    c.expect(cl.structures.directions.size() == 1, "one direction");
    if (cl.structures.directions.size() == 1) c.equal(IntegerDirection{1, 0, 2}, cl.structures.directions[0], "direction");
    c.expect(check_holomorphic_p(h, {1, 0, 2}), "holomorphic for (1,0,2)");
}

void example_quadratic(Checks& c) {
    const QFunction f = parse_function("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j");
    const Classification cl = classify(f);
    c.equal(Rational(2), cl.energy_matrix.energy, "energy");
    c.equal(mat({{Rational(-2, 3), 0, 0}, {0, Rational(4, 3), 0}, {0, 0, Rational(4, 3)}}), cl.energy_matrix.A, "A");
    c.equal(ClassificationType::IV_empty, cl.type, "type");
}

void example_odd_rank(Checks& c) {
    const QFunction g = parse_function("z1 + conj(z1) + conj(z2)*j");
    c.expect(check_psi(g).holds, "psi-regular");
    c.equal(3, constant_rank(jacobian_complex(g)), "rank of complex Jacobian");
    c.equal(ClassificationType::IV_empty, classify(g).type, "type");
}

void structure_facts(Checks& c) {
    const QFunction id = QFunction::identity();
    c.expect(check_holomorphic_p(id, {1, 0, 0}), "identity in Hol_i");
    c.expect(check_holomorphic_p(id, {0, 1, 0}), "identity in Hol_j");
    c.expect(!check_holomorphic_p(id, {0, 0, 1}), "identity not in Hol_k");

    Rng rng(501);
    const QFunction h = parse_function("conj(z1) + (z1 + conj(z2))*j");
    for (int n = 0; n < 50; ++n) {
        const auto w = testing::random_direction(rng);
        c.expect(check_holomorphic_p(id, w) == check_holomorphic_p(id, -w), "identity: w and -w agree");
        c.expect(check_holomorphic_p(h, w) == check_holomorphic_p(h, -w), "h: w and -w agree");
        const QFunction f = testing::random_psi_regular(rng, 1);
        c.expect(check_holomorphic_p(f, w) == check_holomorphic_p(f, -w), "random: w and -w agree");
    }
    c.expect(check_holomorphic_p(h, {-1, 0, -2}), "h holomorphic for (-1,0,-2)");

    const QFunction anti = parse_function("conj(z1) + conj(z2)*j");
    c.expect(check_holomorphic_p(anti, {0, 1, 0}), "conj(z1) + conj(z2) j in Hol_j");
    c.expect(check_holomorphic_p(anti, {0, 0, 1}), "conj(z1) + conj(z2) j in Hol_k");
    c.equal(ClassificationType::II_circle, classify(anti).type, "type of conj(z1) + conj(z2) j");
    c.expect(!check_psi(parse_function("conj(z1)")).holds, "conj(z1) fails check_psi");
}

void property_suite(Checks& c) {
    Rng rng(601);
    int regular = 0, directions = 0;
    for (int n = 0; n < 240; ++n) {
        // Alternate general polynomials with members of the psi-regular space.
        const QFunction f = n % 2 ? testing::random_psi_regular(rng, 3) : testing::random_qfunction(rng, 3, 4);
        const EnergyMatrix em = matrix_A(f);
        const Rational I = invariant_I(f);
        const Rational K = -em.trace;
        c.expect(em.energy + K == I / 4, "E + K = I/4");

        const bool psi = check_psi(f).holds;
        c.expect(psi == (em.energy == em.trace), "psi-regular iff E = tr A");
        c.expect(psi == (sgn(I) == 0), "psi-regular iff I = 0");
        regular += psi;

        if (psi) {
            c.expect(em.is_symmetric(), "A symmetric");
            c.expect(sgn(em.shifted_determinant()) <= 0, "det(A - tr A I) <= 0");
            for (int m = 0; m < 20; ++m) {
                const ImaginaryDirection w = random_rational_direction(rng);
                c.expect(quadratic_form(em.A, w) == em.energy - invariant_I_p(f, w) / 4, "X A X^T = E - I_p/4");
                ++directions;
            }
        }
    }
    c.expect(regular >= 100, "at least 100 psi-regular samples");
    c.note(std::to_string(regular) + " psi-regular of 240, " + std::to_string(directions) + " directions");
}

void appendix_suite(Checks& c) {
    Rng rng(701);
    for (int n = 0; n < 100; ++n) {
        const AppendixCheck chk = appendix_consistency(testing::random_linear_coefficients(rng));
        c.expect(chk.consistent, chk.describe());
    }
    const Quaternion one = Quaternion::one(), zero;
    for (const LinearCoefficients& q : {LinearCoefficients{one, zero, zero}, LinearCoefficients{zero, zero, one}}) {
        const AppendixCheck chk = appendix_consistency(q);
        c.expect(chk.consistent, chk.describe());
        c.expect(chk.appendix.is_zero() && sgn(chk.pipeline) == 0, "vanishes: " + chk.describe());
    }
}

void energy_minimization(Checks& c) {
    Rng rng(801);
    for (int n = 0; n < 20; ++n) {
        const QFunction f = testing::random_psi_regular(rng, 2, 5);
        const QFunction g = testing::random_qfunction(rng, 1, 3);
        const QFunction u = perturb_fixed_boundary(f, g);
        c.equal(invariant_K(f), invariant_K(u), "K(u) = K(f)");
        c.expect(energy(u) >= energy(f), "E(u) >= E(f)");
    }
}

void integration_oracle(Checks& c) {
    Rng rng(901);
    const auto monos = testing::monomials_up_to(8);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
        // Bias half the draws toward monomials with a nonzero integral.
        Exponents e = monos[pick(rng)];
        if (n % 2) {
            e[1] = e[0];
            e[3] = e[2];
        }
        const CPoly p = CPoly::monomial(e);
        const auto exact = integrate_poly(p, DomainSpec::unit_ball()).to_complex();
        const auto est = monte_carlo_integral(p, DomainSpec::unit_ball(), 1'000'000, 9000 + n);
        const double err = std::abs(est.mean - exact);
        if (est.standard_error > 0) worst = std::max(worst, err / est.standard_error);
        c.expect(err <= 4 * est.standard_error + 1e-12, "monomial within 4 standard errors");
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 30.0, "runtime under 30 s");
    std::ostringstream os;
    os.precision(3);
    os << "worst " << worst << " SE, " << seconds << " s";
    c.note(os.str());
}

void classification_coverage(Checks& c) {
    c.equal(ClassificationType::I_constant, classify(QFunction::constant(Quaternion(1, 0, 0, 1))).type, "constant");
    c.equal(ClassificationType::II_circle, classify(QFunction::identity()).type, "identity");
    Rng rng(1001);
    for (int n = 0; n < 10; ++n) {
        Quaternion q;
        while (q.is_zero()) q = testing::random_quaternion(rng);
        c.equal(ClassificationType::II_circle, classify(qfun_right_mul(QFunction::identity(), q)).type,
                "identity * q");
    }
    c.equal(ClassificationType::III_pair, classify(parse_function("conj(z1) + (z1 + conj(z2))*j")).type, "h");
    c.equal(ClassificationType::IV_empty,
            classify(parse_function("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j")).type, "example one");

    const CPoly z1 = CPoly::variable(Var::z1), z2 = CPoly::variable(Var::z2);
    for (int n = 0; n < 10; ++n) {
        GaussianRational a1, a2;
        while (a1.is_zero() && a2.is_zero()) {
            a1 = testing::random_gaussian(rng);
            a2 = testing::random_gaussian(rng);
        }
        const QFunction f{z1 * a1 - z2 * a2.conj(), z1 * a2 + z2 * a1.conj()};
        const Classification cl = classify(f);
        c.equal(ClassificationType::II_circle, cl.type, "constructed type II");
        c.expect(cl.directions_verified, "directions verified");
        c.expect(cl.structures.normal.has_value(), "circle has a normal");
        if (cl.structures.normal) c.equal(IntegerDirection{0, 0, 1}, *cl.structures.normal, "circle normal");
        c.expect(check_holomorphic_p(f, {1, 0, 0}) && check_holomorphic_p(f, {0, 1, 0}),
                 "circle contains (1,0,0) and (0,1,0)");
    }
}

struct Criterion {
    const char* name;
    std::function<void(Checks&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"example one: E = 6, A = 2I, type IV", example_one},
        {"J_p-holomorphic example: E = 3, type III along (1,0,2)", example_h},
        {"quadratic example: E = 2, A = diag(-2/3,4/3,4/3), type IV", example_quadratic},
        {"odd Jacobian rank example: rank 3, type IV", example_odd_rank},
        {"structure facts: Hol_i, Hol_j, +/-w, anti-holomorphic cases", structure_facts},
        {"property suite over random polynomials of degree <= 3", property_suite},
        {"explicit degree-6 form equals det(A - tr A I)/16", appendix_suite},
        {"boundary-fixed perturbations keep K and do not lower E", energy_minimization},
        {"exact ball integrals agree with Monte Carlo", integration_oracle},
        {"classification coverage of types I-IV", classification_coverage},
    };
    int failed = 0, index = 0;
    for (const auto& cr : criteria) {
        ++index;
        Checks c;
        std::string error;
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && c.passed();
        failed += !ok;
        std::printf("AC%-2d %s  %s  (%s)\n", index, ok ? "PASS" : "FAIL", cr.name, c.summary().c_str());
        if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
        for (std::size_t n = 0; n < c.failures().size() && n < 5; ++n)
            std::printf("      %s\n", c.failures()[n].c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed ? 1 : 0;
}
