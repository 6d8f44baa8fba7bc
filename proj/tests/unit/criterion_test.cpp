#include "hqreg/criterion.hpp"

#include "hqreg/expression.hpp"
#include "hqreg/linalg.hpp"
#include "hqreg/regularity.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace hqreg;

namespace {

QFunction f_(const char* text) { return parse_function(text); }

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

}  // namespace

TEST_CASE("published energy matrices") {
    const EnergyMatrix e1 = matrix_A(f_("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j"));
    CHECK(e1.energy == 6);
    CHECK(e1.A == Rational(2) * Matrix3::identity());

    const EnergyMatrix e2 = matrix_A(f_("conj(z1) + (z1 + conj(z2))*j"));
    CHECK(e2.energy == 3);
    CHECK(e2.A == mat({{-1, 0, 2}, {0, 2, 0}, {2, 0, 2}}));
    CHECK(e2.shifted_determinant() == 0);

    const EnergyMatrix e3 = matrix_A(f_("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j"));
    CHECK(e3.energy == 2);
    CHECK(e3.A == mat({{Rational(-2, 3), 0, 0}, {0, Rational(4, 3), 0}, {0, 0, Rational(4, 3)}}));
}

TEST_CASE("identity and conj(z1)") {
    const QFunction id = QFunction::identity();
    const EnergyMatrix e = matrix_A(id);
    CHECK(e.energy == 2);
    CHECK(e.A == mat({{2, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
    CHECK(invariant_K(id) == -2);
    CHECK(invariant_I(id) == 0);

    const QFunction zb = f_("conj(z1)");
    const EnergyMatrix eb = matrix_A(zb);
    CHECK(eb.energy == 1);
    CHECK(eb.A == mat({{-1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(invariant_K(zb) == 1);
    CHECK(invariant_I(zb) == 8);
    CHECK(eb.is_symmetric());
}

TEST_CASE("shifted characteristic polynomial") {
    testing::Rng rng(51);
    for (int n = 0; n < 10; ++n) {
        const EnergyMatrix e = matrix_A(testing::random_qfunction(rng, 2));
        const Rational t = testing::random_rational(rng);
        Matrix3 shifted = e.A - (e.trace + t) * Matrix3::identity();
        const auto& c = e.char_poly_shifted;
        CHECK(determinant(shifted) == c[0] + c[1] * t + c[2] * t * t + c[3] * t * t * t);
        CHECK(c[3] == -1);
        CHECK(e.trace == e.A.trace());
    }
}

TEST_CASE("complex and real routes to A agree") {
    testing::Rng rng(52);
    using I = std::pair<Rational, Rational>;
    const DomainSpec box = DomainSpec::box({I{0, 1}, I{-1, 1}, I{0, 2}, I{-1, 0}});
    for (int n = 0; n < 40; ++n) {
        const QFunction f = n % 2 ? testing::random_psi_regular(rng, 2) : testing::random_qfunction(rng, 2);
        CHECK(matrix_A(f).A == matrix_A_real_coordinates(f));
        if (n < 10) CHECK(matrix_A(f, box).A == matrix_A_real_coordinates(f, box));
    }
}

TEST_CASE("E + K = I/4 for every function") {
    testing::Rng rng(53);
    for (int n = 0; n < 40; ++n) {
        const QFunction f = testing::random_qfunction(rng, 2);
        CHECK(energy(f) + invariant_K(f) == invariant_I(f) / 4);
    }
}

TEST_CASE("psi-regular energy matrices") {
    testing::Rng rng(54);
    for (int n = 0; n < 30; ++n) {
        const QFunction f = testing::random_psi_regular(rng, 2);
        const EnergyMatrix e = matrix_A(f);
        CHECK(e.is_symmetric());
        CHECK(e.energy == e.trace);
        for (int m = 0; m < 5; ++m) {
            const auto w = testing::random_direction(rng);
            // X A X^T = E - I_p/4 with X = w/|w|, so X A X^T <= E.
            const Rational xax = quadratic_form(e.A, w);
            CHECK(xax == e.energy - invariant_I_p(f, w) / 4);
            CHECK(xax <= e.energy);
            CHECK((xax == e.energy) == check_holomorphic_p(f, w));
        }
    }
}

TEST_CASE("classification") {
    CHECK(classify(f_("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j")).type == ClassificationType::IV_empty);

    const Classification h = classify(f_("conj(z1) + (z1 + conj(z2))*j"));
    CHECK(h.type == ClassificationType::III_pair);
    CHECK(h.structures.shape == StructureSet::Shape::antipodal_pair);
    REQUIRE(h.structures.directions.size() == 1);
    CHECK(h.structures.directions[0] == IntegerDirection{1, 0, 2});
    CHECK(h.directions_verified);

    const Classification id = classify(QFunction::identity());
    CHECK(id.type == ClassificationType::II_circle);
    CHECK(id.structures.directions.size() == 2);
    REQUIRE(id.structures.normal);
    CHECK(*id.structures.normal == IntegerDirection{0, 0, 1});
    CHECK(id.directions_verified);

    const Classification c = classify(QFunction::constant(Quaternion(1, 2, 3, 4)));
    CHECK(c.type == ClassificationType::I_constant);
    CHECK(c.structures.shape == StructureSet::Shape::sphere);

    CHECK(classify(f_("conj(z1)")).type == ClassificationType::not_psi_regular);

    for (auto t : {ClassificationType::I_constant, ClassificationType::II_circle, ClassificationType::III_pair,
                   ClassificationType::IV_empty, ClassificationType::not_psi_regular})
        CHECK(classification_type_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(classification_type_from_string("V"), std::invalid_argument);
}

TEST_CASE("classification on other domains") {
    // Affine functions have a constant Jacobian, so A does not depend on the domain.
    const QFunction h = f_("conj(z1) + (z1 + conj(z2))*j");
    CHECK(matrix_A(h, DomainSpec::ball(5)).A == matrix_A(h).A);
    CHECK(classify(h, DomainSpec::ball(5)).type == ClassificationType::III_pair);
    // Homogeneous quadratics scale by r^2.
    const QFunction q = f_("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j");
    CHECK(energy(q, DomainSpec::ball(3)) == 9 * energy(q));
}

TEST_CASE("boundary-fixing perturbation") {
    testing::Rng rng(55);
    for (int n = 0; n < 10; ++n) {
        const QFunction f = testing::random_psi_regular(rng, 2);
        const QFunction g = testing::random_qfunction(rng, 1, 2);
        const QFunction u = perturb_fixed_boundary(f, g);
        CHECK(invariant_K(u) == invariant_K(f));
        CHECK(energy(u) >= energy(f));
    }
    const QFunction u = perturb_fixed_boundary(QFunction::identity(), QFunction::constant(Quaternion::one()));
    CHECK(u.f1 == f_("1 + z1 - z1*conj(z1) - z2*conj(z2)").f1);
}

TEST_CASE("integrals of real quantities must be real") {
    const Integrator skewed = [](const CPoly& p) {
        return integrate_poly(p, DomainSpec::unit_ball()) + GaussianRational::i();
    };
    CHECK_THROWS_AS(energy(QFunction::identity(), skewed), std::logic_error);
}
