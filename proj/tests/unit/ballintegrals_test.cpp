#include "hqreg/ballintegrals.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hqreg;

namespace {

Rational factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return Rational(r);
}

// Average of x0^a0 x1^a1 x2^a2 x3^a3 over the unit ball in R^4, from
// integral = prod Gamma((a_i + 1)/2) / Gamma(|a|/2 + 3) and vol = pi^2 / 2.
double gamma_oracle(const std::array<unsigned, 4>& a) {
    for (unsigned v : a)
        if (v % 2) return 0.0;
    double num = 1.0;
    unsigned total = 0;
    for (unsigned v : a) {
        num *= std::tgamma((v + 1.0) / 2.0);
        total += v;
    }
    return num / std::tgamma(total / 2.0 + 3.0) / (std::numbers::pi * std::numbers::pi / 2.0);
}

CPoly real_monomial(const std::array<unsigned, 4>& a) {
    const auto x = QFunction::identity().real_components();
    CPoly p(1);
    for (std::size_t s = 0; s < 4; ++s) p *= power(x[s], a[s]);
    return p;
}

}  // namespace

TEST_CASE("unit-ball monomial table") {
    const DomainSpec B = DomainSpec::unit_ball();
    CHECK(integrate_monomial({0, 0, 0, 0}, B) == GaussianRational(1));
    CHECK(integrate_monomial({1, 1, 0, 0}, B) == GaussianRational(Rational(1, 3)));
    CHECK(integrate_monomial({1, 1, 1, 1}, B) == GaussianRational(Rational(1, 12)));
    CHECK(integrate_monomial({2, 2, 0, 0}, B) == GaussianRational(Rational(1, 6)));
    CHECK(integrate_monomial({1, 0, 0, 0}, B).is_zero());
    CHECK(integrate_monomial({2, 1, 1, 1}, B).is_zero());
    for (unsigned a = 0; a < 5; ++a)
        for (unsigned c = 0; c < 5; ++c)
            CHECK(integrate_monomial({a, a, c, c}, B) ==
                  GaussianRational(Rational(2) * factorial(a) * factorial(c) / factorial(a + c + 2)));
}

TEST_CASE("real monomials match the Gamma-function formula") {
    for (unsigned a0 = 0; a0 <= 4; ++a0)
        for (unsigned a1 = 0; a0 + a1 <= 4; ++a1)
            for (unsigned a2 = 0; a0 + a1 + a2 <= 4; ++a2)
                for (unsigned a3 = 0; a0 + a1 + a2 + a3 <= 4; ++a3) {
                    const std::array<unsigned, 4> a{a0, a1, a2, a3};
                    const GaussianRational v = integrate_poly(real_monomial(a), DomainSpec::unit_ball());
                    CHECK(v.is_real());
                    CHECK(v.re().get_d() == doctest::Approx(gamma_oracle(a)).epsilon(1e-12));
                }
}

TEST_CASE("balls scale by r^degree") {
    const DomainSpec B2 = DomainSpec::ball(2);
    CHECK(integrate_monomial({1, 1, 0, 0}, B2) == GaussianRational(Rational(4, 3)));
    CHECK(integrate_monomial({1, 1, 1, 1}, DomainSpec::ball(Rational(1, 2))) == GaussianRational(Rational(1, 192)));
    CHECK_THROWS_AS(DomainSpec::ball(0), std::invalid_argument);
    CHECK_THROWS_AS(DomainSpec::ball(-1), std::invalid_argument);
}

TEST_CASE("box averages") {
    using I = std::pair<Rational, Rational>;
    const DomainSpec cube = DomainSpec::box({I{0, 1}, I{0, 1}, I{0, 1}, I{0, 1}});
    // x0 averages 1/2 so z1 averages 1/2 + i/2.
    CHECK(integrate_monomial({1, 0, 0, 0}, cube) == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(integrate_monomial({1, 1, 0, 0}, cube) == GaussianRational(Rational(2, 3)));
    const DomainSpec sym = DomainSpec::box({I{-1, 1}, I{-2, 2}, I{-1, 1}, I{-1, 1}});
    CHECK(integrate_monomial({1, 1, 0, 0}, sym) == GaussianRational(Rational(1, 3) + Rational(4, 3)));
    CHECK(integrate_monomial({1, 0, 0, 0}, sym).is_zero());
    CHECK_THROWS_AS(DomainSpec::box({I{1, 0}, I{0, 1}, I{0, 1}, I{0, 1}}), std::invalid_argument);
}

TEST_CASE("integration is linear and commutes with conjugation") {
    testing::Rng rng(41);
    using I = std::pair<Rational, Rational>;
    const DomainSpec domains[] = {DomainSpec::unit_ball(), DomainSpec::ball(Rational(3, 2)),
                                  DomainSpec::box({I{0, 1}, I{-1, 2}, I{Rational(1, 2), 1}, I{-1, 0}})};
    for (const auto& D : domains)
        for (int n = 0; n < 20; ++n) {
            const CPoly p = testing::random_cpoly(rng, 4, 5), q = testing::random_cpoly(rng, 4, 5);
            const GaussianRational s = testing::random_gaussian(rng);
            CHECK(integrate_poly(p + q * s, D) == integrate_poly(p, D) + integrate_poly(q, D) * s);
            CHECK(integrate_poly(p.conj(), D) == integrate_poly(p, D).conj());
            CHECK(integrate_poly(p * p.conj(), D).is_real());
        }
}

TEST_CASE("make_integrator matches integrate_poly") {
    const Integrator avg = make_integrator(DomainSpec::ball(3));
    const CPoly p = CPoly::monomial({1, 1, 1, 1}) + CPoly(2);
    CHECK(avg(p) == integrate_poly(p, DomainSpec::ball(3)));
}

TEST_CASE("Monte Carlo agrees with the exact value") {
    testing::Rng rng(42);
    using I = std::pair<Rational, Rational>;
    const DomainSpec domains[] = {DomainSpec::unit_ball(), DomainSpec::ball(2),
                                  DomainSpec::box({I{0, 1}, I{-1, 1}, I{0, 2}, I{-1, 0}})};
    for (const auto& D : domains)
        for (int n = 0; n < 4; ++n) {
            const CPoly p = testing::random_cpoly(rng, 3, 3);
            const auto est = monte_carlo_integral(p, D, 200000, 1000 + n);
            const auto exact = integrate_poly(p, D).to_complex();
            CHECK(est.samples == 200000);
            CHECK(std::abs(est.mean - exact) <= 5 * est.standard_error + 1e-12);
        }
    CHECK_THROWS_AS(monte_carlo_integral(CPoly(1), DomainSpec::unit_ball(), 0, 1), std::invalid_argument);
    const auto a = monte_carlo_integral(CPoly::monomial({1, 1, 0, 0}), DomainSpec::unit_ball(), 1000, 7);
    const auto b = monte_carlo_integral(CPoly::monomial({1, 1, 0, 0}), DomainSpec::unit_ball(), 1000, 7);
    CHECK(a.mean == b.mean);
}
