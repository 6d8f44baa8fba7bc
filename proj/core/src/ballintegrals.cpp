#include "hqreg/ballintegrals.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace hqreg {

namespace {

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational rational_pow(const Rational& x, unsigned n) {
    Rational r = 1;
    for (unsigned s = 0; s < n; ++s) r *= x;
    return r;
}

GaussianRational i_pow(unsigned n) {
    switch (n % 4) {
        case 0: return 1;
        case 1: return GaussianRational::i();
        case 2: return -1;
        default: return -GaussianRational::i();
    }
}

Rational unit_ball_monomial(const Exponents& e) {
    if (e[0] != e[1] || e[2] != e[3]) return 0;
    Rational r(2 * factorial(e[0]) * factorial(e[2]), factorial(e[0] + e[2] + 2));
    r.canonicalize();
    return r;
}

// Average of x^k over [lo, hi].
Rational interval_average(const Rational& lo, const Rational& hi, unsigned k) {
    return (rational_pow(hi, k + 1) - rational_pow(lo, k + 1)) / (Rational(k + 1) * (hi - lo));
}

// (x + i y)^a (x - i y)^b as a polynomial in (x, y).
std::map<std::pair<unsigned, unsigned>, GaussianRational> expand_pair(unsigned a, unsigned b) {
    std::map<std::pair<unsigned, unsigned>, GaussianRational> out;
    for (unsigned s = 0; s <= a; ++s)
        for (unsigned t = 0; t <= b; ++t) {
            // i^s (-i)^t = i^(s + 3t)
            GaussianRational c = i_pow(s + 3 * t) * GaussianRational(Rational(binomial(a, s) * binomial(b, t)));
            out[{a - s + b - t, s + t}] += c;
        }
    return out;
}

GaussianRational box_monomial(const Exponents& e, const Box& box) {
    const auto first = expand_pair(e[0], e[1]);
    const auto second = expand_pair(e[2], e[3]);
    const auto& iv = box.intervals;
    GaussianRational sum;
    for (const auto& [p1, c1] : first) {
        if (c1.is_zero()) continue;
        const Rational avg1 =
            interval_average(iv[0].first, iv[0].second, p1.first) * interval_average(iv[1].first, iv[1].second, p1.second);
        for (const auto& [p2, c2] : second) {
            if (c2.is_zero()) continue;
            const Rational avg2 = interval_average(iv[2].first, iv[2].second, p2.first) *
                                  interval_average(iv[3].first, iv[3].second, p2.second);
            sum += c1 * c2 * GaussianRational(Rational(avg1 * avg2));
        }
    }
    return sum;
}

}  // namespace

DomainSpec DomainSpec::ball(Rational radius) {
    if (sgn(radius) <= 0) throw std::invalid_argument("ball radius must be positive");
    return DomainSpec(Ball{std::move(radius)});
}

DomainSpec DomainSpec::box(std::array<std::pair<Rational, Rational>, 4> intervals) {
    for (const auto& [lo, hi] : intervals)
        if (!(lo < hi)) throw std::invalid_argument("box intervals must satisfy lo < hi");
    return DomainSpec(Box{std::move(intervals)});
}

std::string DomainSpec::to_string() const {
    if (std::holds_alternative<UnitBall>(kind_)) return "unit-ball";
    if (const auto* b = std::get_if<Ball>(&kind_)) return "ball:" + hqreg::to_string(b->radius);
    const auto& box = std::get<Box>(kind_);
    std::string out = "box:";
    for (std::size_t a = 0; a < 4; ++a) {
        if (a) out += "x";
        out += "<" + hqreg::to_string(box.intervals[a].first) + "," + hqreg::to_string(box.intervals[a].second) + ">";
    }
    return out;
}

GaussianRational integrate_monomial(const Exponents& e, const DomainSpec& domain) {
    return std::visit(
        [&](const auto& k) -> GaussianRational {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, UnitBall>) {
                return unit_ball_monomial(e);
            } else if constexpr (std::is_same_v<K, Ball>) {
                return Rational(unit_ball_monomial(e) * rational_pow(k.radius, e[0] + e[1] + e[2] + e[3]));
            } else {
                return box_monomial(e, k);
            }
        },
        domain.kind());
}

GaussianRational integrate_poly(const CPoly& p, const DomainSpec& domain) {
    GaussianRational sum;
    for (const auto& [e, c] : p.terms()) {
        const GaussianRational m = integrate_monomial(e, domain);
        if (!m.is_zero()) sum += c * m;
    }
    return sum;
}

Integrator make_integrator(const DomainSpec& domain) {
    return [domain](const CPoly& p) { return integrate_poly(p, domain); };
}

MonteCarloEstimate monte_carlo_integral(const CPoly& p, const DomainSpec& domain, std::uint64_t samples,
                                        std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("monte carlo needs at least one sample");
    std::mt19937_64 rng(seed);
    std::array<std::uniform_real_distribution<double>, 4> coord;
    double radius2 = -1.0;  // < 0: box, no rejection
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Box>) {
                for (std::size_t a = 0; a < 4; ++a)
                    coord[a] = std::uniform_real_distribution<double>(k.intervals[a].first.get_d(),
                                                                      k.intervals[a].second.get_d());
            } else {
                double r = 1.0;
                if constexpr (std::is_same_v<K, Ball>) r = k.radius.get_d();
                radius2 = r * r;
                for (auto& d : coord) d = std::uniform_real_distribution<double>(-r, r);
            }
        },
        domain.kind());

    // Coefficients converted once; evaluating through CPoly would redo it per sample.
    std::vector<std::pair<Exponents, std::complex<double>>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, c.to_complex());
    auto eval = [&terms](const std::array<double, 4>& x) {
        const std::complex<double> vars[4] = {{x[0], x[1]}, {x[0], -x[1]}, {x[2], x[3]}, {x[2], -x[3]}};
        std::complex<double> sum(0.0, 0.0);
        for (const auto& [e, c] : terms) {
            std::complex<double> t = c;
            for (std::size_t s = 0; s < 4; ++s)
                for (unsigned k = 0; k < e[s]; ++k) t *= vars[s];
            sum += t;
        }
        return sum;
    };

    // Welford accumulation of the complex mean and E|X - mean|^2.
    std::complex<double> mean(0.0, 0.0);
    double m2 = 0.0;
    std::uint64_t n = 0;
    while (n < samples) {
        std::array<double, 4> x;
        for (std::size_t a = 0; a < 4; ++a) x[a] = coord[a](rng);
        if (radius2 >= 0.0 && x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] > radius2) continue;
        const std::complex<double> v = eval(x);
        ++n;
        const std::complex<double> delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += std::real(std::conj(delta) * (v - mean));
    }
    const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

}  // namespace hqreg
