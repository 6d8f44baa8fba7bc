#pragma once

// Volume-normalized integration of polynomials over balls and boxes in C^2,
// i.e. (1/vol(Omega)) * integral over Omega. On the unit ball
//
//   avg z1^a conj(z1)^b z2^c conj(z2)^d = 2 a! c! / (a + c + 2)!   if a = b, c = d
//                                        = 0                         otherwise.
//
// Every reported integral in the library uses this normalized measure.

#include "hqreg/qpolynomial.hpp"
#include "hqreg/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>

namespace hqreg {

struct UnitBall {
    friend bool operator==(const UnitBall&, const UnitBall&) = default;
};
struct Ball {
    Rational radius;
    friend bool operator==(const Ball&, const Ball&) = default;
};
struct Box {
    /// [lo, hi] for x0, x1, x2, x3.
    std::array<std::pair<Rational, Rational>, 4> intervals;
    friend bool operator==(const Box&, const Box&) = default;
};

class DomainSpec {
public:
    using Kind = std::variant<UnitBall, Ball, Box>;

    DomainSpec() = default;
    static DomainSpec unit_ball() { return DomainSpec(UnitBall{}); }
    /// Throws std::invalid_argument unless radius > 0.
    static DomainSpec ball(Rational radius);
    /// Throws std::invalid_argument unless every interval has lo < hi.
    static DomainSpec box(std::array<std::pair<Rational, Rational>, 4> intervals);

    const Kind& kind() const { return kind_; }
    /// "unit-ball", "ball:<r>", "box:<a,b>x<c,d>x<e,f>x<g,h>".
    std::string to_string() const;

    friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

private:
    explicit DomainSpec(Kind k) : kind_(std::move(k)) {}
    Kind kind_{UnitBall{}};
};

/// Normalized integral of z1^a conj(z1)^b z2^c conj(z2)^d. Always a Gaussian
/// rational; real on balls.
GaussianRational integrate_monomial(const Exponents& e, const DomainSpec& domain);

/// Linear extension of integrate_monomial.
GaussianRational integrate_poly(const CPoly& p, const DomainSpec& domain);

/// Anything mapping a polynomial to its normalized integral. The criterion
/// functions are written against this so alternative measures can be plugged in.
using Integrator = std::function<GaussianRational(const CPoly&)>;

Integrator make_integrator(const DomainSpec& domain);

struct MonteCarloEstimate {
    std::complex<double> mean;
    /// sqrt(E|X - mean|^2 / n); bounds the error of the complex mean.
    double standard_error = 0.0;
    std::uint64_t samples = 0;
};

/// Uniform sampling (rejection from the bounding cube for balls). Single
/// threaded, deterministic in the seed. Throws std::invalid_argument when
/// samples == 0.
MonteCarloEstimate monte_carlo_integral(const CPoly& p, const DomainSpec& domain, std::uint64_t samples,
                                        std::uint64_t seed);

}  // namespace hqreg
