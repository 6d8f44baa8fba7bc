#pragma once

// Text form of quaternionic polynomial functions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := number | 'i' | 'j' | 'k' | 'z1' | 'z2' | 'conj' '(' expr ')' | '(' expr ')'
//   number := digits | digits '/' digits | digits '.' digits
//
// Products are noncommutative and evaluated left to right; conj is the
// quaternion conjugate. Output of to_string(QFunction) parses back to the
// same normal form.

#include "hqreg/ballintegrals.hpp"
#include "hqreg/qpolynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hqreg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Division by non-literals, negative or fractional exponents, transcendental functions.
class NonPolynomialError : public ParseError {
public:
    using ParseError::ParseError;
};

QFunction parse_function(std::string_view text);

/// A constant in span{1, i}, e.g. "1/2-3*i". Throws ParseError otherwise.
GaussianRational parse_complex_constant(std::string_view text);

/// "unit-ball", "ball:<r>" or "box:<a,b>x<c,d>x<e,f>x<g,h>" (angle brackets optional).
DomainSpec parse_domain(std::string_view text);

}  // namespace hqreg
