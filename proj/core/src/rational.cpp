#include "hqreg/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hqreg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: " + std::string(text));
        const mpz_class d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        value = Rational(mpz_class(std::string(num)), d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        mpz_class scale = 1;
        for (std::size_t n = 0; n < frac.size(); ++n) scale *= 10;
        mpz_class num(whole.empty() ? std::string("0") : std::string(whole));
        num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(std::string(frac)));
        value = Rational(num, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational: " + std::string(text));
        value = Rational(mpz_class(std::string(s)));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& z) {
    const bool has_re = sgn(z.re()) != 0;
    const bool has_im = sgn(z.im()) != 0;
    if (!has_im) return to_string(z.re());
    std::ostringstream os;
    if (has_re) os << to_string(z.re());
    const Rational& b = z.im();
    if (b == 1) {
        os << (has_re ? "+i" : "i");
    } else if (b == -1) {
        os << "-i";
    } else {
        if (has_re && sgn(b) > 0) os << "+";
        os << to_string(b) << "*i";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace hqreg
