#include "hqreg/expression.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace hqreg {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, slash, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t p = 0;
    auto is_digit = [&](std::size_t at) { return at < s.size() && std::isdigit(static_cast<unsigned char>(s[at])); };
    while (p < s.size()) {
        const char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        const std::size_t start = p;
        if (is_digit(p) || (c == '.' && is_digit(p + 1))) {
            while (is_digit(p)) ++p;
            if (p < s.size() && s[p] == '.') {
                ++p;
                while (is_digit(p)) ++p;
            } else if (p < s.size() && s[p] == '/' && is_digit(p + 1)) {
                ++p;
                while (is_digit(p)) ++p;
            }
            out.push_back({Tok::number, std::string(s.substr(start, p - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
            out.push_back({Tok::ident, std::string(s.substr(start, p - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '/': kind = Tok::slash; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", p);
        }
        out.push_back({kind, std::string(1, c), p});
        ++p;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

QFunction quaternion_conj(const QFunction& f) { return {f.f1.conj(), -f.f2}; }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    QFunction parse() {
        QFunction f = expr();
        if (peek().kind == Tok::slash)
            throw NonPolynomialError("division is not a polynomial operation (use rational literals such as 1/2)",
                                     peek().pos);
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    QFunction expr() {
        QFunction acc = term();
        while (true) {
            if (accept(Tok::plus)) acc = acc + term();
            else if (accept(Tok::minus)) acc = acc - term();
            else return acc;
        }
    }

    QFunction term() {
        QFunction acc = factor();
        while (true) {
            if (accept(Tok::star)) {
                acc = acc * factor();
            } else if (peek().kind == Tok::slash) {
                throw NonPolynomialError(
                    "division is not a polynomial operation (use rational literals such as 1/2)", peek().pos);
            } else {
                return acc;
            }
        }
    }

    QFunction factor() {
        if (accept(Tok::minus)) return -factor();
        QFunction base = atom();
        if (!accept(Tok::caret)) return base;
        const Token& t = peek();
        if (t.kind == Tok::minus) throw NonPolynomialError("negative exponents are not polynomial", t.pos);
        if (t.kind != Tok::number) throw ParseError("expected an exponent", t.pos);
        if (t.text.find_first_not_of("0123456789") != std::string::npos)
            throw NonPolynomialError("exponents must be nonnegative integers", t.pos);
        if (t.text.size() > 4) throw ParseError("exponent too large", t.pos);
        const unsigned n = static_cast<unsigned>(std::stoul(t.text));
        next();
        QFunction r = QFunction::constant(Quaternion::one());
        for (unsigned s = 0; s < n; ++s) r = r * base;
        return r;
    }

    QFunction atom() {
        const Token t = next();
        switch (t.kind) {
            case Tok::number: {
                Rational v;
                try {
                    v = parse_rational(t.text);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), t.pos);
                }
                return QFunction::constant({v, 0, 0, 0});
            }
            case Tok::lparen: {
                QFunction f = expr();
                expect(Tok::rparen, "')'");
                return f;
            }
            case Tok::ident: return identifier(t);
            case Tok::end: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    QFunction identifier(const Token& t) {
        if (t.text == "i") return QFunction::constant(Quaternion::i());
        if (t.text == "j") return QFunction::constant(Quaternion::j());
        if (t.text == "k") return QFunction::constant(Quaternion::k());
        if (t.text == "z1") return {CPoly::variable(Var::z1), CPoly()};
        if (t.text == "z2") return {CPoly::variable(Var::z2), CPoly()};
        if (t.text == "conj") {
            expect(Tok::lparen, "'(' after conj");
            QFunction f = expr();
            expect(Tok::rparen, "')'");
            return quaternion_conj(f);
        }
        if (peek().kind == Tok::lparen)
            throw NonPolynomialError("unsupported function '" + t.text + "'", t.pos);
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::pair<Rational, Rational> parse_interval(std::string_view s, std::size_t offset) {
    if (!s.empty() && s.front() == '<') s.remove_prefix(1), ++offset;
    if (!s.empty() && s.back() == '>') s.remove_suffix(1);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError("interval needs the form <lo,hi>", offset);
    try {
        return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), offset);
    }
}

}  // namespace

QFunction parse_function(std::string_view text) { return Parser(text).parse(); }

GaussianRational parse_complex_constant(std::string_view text) {
    const QFunction f = parse_function(text);
    if (!f.f2.is_zero() || !f.f1.is_constant())
        throw ParseError("expected a complex constant in span{1, i}", 0);
    return f.f1.coefficient({0, 0, 0, 0});
}

DomainSpec parse_domain(std::string_view text) {
    if (text == "unit-ball") return DomainSpec::unit_ball();
    try {
        if (text.starts_with("ball:")) return DomainSpec::ball(parse_rational(text.substr(5)));
        if (text.starts_with("box:")) {
            std::array<std::pair<Rational, Rational>, 4> iv;
            std::string_view rest = text.substr(4);
            std::size_t offset = 4;
            for (std::size_t a = 0; a < 4; ++a) {
                // Interval separators are 'x' characters outside angle brackets.
                std::size_t cut = std::string_view::npos;
                int depth = 0;
                for (std::size_t p = 0; p < rest.size(); ++p) {
                    if (rest[p] == '<') ++depth;
                    else if (rest[p] == '>') --depth;
                    else if (rest[p] == 'x' && depth == 0) {
                        cut = p;
                        break;
                    }
                }
                if ((a < 3) == (cut == std::string_view::npos))
                    throw ParseError("box needs four intervals separated by 'x'", offset);
                iv[a] = parse_interval(rest.substr(0, cut), offset);
                if (cut != std::string_view::npos) {
                    rest = rest.substr(cut + 1);
                    offset += cut + 1;
                }
            }
            return DomainSpec::box(iv);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
    throw ParseError("unknown domain '" + std::string(text) + "' (use unit-ball, ball:<r> or box:...)", 0);
}

}  // namespace hqreg
