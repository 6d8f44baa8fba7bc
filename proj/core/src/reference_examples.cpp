#include "hqreg/reference_examples.hpp"

#include "hqreg/criterion.hpp"
#include "hqreg/expression.hpp"
#include "hqreg/regularity.hpp"

#include <sstream>

namespace hqreg {

namespace {

std::string matrix_text(const Matrix3& A) {
    std::string s = "[";
    for (std::size_t a = 0; a < 3; ++a) {
        s += a ? ", [" : "[";
        for (std::size_t b = 0; b < 3; ++b) s += (b ? "," : "") + to_string(A(a, b));
        s += "]";
    }
    return s + "]";
}

Matrix3 matrix_of(std::initializer_list<std::initializer_list<Rational>> rows) {
    Matrix3 m;
    std::size_t a = 0;
    for (const auto& row : rows) {
        std::size_t b = 0;
        for (const auto& v : row) m(a, b++) = v;
        ++a;
    }
    return m;
}

std::string direction_text(const IntegerDirection& d) {
    return "(" + d[0].get_str() + "," + d[1].get_str() + "," + d[2].get_str() + ")";
}

class Case {
public:
    Case(std::string name, std::string function) {
        outcome_.name = std::move(name);
        outcome_.function = function;
        f_ = parse_function(function);
    }

    const QFunction& f() const { return f_; }

    template <typename T>
    void expect(const std::string& what, const T& expected, const T& computed) {
        if (expected == computed) return;
        std::ostringstream os;
        os << what << ": expected " << show(expected) << ", computed " << show(computed);
        fail(os.str());
    }

    void expect_true(const std::string& what, bool computed) {
        if (!computed) fail(what + ": expected true, computed false");
    }
    void expect_false(const std::string& what, bool computed) {
        if (computed) fail(what + ": expected false, computed true");
    }

    ExampleOutcome finish() { return std::move(outcome_); }

private:
    void fail(std::string line) {
        outcome_.passed = false;
        outcome_.mismatches.push_back(std::move(line));
    }

    static std::string show(const Rational& r) { return to_string(r); }
    static std::string show(const Matrix3& m) { return matrix_text(m); }
    static std::string show(ClassificationType t) { return to_string(t); }
    static std::string show(const IntegerDirection& d) { return direction_text(d); }
    static std::string show(int n) { return std::to_string(n); }

    ExampleOutcome outcome_;
    QFunction f_;
};

bool holomorphic(const QFunction& f, int w1, int w2, int w3) { return check_holomorphic_p(f, {w1, w2, w3}); }

}  // namespace

bool ExampleSummary::all_passed() const { return failures() == 0; }

std::size_t ExampleSummary::failures() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.passed ? 0 : 1;
    return n;
}

std::string ExampleSummary::to_text() const {
    std::ostringstream os;
    for (const auto& c : cases) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "    f = " << c.function << "\n";
        for (const auto& m : c.mismatches) os << "        " << m << "\n";
    }
    os << (cases.size() - failures()) << "/" << cases.size() << " cases passed\n";
    return os.str();
}

ExampleSummary run_reference_examples(const Integrator& integrate) {
    ExampleSummary summary;

    {
        Case c("psi-regular, not holomorphic (E = 6, A = 2I)", "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect_true("psi-regular", check_psi(c.f()).holds);
        c.expect("energy", Rational(6), cl.energy_matrix.energy);
        c.expect("matrix A", Rational(2) * Matrix3::identity(), cl.energy_matrix.A);
        c.expect("type", ClassificationType::IV_empty, cl.type);
        summary.cases.push_back(c.finish());
    }
    {
        Case c("J_p-holomorphic with p = (i + 2k)/sqrt(5)", "conj(z1) + (z1 + conj(z2))*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect("energy", Rational(3), cl.energy_matrix.energy);
        c.expect("matrix A", matrix_of({{-1, 0, 2}, {0, 2, 0}, {2, 0, 2}}), cl.energy_matrix.A);
        c.expect("type", ClassificationType::III_pair, cl.type);
        if (cl.structures.directions.size() == 1)
            c.expect("direction", IntegerDirection{1, 0, 2}, cl.structures.directions[0]);
        else
            c.expect_true("single direction reported", false);
        c.expect_true("holomorphic for w = (1,0,2)", holomorphic(c.f(), 1, 0, 2));
        summary.cases.push_back(c.finish());
    }
    {
        Case c("quadratic, not holomorphic (E = 2)", "z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect_true("psi-regular", check_psi(c.f()).holds);
        c.expect("energy", Rational(2), cl.energy_matrix.energy);
        c.expect("matrix A", matrix_of({{Rational(-2, 3), 0, 0}, {0, Rational(4, 3), 0}, {0, 0, Rational(4, 3)}}),
                 cl.energy_matrix.A);
        c.expect("type", ClassificationType::IV_empty, cl.type);
        summary.cases.push_back(c.finish());
    }
    {
        Case c("odd Jacobian rank", "z1 + conj(z1) + conj(z2)*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect_true("psi-regular", check_psi(c.f()).holds);
        c.expect("rank of complex Jacobian", 3, constant_rank(jacobian_complex(c.f())));
        c.expect("type", ClassificationType::IV_empty, cl.type);
        summary.cases.push_back(c.finish());
    }
    {
        Case c("identity in Hol_i and Hol_j, not Hol_k", "z1 + z2*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect_true("Hol_i", holomorphic(c.f(), 1, 0, 0));
        c.expect_true("Hol_j", holomorphic(c.f(), 0, 1, 0));
        c.expect_false("Hol_k", holomorphic(c.f(), 0, 0, 1));
        c.expect("type", ClassificationType::II_circle, cl.type);
        if (cl.structures.normal) c.expect("circle normal", IntegerDirection{0, 0, 1}, *cl.structures.normal);
        summary.cases.push_back(c.finish());
    }
    {
        Case c("Hol_{-p} = Hol_p", "conj(z1) + (z1 + conj(z2))*j");
        const QFunction id = QFunction::identity();
        for (const auto& w : {IntegerDirection{1, 0, 2}, IntegerDirection{0, 0, 1}, IntegerDirection{1, 1, 0},
                              IntegerDirection{2, -1, 3}}) {
            const ImaginaryDirection p{Rational(w[0]), Rational(w[1]), Rational(w[2])};
            const std::string tag = direction_text(w);
            c.expect_true("h agrees at +/-" + tag, check_holomorphic_p(c.f(), p) == check_holomorphic_p(c.f(), -p));
            c.expect_true("identity agrees at +/-" + tag, check_holomorphic_p(id, p) == check_holomorphic_p(id, -p));
        }
        summary.cases.push_back(c.finish());
    }
    {
        Case c("combinations of two structures", "z1 + z2*j");
        c.expect_true("Hol for (1,1,0)", holomorphic(c.f(), 1, 1, 0));
        c.expect_true("Hol for (3,-2,0)", holomorphic(c.f(), 3, -2, 0));
        summary.cases.push_back(c.finish());
    }
    {
        Case c("anti-holomorphic map, psi-regular", "conj(z1) + conj(z2)*j");
        const Classification cl = classify(c.f(), integrate);
        c.expect_true("psi-regular", check_psi(c.f()).holds);
        c.expect_true("Hol_j", holomorphic(c.f(), 0, 1, 0));
        c.expect_true("Hol_k", holomorphic(c.f(), 0, 0, 1));
        c.expect("type", ClassificationType::II_circle, cl.type);
        summary.cases.push_back(c.finish());
    }
    {
        Case c("anti-holomorphic map, not psi-regular", "conj(z1)");
        const Classification cl = classify(c.f(), integrate);
        c.expect_false("psi-regular", check_psi(c.f()).holds);
        c.expect("type", ClassificationType::not_psi_regular, cl.type);
        summary.cases.push_back(c.finish());
    }
    return summary;
}

}  // namespace hqreg
