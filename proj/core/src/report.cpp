#include "hqreg/report.hpp"

#include "hqreg/expression.hpp"
#include "hqreg/regularity.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace hqreg {

using nlohmann::json;

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
    auto dirs_equal = [](const StructureSet& x, const StructureSet& y) {
        return x.shape == y.shape && x.directions == y.directions && x.normal == y.normal;
    };
    return a.input == b.input && a.normal_form == b.normal_form && a.domain == b.domain &&
           a.fueter_regular == b.fueter_regular && a.psi_regular == b.psi_regular &&
           a.q_holomorphic == b.q_holomorphic && a.harmonic == b.harmonic && a.energy == b.energy && a.A == b.A &&
           a.trace == b.trace && a.symmetric == b.symmetric && a.char_poly_shifted == b.char_poly_shifted &&
           a.type == b.type && dirs_equal(a.structures, b.structures) &&
           a.directions_verified == b.directions_verified && a.invariant_K == b.invariant_K &&
           a.invariant_I == b.invariant_I && a.identity_residual == b.identity_residual &&
           a.jacobian_rank == b.jacobian_rank;
}

AnalysisReport analyze(const QFunction& f, const DomainSpec& domain, std::string input) {
    const Integrator integrate = make_integrator(domain);
    AnalysisReport r;
    r.normal_form = to_string(f);
    r.input = input.empty() ? r.normal_form : std::move(input);
    r.domain = domain.to_string();

    const RegularityVerdict v = check_regularity(f);
    r.fueter_regular = v.fueter_regular;
    r.psi_regular = v.psi_regular;
    r.harmonic = v.harmonic;
    r.q_holomorphic = check_q_holomorphic(f);

    const Classification c = classify(f, integrate);
    const EnergyMatrix& em = c.energy_matrix;
    r.energy = em.energy;
    r.A = em.A;
    r.trace = em.trace;
    r.symmetric = em.is_symmetric();
    r.char_poly_shifted = em.char_poly_shifted;
    r.type = c.type;
    r.structures = c.structures;
    r.directions_verified = c.directions_verified;

    r.invariant_K = -em.trace;
    r.invariant_I = invariant_I(f, integrate);
    r.identity_residual = r.energy + r.invariant_K - r.invariant_I / 4;

    if (f.degree() <= 1) r.jacobian_rank = constant_rank(jacobian_complex(f));
    return r;
}

AnalysisReport analyze(std::string_view text, const DomainSpec& domain) {
    return analyze(parse_function(text), domain, std::string(text));
}

namespace {

json direction_json(const IntegerDirection& d) { return json::array({d[0].get_str(), d[1].get_str(), d[2].get_str()}); }

IntegerDirection direction_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("direction must have three entries");
    return {mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()), mpz_class(j[2].get<std::string>())};
}

Rational rational_from(const json& j) { return parse_rational(j.get<std::string>()); }

std::string approx(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(12) << r.get_d();
    return os.str();
}

StructureSet::Shape shape_from(const std::string& s) {
    for (auto shape : {StructureSet::Shape::empty, StructureSet::Shape::antipodal_pair, StructureSet::Shape::circle,
                       StructureSet::Shape::sphere})
        if (s == to_string(shape)) return shape;
    throw std::invalid_argument("unknown structure-set shape: " + s);
}

}  // namespace

std::string to_json(const AnalysisReport& r, const ReportOptions& options) {
    json A = json::array();
    for (std::size_t a = 0; a < 3; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < 3; ++b) row.push_back(to_string(r.A(a, b)));
        A.push_back(row);
    }
    json dirs = json::array();
    for (const auto& d : r.structures.directions) dirs.push_back(direction_json(d));

    json out = {
        {"schema_version", AnalysisReport::kSchemaVersion},
        {"input", r.input},
        {"normal_form", r.normal_form},
        {"domain", r.domain},
        {"regularity",
         {{"fueter", r.fueter_regular}, {"psi", r.psi_regular}, {"q_holomorphic", r.q_holomorphic},
          {"harmonic", r.harmonic}}},
        {"energy", to_string(r.energy)},
        {"matrix_A", A},
        {"trace", to_string(r.trace)},
        {"symmetric", r.symmetric},
        {"shifted_determinant", to_string(r.shifted_determinant())},
        {"char_poly_shifted",
         {to_string(r.char_poly_shifted[0]), to_string(r.char_poly_shifted[1]), to_string(r.char_poly_shifted[2]),
          to_string(r.char_poly_shifted[3])}},
        {"classification",
         {{"type", to_string(r.type)},
          {"structure_set",
           {{"shape", to_string(r.structures.shape)},
            {"directions", dirs},
            {"normal", r.structures.normal ? direction_json(*r.structures.normal) : json(nullptr)},
            {"description", r.structures.describe()}}},
          {"directions_verified", r.directions_verified}}},
        {"invariants",
         {{"K", to_string(r.invariant_K)},
          {"I", to_string(r.invariant_I)},
          {"identity_residual", to_string(r.identity_residual)}}},
        {"jacobian_rank", r.jacobian_rank ? json(*r.jacobian_rank) : json(nullptr)},
    };
    if (options.approximations) {
        json A_approx = json::array();
        for (std::size_t a = 0; a < 3; ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < 3; ++b) row.push_back(approx(r.A(a, b)));
            A_approx.push_back(row);
        }
        out["approximations"] = {{"note", "decimal approximations; exact values are authoritative"},
                                 {"energy", approx(r.energy)},
                                 {"matrix_A", A_approx},
                                 {"shifted_determinant", approx(r.shifted_determinant())}};
    }
    return out.dump(2);
}

AnalysisReport report_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        if (j.at("schema_version").get<int>() != AnalysisReport::kSchemaVersion)
            throw std::invalid_argument("unsupported schema_version");
        AnalysisReport r;
        r.input = j.at("input").get<std::string>();
        r.normal_form = j.at("normal_form").get<std::string>();
        r.domain = j.at("domain").get<std::string>();
        const json& reg = j.at("regularity");
        r.fueter_regular = reg.at("fueter").get<bool>();
        r.psi_regular = reg.at("psi").get<bool>();
        r.q_holomorphic = reg.at("q_holomorphic").get<bool>();
        r.harmonic = reg.at("harmonic").get<bool>();
        r.energy = rational_from(j.at("energy"));
        const json& A = j.at("matrix_A");
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) r.A(a, b) = rational_from(A.at(a).at(b));
        r.trace = rational_from(j.at("trace"));
        r.symmetric = j.at("symmetric").get<bool>();
        for (std::size_t n = 0; n < 4; ++n) r.char_poly_shifted[n] = rational_from(j.at("char_poly_shifted").at(n));
        if (r.char_poly_shifted[0] != rational_from(j.at("shifted_determinant")))
            throw std::invalid_argument("shifted_determinant disagrees with char_poly_shifted");
        const json& c = j.at("classification");
        r.type = classification_type_from_string(c.at("type").get<std::string>());
        const json& s = c.at("structure_set");
        r.structures.shape = shape_from(s.at("shape").get<std::string>());
        for (const auto& d : s.at("directions")) r.structures.directions.push_back(direction_from(d));
        if (!s.at("normal").is_null()) r.structures.normal = direction_from(s.at("normal"));
        r.directions_verified = c.at("directions_verified").get<bool>();
        const json& inv = j.at("invariants");
        r.invariant_K = rational_from(inv.at("K"));
        r.invariant_I = rational_from(inv.at("I"));
        r.identity_residual = rational_from(inv.at("identity_residual"));
        if (!j.at("jacobian_rank").is_null()) r.jacobian_rank = j.at("jacobian_rank").get<int>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const AnalysisReport& r, const ReportOptions& options) {
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "function      " << r.input << "\n";
    os << "normal form   " << r.normal_form << "\n";
    os << "domain        " << r.domain << "\n";
    os << "regularity    fueter: " << yes(r.fueter_regular) << "  psi: " << yes(r.psi_regular)
       << "  q-holomorphic: " << yes(r.q_holomorphic) << "  harmonic: " << yes(r.harmonic) << "\n";
    os << "energy        " << to_string(r.energy);
    if (options.approximations) os << "  (~" << approx(r.energy) << ")";
    os << "\nmatrix A\n";
    for (std::size_t a = 0; a < 3; ++a) {
        os << "  [";
        for (std::size_t b = 0; b < 3; ++b) os << (b ? ", " : "") << std::setw(8) << to_string(r.A(a, b));
        os << " ]\n";
    }
    os << "tr A          " << to_string(r.trace) << (r.symmetric ? "  (symmetric)" : "  (not symmetric)") << "\n";
    os << "det(A - trA I) " << to_string(r.shifted_determinant());
    if (options.approximations) os << "  (~" << approx(r.shifted_determinant()) << ")";
    os << "\ntype          " << to_string(r.type) << "\n";
    if (r.type != ClassificationType::not_psi_regular) {
        os << "J(f)          " << r.structures.describe() << "\n";
        os << "verified      " << yes(r.directions_verified) << "\n";
    }
    os << "K             " << to_string(r.invariant_K) << "\n";
    os << "I             " << to_string(r.invariant_I) << "\n";
    os << "E + K - I/4   " << to_string(r.identity_residual) << "\n";
    if (r.jacobian_rank) os << "rank Jc       " << *r.jacobian_rank << "\n";
    return os.str();
}

}  // namespace hqreg
