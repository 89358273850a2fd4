#include "drinfeld/io.hpp"

#include <fstream>
#include <sstream>

namespace drinfeld {

using nlohmann::json;

namespace {

std::uint64_t parse_uint(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(Errc::ParseError, std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

// An F_q coefficient: plain integer (embedded through F_p) or an array of
// F_p digits.
fq_t parse_fq(const FqCtx& fq, const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return fq.from_int(parse_uint(j, "coefficient"));
    if (!j.is_array()) fail(Errc::ParseError, "F_q coefficient must be an integer or an array");
    if (j.size() > fq.e()) fail(Errc::ParseError, "F_q coefficient has too many digits");
    std::vector<std::uint64_t> digits;
    digits.reserve(j.size());
    for (const auto& digit : j) digits.push_back(parse_uint(digit, "F_p digit"));
    return fq.encode(digits);
}

json fq_to_json(const FqCtx& fq, fq_t c) { return json(fq.decode(c)); }

} // namespace

json field_spec_to_json(const FieldSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["e"] = spec.e;
    j["fq_modulus"] = spec.fq_modulus;
    j["d"] = spec.d;
    j["k_modulus"] = spec.k_modulus;
    return j;
}

FieldSpec field_spec_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::ParseError, "field spec must be an object");
    for (const char* key : {"p", "e", "fq_modulus", "d", "k_modulus"})
        if (!j.contains(key)) fail(Errc::ParseError, std::string("field spec missing \"") + key + "\"");
    FieldSpec spec;
    spec.p = parse_uint(j["p"], "p");
    spec.e = static_cast<unsigned>(parse_uint(j["e"], "e"));
    if (!j["fq_modulus"].is_array()) fail(Errc::ParseError, "fq_modulus must be an array");
    for (const auto& c : j["fq_modulus"]) spec.fq_modulus.push_back(parse_uint(c, "fq_modulus entry"));
    spec.d = static_cast<unsigned>(parse_uint(j["d"], "d"));
    if (!j["k_modulus"].is_array()) fail(Errc::ParseError, "k_modulus must be an array");
    for (const auto& c : j["k_modulus"]) {
        if (c.is_array()) {
            std::vector<std::uint64_t> digits;
            for (const auto& digit : c) digits.push_back(parse_uint(digit, "k_modulus digit"));
            spec.k_modulus.push_back(std::move(digits));
        } else {
            spec.k_modulus.push_back({parse_uint(c, "k_modulus entry")});
        }
    }
    return spec;
}

json element_to_json(const FieldElement& x) {
    const FqCtx& fq = x.ctx().fq();
    json out = json::array();
    for (fq_t c : x.coeffs()) out.push_back(fq_to_json(fq, c));
    return out;
}

FieldElement element_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "K element must be an array");
    if (j.size() > ctx.d()) fail(Errc::ParseError, "K element has too many coordinates");
    std::vector<fq_t> c;
    c.reserve(j.size());
    for (const auto& entry : j) c.push_back(parse_fq(ctx.fq(), entry));
    return ctx.from_coeffs(std::move(c));
}

json poly_to_json(const Poly& a) {
    const FqCtx& fq = a.fq();
    json out = json::array();
    for (fq_t c : a.coeffs()) {
        if (fq.e() == 1) out.push_back(c);
        else out.push_back(fq_to_json(fq, c));
    }
    return out;
}

Poly poly_from_json(const FqCtx& fq, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "polynomial must be an array");
    std::vector<fq_t> c;
    c.reserve(j.size());
    for (const auto& entry : j) c.push_back(parse_fq(fq, entry));
    return Poly(fq, std::move(c));
}

json ore_to_json(const OrePoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(element_to_json(c));
    return out;
}

OrePoly ore_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "Ore polynomial must be an array");
    std::vector<FieldElement> c;
    c.reserve(j.size());
    for (const auto& entry : j) c.push_back(element_from_json(ctx, entry));
    return OrePoly(ctx, std::move(c));
}

ParsedModule module_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::ParseError, "module spec must be an object");
    for (const char* key : {"field", "gamma_T", "phi_T"})
        if (!j.contains(key)) fail(Errc::ParseError, std::string("module spec missing \"") + key + "\"");
    ParsedModule out;
    out.field = std::make_shared<FieldCtx>(field_spec_from_json(j["field"]));
    const OrePoly phi_t = ore_from_json(*out.field, j["phi_T"]);
    const FieldElement gamma = element_from_json(*out.field, j["gamma_T"]);
    if (phi_t.is_zero() || phi_t.coeff(0) != gamma)
        fail(Errc::ParseError, "gamma_T must equal the constant coefficient of phi_T");
    out.module = std::make_unique<DrinfeldModule>(*out.field, phi_t);
    return out;
}

json module_to_json(const DrinfeldModule& phi) {
    json j;
    j["field"] = field_spec_to_json(phi.ctx().spec());
    j["gamma_T"] = element_to_json(phi.gamma_T());
    j["phi_T"] = ore_to_json(phi.phi_T());
    return j;
}

OrePoly morphism_u_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_object() || !j.contains("u")) fail(Errc::ParseError, "morphism spec missing \"u\"");
    return ore_from_json(ctx, j["u"]);
}

json structure_to_json(const ModuleStructure& s) {
    json j;
    j["factors"] = json::array();
    for (const auto& f : s.factors) j["factors"].push_back(poly_to_json(f));
    j["generators"] = json::array();
    for (const auto& g : s.generators) j["generators"].push_back(element_to_json(g));
    return j;
}

namespace {

std::string term_to_string(const std::string& var, std::uint64_t coeff_enc, std::size_t deg,
                           bool coeff_is_one) {
    std::ostringstream os;
    if (deg == 0) {
        os << coeff_enc;
        return os.str();
    }
    if (!coeff_is_one) os << coeff_enc << "*";
    os << var;
    if (deg > 1) os << "^" << deg;
    return os.str();
}

} // namespace

std::string poly_to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const fq_t c = a.coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << term_to_string("T", c, i, c == a.fq().one());
        first = false;
    }
    return os.str();
}

std::string element_to_string(const FieldElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = x.coeffs().size(); i-- > 0;) {
        const fq_t c = x.coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << term_to_string("z", c, i, c == x.ctx().fq().one());
        first = false;
    }
    return os.str();
}

std::string structure_to_string(const ModuleStructure& s) {
    if (s.factors.empty()) return "(1, 0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) os << ", ";
        os << poly_to_string(s.factors[i]);
    }
    os << "), (";
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        if (i) os << ", ";
        os << element_to_string(s.generators[i]);
    }
    os << ")";
    return os.str();
}

Poly poly_from_text(const FqCtx& fq, const std::string& text) {
    return poly_from_json(fq, parse_json_text(text));
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

} // namespace drinfeld
