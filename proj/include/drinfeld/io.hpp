#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "drinfeld/module.hpp"

namespace drinfeld {

// JSON conventions: K elements serialize as nested ascending coefficient
// arrays [[f_p ints], ...] (always nested); polynomials over F_q use plain
// integers when e = 1 and nested arrays otherwise. Parsing accepts both.

nlohmann::json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldCtx& ctx, const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& a);
Poly poly_from_json(const FqCtx& fq, const nlohmann::json& j);

nlohmann::json ore_to_json(const OrePoly& f);
OrePoly ore_from_json(const FieldCtx& ctx, const nlohmann::json& j);

// {"field": <spec>, "gamma_T": <element>, "phi_T": [<element>, ...]}.
// gamma_T must equal the constant coefficient of phi_T.
struct ParsedModule {
    std::shared_ptr<FieldCtx> field;
    std::unique_ptr<DrinfeldModule> module;
};
ParsedModule module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const DrinfeldModule& phi);

// {"u": [<element>, ...]}
OrePoly morphism_u_from_json(const FieldCtx& ctx, const nlohmann::json& j);

nlohmann::json structure_to_json(const ModuleStructure& s);

// Human-readable forms for the CLI summary.
std::string poly_to_string(const Poly& a);
std::string element_to_string(const FieldElement& x);
std::string structure_to_string(const ModuleStructure& s); // "(1, 0)" when trivial

// Text form of a polynomial over F_q: bracketed ascending coefficient list,
// e.g. "[0,1,1]" for T^2 + T over F_2 (nested arrays when e > 1).
Poly poly_from_text(const FqCtx& fq, const std::string& text);

nlohmann::json parse_json_text(const std::string& text); // ParseError on bad input
nlohmann::json load_json_file(const std::string& path);

} // namespace drinfeld
