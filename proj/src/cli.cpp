#include "drinfeld/cli.hpp"

#include <chrono>
#include <sstream>

#include "drinfeld/oracle.hpp"
#include "drinfeld/motive.hpp"
#include "drinfeld/random.hpp"

namespace drinfeld::cli {

using nlohmann::json;

namespace {

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

struct Timer {
    std::uint64_t start = now_ns();
    std::uint64_t elapsed() const { return now_ns() - start; }
};

} // namespace

std::string input_digest(const json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

json RunReport::to_json() const {
    json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = result;
    j["counters"] = {{"arith_ops", counters.arith_ops}, {"frobenius_apps", counters.frobenius_apps}};
    j["wall_ns"] = wall_ns;
    return j;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::ParseError: return 2;
    case Errc::NotAMorphism: return 3;
    case Errc::TooLarge: return 4;
    default: return 1;
    }
}

RunReport run_points(const json& module_spec) {
    RunReport rep;
    rep.command = "points";
    rep.input_digest = input_digest(module_spec);
    const ParsedModule pm = module_from_json(module_spec);
    pm.field->reset_counters();
    const Timer timer;
    const ModuleStructure s = module_of_points_invariants(*pm.module);
    rep.wall_ns = timer.elapsed();
    rep.counters = pm.field->counters();
    rep.result = structure_to_json(s);
    rep.summary = "points: " + structure_to_string(s);
    return rep;
}

RunReport run_kernel(const json& module_spec, const json& morphism_spec) {
    RunReport rep;
    rep.command = "kernel";
    json combined;
    combined["module"] = module_spec;
    combined["morphism"] = morphism_spec;
    rep.input_digest = input_digest(combined);
    const ParsedModule pm = module_from_json(module_spec);
    const OrePoly u = morphism_u_from_json(*pm.field, morphism_spec);
    const Morphism m = morphism_new(*pm.module, u);
    pm.field->reset_counters();
    const Timer timer;
    const ModuleStructure s = morphism_kernel_invariants(m);
    rep.wall_ns = timer.elapsed();
    rep.counters = pm.field->counters();
    rep.result = structure_to_json(s);
    rep.summary = "kernel: " + structure_to_string(s);
    return rep;
}

RunReport run_torsion(const json& module_spec, const std::string& a_text,
                      TorsionStrategy strategy) {
    RunReport rep;
    rep.command = "torsion";
    json combined;
    combined["module"] = module_spec;
    combined["a"] = a_text;
    combined["strategy"] = strategy == TorsionStrategy::Direct ? "direct" : "from-points";
    rep.input_digest = input_digest(combined);
    const ParsedModule pm = module_from_json(module_spec);
    const Poly a = poly_from_text(pm.field->fq(), a_text);
    if (a.is_zero()) fail(Errc::ZeroInput, "torsion for a = 0");
    pm.field->reset_counters();
    const Timer timer;
    ModuleStructure s;
    if (strategy == TorsionStrategy::Direct) {
        s = morphism_kernel_invariants(morphism_new(*pm.module, phi_eval(*pm.module, a)));
    } else {
        const ModuleStructure pts = module_of_points_invariants(*pm.module);
        s = torsion_from_points(*pm.module, a, pts);
    }
    rep.wall_ns = timer.elapsed();
    rep.counters = pm.field->counters();
    rep.result = structure_to_json(s);
    rep.result["a"] = poly_to_json(a);
    rep.summary = "torsion[" + poly_to_string(a) + "]: " + structure_to_string(s);
    return rep;
}

RunReport run_rational_lcm(const json& module_spec) {
    RunReport rep;
    rep.command = "rational-lcm";
    rep.input_digest = input_digest(module_spec);
    const ParsedModule pm = module_from_json(module_spec);
    pm.field->reset_counters();
    const Timer timer;
    const Poly g = rational_lcm(*pm.module);
    const ModuleStructure pts = module_of_points_invariants(*pm.module);
    const unsigned s = max_rational_p_power(*pm.module, pts);
    rep.wall_ns = timer.elapsed();
    rep.counters = pm.field->counters();
    rep.result["g"] = poly_to_json(g);
    rep.result["p"] = poly_to_json(pm.module->char_p());
    rep.result["s"] = s;
    rep.summary = "rational-lcm: g = " + poly_to_string(g) +
                  ", p = " + poly_to_string(pm.module->char_p()) + ", s = " + std::to_string(s);
    return rep;
}

RunReport run_is_rational(const json& module_spec, const std::string& a_text) {
    RunReport rep;
    rep.command = "is-rational";
    json combined;
    combined["module"] = module_spec;
    combined["a"] = a_text;
    rep.input_digest = input_digest(combined);
    const ParsedModule pm = module_from_json(module_spec);
    const Poly a = poly_from_text(pm.field->fq(), a_text);
    pm.field->reset_counters();
    const Timer timer;
    const bool rational = is_torsion_rational(*pm.module, a);
    rep.wall_ns = timer.elapsed();
    rep.counters = pm.field->counters();
    rep.result["a"] = poly_to_json(a);
    rep.result["rational"] = rational;
    rep.summary = "is-rational[" + poly_to_string(a) + "]: " + (rational ? "true" : "false");
    return rep;
}

namespace {

struct BenchRow {
    unsigned d;
    std::string method;
    OpCounter counters;
    std::uint64_t wall_ns;
};

BenchRow bench_one(std::uint64_t q, unsigned d, unsigned r, BenchMethod method,
                   std::uint64_t seed) {
    const std::shared_ptr<FieldCtx> field = make_standard_field(q, d);
    std::seed_seq seq{seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    const DrinfeldModule phi = random_drinfeld_module(*field, r, rng);

    BenchRow row;
    row.d = d;
    row.method = method == BenchMethod::Naive ? "naive" : "multipoint";
    field->reset_counters();
    const Timer timer;
    const MatFq m = method == BenchMethod::Naive ? ore_matrix_naive(phi.phi_T())
                                                 : ore_matrix(phi.phi_T());
    (void)m;
    row.wall_ns = timer.elapsed();
    row.counters = field->counters();
    return row;
}

std::vector<BenchRow> bench_rows(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r,
                                 BenchMethod method, std::uint64_t seed) {
    if (dmin == 0 || dmax < dmin) fail(Errc::DegreeMismatch, "need 1 <= dmin <= dmax");
    std::vector<BenchRow> rows;
    for (unsigned d = dmin; d <= dmax; d *= 2) {
        if (method == BenchMethod::Naive || method == BenchMethod::Both)
            rows.push_back(bench_one(q, d, r, BenchMethod::Naive, seed));
        if (method == BenchMethod::Multipoint || method == BenchMethod::Both)
            rows.push_back(bench_one(q, d, r, BenchMethod::Multipoint, seed));
        if (d > dmax / 2) break; // avoid overflow on d *= 2
    }
    return rows;
}

} // namespace

std::string run_bench_csv(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r,
                          BenchMethod method, std::uint64_t seed) {
    std::ostringstream os;
    os << "d,method,arith_ops,frobenius_apps,wall_ns\n";
    for (const BenchRow& row : bench_rows(q, dmin, dmax, r, method, seed))
        os << row.d << "," << row.method << "," << row.counters.arith_ops << ","
           << row.counters.frobenius_apps << "," << row.wall_ns << "\n";
    return os.str();
}

json run_bench_json(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r, BenchMethod method,
                    std::uint64_t seed) {
    json rows = json::array();
    for (const BenchRow& row : bench_rows(q, dmin, dmax, r, method, seed)) {
        rows.push_back({{"d", row.d},
                        {"method", row.method},
                        {"arith_ops", row.counters.arith_ops},
                        {"frobenius_apps", row.counters.frobenius_apps},
                        {"wall_ns", row.wall_ns}});
    }
    return rows;
}

namespace {

// One instance check: main pipeline vs enumeration oracle.
bool verify_instance(const DrinfeldModule& phi, const Morphism& m, json& detail) {
    const ModuleStructure main = morphism_kernel_invariants(m);
    const OrePoly& u = m.u();
    const std::vector<Poly> brute = brute_module_structure(
        phi, [&](const FieldElement& x) { return u.is_zero() || oeval(u, x).is_zero(); });
    bool ok = main.factors.size() == brute.size();
    if (ok)
        for (std::size_t i = 0; i < brute.size(); ++i)
            if (main.factors[i] != brute[i]) ok = false;
    // Annihilator contract of the returned generators.
    if (ok)
        for (std::size_t i = 0; i < main.factors.size(); ++i)
            if (brute_annihilator(phi, main.generators[i]) != main.factors[i]) ok = false;
    json fac = json::array();
    for (const auto& f : main.factors) fac.push_back(poly_to_json(f));
    json bru = json::array();
    for (const auto& f : brute) bru.push_back(poly_to_json(f));
    detail["factors"] = fac;
    detail["oracle_factors"] = bru;
    detail["match"] = ok;
    return ok;
}

} // namespace

VerifyReport run_verify_spec(const json& module_spec) {
    VerifyReport out;
    out.report.command = "verify";
    out.report.input_digest = input_digest(module_spec);
    const ParsedModule pm = module_from_json(module_spec);
    pm.field->reset_counters();
    const Timer timer;
    json detail;
    const bool ok = verify_instance(*pm.module, zero_morphism(*pm.module), detail);
    out.mismatches = ok ? 0 : 1;
    out.report.wall_ns = timer.elapsed();
    out.report.counters = pm.field->counters();
    out.report.result = {{"instances", 1}, {"mismatches", out.mismatches}, {"details", json::array({detail})}};
    out.report.summary = "verify: " + std::string(ok ? "ok" : "MISMATCH");
    return out;
}

VerifyReport run_verify_random(std::uint64_t q, unsigned d, unsigned r, std::uint64_t seed,
                               unsigned count) {
    VerifyReport out;
    out.report.command = "verify";
    json params = {{"q", q}, {"d", d}, {"r", r}, {"seed", seed}, {"count", count}};
    out.report.input_digest = input_digest(params);
    const std::shared_ptr<FieldCtx> field = make_standard_field(q, d);
    field_size_checked(*field);
    std::seed_seq seq{seed, static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(d),
                      static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);

    const Timer timer;
    json details = json::array();
    unsigned mismatches = 0;
    for (unsigned i = 0; i < count; ++i) {
        const DrinfeldModule phi = random_drinfeld_module(*field, r, rng);
        // Cycle morphisms: zero, a torsion endomorphism phi_a, and a twisted
        // tau^k phi_a (validated mechanically).
        Morphism m = zero_morphism(phi);
        const unsigned kind = i % 3;
        if (kind == 1) {
            const Poly a = random_monic_poly(field->fq(), 1 + i % 3, rng);
            m = morphism_new(phi, phi_eval(phi, a));
        } else if (kind == 2) {
            const Poly a = random_monic_poly(field->fq(), 1 + i % 2, rng);
            const OrePoly u = omul(OrePoly::tau_power(*field, 1 + i % d), phi_eval(phi, a));
            m = morphism_new(phi, u);
        }
        json detail;
        detail["instance"] = i;
        if (!verify_instance(phi, m, detail)) ++mismatches;
        details.push_back(std::move(detail));
    }
    out.mismatches = mismatches;
    out.report.wall_ns = timer.elapsed();
    out.report.counters = field->counters();
    out.report.result = {{"instances", count}, {"mismatches", mismatches}, {"details", details}};
    out.report.summary =
        "verify: " + std::to_string(count - mismatches) + "/" + std::to_string(count) + " ok";
    return out;
}

} // namespace drinfeld::cli
