#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "drinfeld/io.hpp"

namespace drinfeld::cli {

// One run of a pipeline: JSON result plus the counter snapshot taken around
// the computation.
struct RunReport {
    std::string command;
    std::string input_digest;
    nlohmann::json result;
    OpCounter counters;
    std::uint64_t wall_ns = 0;
    std::string summary; // human-readable, one or two lines

    nlohmann::json to_json() const;
};

enum class TorsionStrategy { Direct, FromPoints };
enum class BenchMethod { Naive, Multipoint, Both };

RunReport run_points(const nlohmann::json& module_spec);
RunReport run_kernel(const nlohmann::json& module_spec, const nlohmann::json& morphism_spec);
RunReport run_torsion(const nlohmann::json& module_spec, const std::string& a_text,
                      TorsionStrategy strategy);
RunReport run_rational_lcm(const nlohmann::json& module_spec);
RunReport run_is_rational(const nlohmann::json& module_spec, const std::string& a_text);

// CSV with header d,method,arith_ops,frobenius_apps,wall_ns; one row per
// method and per d doubling from dmin to dmax. Counters are deterministic
// for a fixed seed; wall_ns is not.
std::string run_bench_csv(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r,
                          BenchMethod method, std::uint64_t seed);
nlohmann::json run_bench_json(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r,
                              BenchMethod method, std::uint64_t seed);

// Oracle cross-checks; mismatches counts failed comparisons.
struct VerifyReport {
    RunReport report;
    unsigned mismatches = 0;
};
VerifyReport run_verify_spec(const nlohmann::json& module_spec);
VerifyReport run_verify_random(std::uint64_t q, unsigned d, unsigned r, std::uint64_t seed,
                               unsigned count);

// FNV-1a digest of the canonical serialized input.
std::string input_digest(const nlohmann::json& j);

// Exit codes: 2 ParseError, 3 NotAMorphism, 4 TooLarge, 1 anything else.
int exit_code_for(const Error& e);

} // namespace drinfeld::cli
