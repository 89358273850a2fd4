#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "drinfeld/cli.hpp"

namespace {

using drinfeld::Error;
using namespace drinfeld::cli;

void emit(const RunReport& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    std::cerr << rep.summary << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant factors and Frobenius decompositions of Drinfeld module points"};
    app.require_subcommand(1);

    std::string input_path, morphism_path, a_text, strategy = "direct", method = "both";
    std::uint64_t q = 2, seed = 0;
    unsigned d = 2, r = 1, dmin = 8, dmax = 64, count = 10;
    bool want_json = false, want_csv = false;

    auto* points = app.add_subcommand("points", "Invariants of the module of rational points");
    points->add_option("--input", input_path, "module spec JSON file")->required();

    auto* kernel = app.add_subcommand("kernel", "Invariants of the kernel of a morphism");
    kernel->add_option("--input", input_path, "module spec JSON file")->required();
    kernel->add_option("--morphism", morphism_path, "morphism JSON file")->required();

    auto* torsion = app.add_subcommand("torsion", "Invariants of the a-torsion");
    torsion->add_option("--input", input_path, "module spec JSON file")->required();
    torsion->add_option("--a", a_text, "polynomial, e.g. [0,1] for T")->required();
    torsion->add_option("--strategy", strategy, "direct|from-points")
        ->check(CLI::IsMember({"direct", "from-points"}));

    auto* rational = app.add_subcommand("rational-lcm", "Rationality invariant g and p-power torsion");
    rational->add_option("--input", input_path, "module spec JSON file")->required();

    auto* isr = app.add_subcommand("is-rational", "Is the a-torsion rational?");
    isr->add_option("--input", input_path, "module spec JSON file")->required();
    isr->add_option("--a", a_text, "polynomial, e.g. [0,1] for T")->required();

    auto* bench = app.add_subcommand("bench", "Operation counts of the two ore_matrix paths");
    bench->add_option("--q", q, "field size (prime power)");
    bench->add_option("--dmin", dmin, "smallest extension degree");
    bench->add_option("--dmax", dmax, "largest extension degree (d doubles)");
    bench->add_option("--r", r, "rank of the random modules");
    bench->add_option("--method", method, "naive|multipoint|both")
        ->check(CLI::IsMember({"naive", "multipoint", "both"}));
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_flag("--json", want_json, "emit JSON rows instead of CSV");
    bench->add_flag("--csv", want_csv, "emit CSV (default)");

    auto* verify = app.add_subcommand("verify", "Cross-check against the enumeration oracle");
    verify->add_option("--input", input_path, "module spec JSON file (single instance)");
    verify->add_option("--q", q, "field size for random instances");
    verify->add_option("--d", d, "extension degree for random instances");
    verify->add_option("--r", r, "rank for random instances");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--count", count, "number of random instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (points->parsed()) {
            emit(run_points(drinfeld::load_json_file(input_path)));
        } else if (kernel->parsed()) {
            emit(run_kernel(drinfeld::load_json_file(input_path),
                            drinfeld::load_json_file(morphism_path)));
        } else if (torsion->parsed()) {
            emit(run_torsion(drinfeld::load_json_file(input_path), a_text,
                             strategy == "direct" ? TorsionStrategy::Direct
                                                  : TorsionStrategy::FromPoints));
        } else if (rational->parsed()) {
            emit(run_rational_lcm(drinfeld::load_json_file(input_path)));
        } else if (isr->parsed()) {
            emit(run_is_rational(drinfeld::load_json_file(input_path), a_text));
        } else if (bench->parsed()) {
            const BenchMethod bm = method == "naive"        ? BenchMethod::Naive
                                   : method == "multipoint" ? BenchMethod::Multipoint
                                                            : BenchMethod::Both;
            if (want_json)
                std::cout << run_bench_json(q, dmin, dmax, r, bm, seed).dump(2) << "\n";
            else
                std::cout << run_bench_csv(q, dmin, dmax, r, bm, seed);
        } else if (verify->parsed()) {
            const VerifyReport rep = input_path.empty()
                                         ? run_verify_random(q, d, r, seed, count)
                                         : run_verify_spec(drinfeld::load_json_file(input_path));
            emit(rep.report);
            return rep.mismatches == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
