#include <pybind11/pybind11.h>

#include "drinfeld/cli.hpp"

namespace py = pybind11;

namespace {

using namespace drinfeld;
using namespace drinfeld::cli;

// The python layer speaks JSON strings; the package wrapper turns them into
// dicts.
std::string points_json(const std::string& spec) {
    return run_points(parse_json_text(spec)).to_json().dump();
}

std::string kernel_json(const std::string& spec, const std::string& morphism) {
    return run_kernel(parse_json_text(spec), parse_json_text(morphism)).to_json().dump();
}

std::string torsion_json(const std::string& spec, const std::string& a, const std::string& strategy) {
    if (strategy != "direct" && strategy != "from-points")
        fail(Errc::ParseError, "strategy must be direct or from-points");
    return run_torsion(parse_json_text(spec), a,
                       strategy == "direct" ? TorsionStrategy::Direct : TorsionStrategy::FromPoints)
        .to_json()
        .dump();
}

std::string rational_lcm_json(const std::string& spec) {
    return run_rational_lcm(parse_json_text(spec)).to_json().dump();
}

std::string is_rational_json(const std::string& spec, const std::string& a) {
    return run_is_rational(parse_json_text(spec), a).to_json().dump();
}

std::string bench_csv(std::uint64_t q, unsigned dmin, unsigned dmax, unsigned r,
                      const std::string& method, std::uint64_t seed) {
    const BenchMethod bm = method == "naive"        ? BenchMethod::Naive
                           : method == "multipoint" ? BenchMethod::Multipoint
                                                    : BenchMethod::Both;
    return run_bench_csv(q, dmin, dmax, r, bm, seed);
}

py::tuple verify_random(std::uint64_t q, unsigned d, unsigned r, std::uint64_t seed,
                        unsigned count) {
    const VerifyReport rep = run_verify_random(q, d, r, seed, count);
    return py::make_tuple(rep.mismatches, rep.report.to_json().dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Invariant factors and Frobenius decompositions of Drinfeld module points";

    static py::exception<Error> exc(m, "DrinfeldError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    m.def("points_json", &points_json, py::arg("spec"));
    m.def("kernel_json", &kernel_json, py::arg("spec"), py::arg("morphism"));
    m.def("torsion_json", &torsion_json, py::arg("spec"), py::arg("a"),
          py::arg("strategy") = "direct");
    m.def("rational_lcm_json", &rational_lcm_json, py::arg("spec"));
    m.def("is_rational_json", &is_rational_json, py::arg("spec"), py::arg("a"));
    m.def("bench_csv", &bench_csv, py::arg("q"), py::arg("dmin"), py::arg("dmax"), py::arg("r"),
          py::arg("method") = "both", py::arg("seed") = 0);
    m.def("verify_random", &verify_random, py::arg("q"), py::arg("d"), py::arg("r"),
          py::arg("seed") = 0, py::arg("count") = 10);
}
