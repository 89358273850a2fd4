#pragma once

#include <random>

#include "drinfeld/random.hpp"

namespace test_helpers {

using namespace drinfeld;

// F_4 = F_2[z]/(z^2+z+1) over F_2.
inline FieldSpec f4_spec() {
    FieldSpec s;
    s.p = 2;
    s.e = 1;
    s.fq_modulus = {0, 1};
    s.d = 2;
    s.k_modulus = {{1}, {1}, {1}};
    return s;
}

// F_3 as a degree-1 extension of itself.
inline FieldSpec f3_spec() {
    FieldSpec s;
    s.p = 3;
    s.e = 1;
    s.fq_modulus = {0, 1};
    s.d = 1;
    s.k_modulus = {{0}, {1}};
    return s;
}

inline Poly poly_of(const FqCtx& fq, std::initializer_list<fq_t> coeffs) {
    return Poly(fq, std::vector<fq_t>(coeffs));
}

inline OrePoly ore_of(const FieldCtx& ctx, std::initializer_list<std::vector<fq_t>> coeffs) {
    std::vector<FieldElement> c;
    for (const auto& v : coeffs) c.push_back(ctx.from_coeffs(v));
    return OrePoly(ctx, std::move(c));
}

// All elements of K, enumerated; requires q^d small.
inline std::vector<FieldElement> all_elements(const FieldCtx& ctx) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < ctx.d(); ++i) size *= ctx.q();
    std::vector<FieldElement> out;
    out.reserve(size);
    for (std::uint64_t n = 0; n < size; ++n) {
        std::vector<fq_t> c(ctx.d());
        std::uint64_t v = n;
        for (unsigned i = 0; i < ctx.d(); ++i) {
            c[i] = v % ctx.q();
            v /= ctx.q();
        }
        out.push_back(ctx.from_coeffs(std::move(c)));
    }
    return out;
}

} // namespace test_helpers
