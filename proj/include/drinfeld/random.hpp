#pragma once

#include <memory>
#include <random>

#include "drinfeld/module.hpp"

namespace drinfeld {

// Deterministic instance generation for bench, verify and the test suites.

// Field with q = p^e elements extended to degree d, with lexicographically
// first irreducible moduli. Deterministic in (q, d).
FieldSpec standard_field_spec(std::uint64_t q, unsigned d);
std::shared_ptr<FieldCtx> make_standard_field(std::uint64_t q, unsigned d);

fq_t random_fq(const FqCtx& fq, std::mt19937_64& rng);
fq_t random_fq_nonzero(const FqCtx& fq, std::mt19937_64& rng);
FieldElement random_element(const FieldCtx& ctx, std::mt19937_64& rng);
FieldElement random_element_nonzero(const FieldCtx& ctx, std::mt19937_64& rng);
Poly random_poly(const FqCtx& fq, unsigned degree, std::mt19937_64& rng); // exact degree
Poly random_monic_poly(const FqCtx& fq, unsigned degree, std::mt19937_64& rng);
OrePoly random_ore_poly(const FieldCtx& ctx, unsigned degree, std::mt19937_64& rng); // exact degree

// gamma(T) uniform in K; phi_T with uniform coefficients, nonzero leading
// coefficient and constant coefficient forced to gamma(T).
DrinfeldModule random_drinfeld_module(const FieldCtx& ctx, unsigned rank, std::mt19937_64& rng);

} // namespace drinfeld
