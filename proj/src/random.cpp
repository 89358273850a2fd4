#include "drinfeld/random.hpp"

namespace drinfeld {

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return f;
    return n;
}

} // namespace

FieldSpec standard_field_spec(std::uint64_t q, unsigned d) {
    if (q < 2) fail(Errc::NotPrime, "q must be a prime power >= 2");
    const std::uint64_t p = smallest_prime_factor(q);
    unsigned e = 0;
    std::uint64_t v = q;
    while (v > 1) {
        if (v % p != 0) fail(Errc::NotPrime, "q is not a prime power");
        v /= p;
        ++e;
    }
    FieldSpec spec;
    spec.p = p;
    spec.e = e;
    if (e == 1) {
        spec.fq_modulus = {0, 1};
    } else {
        FqCtx prime_field(p, {0, 1});
        spec.fq_modulus = first_irreducible(prime_field, e).coeffs();
    }
    spec.d = d;
    FqCtx fq(p, spec.fq_modulus);
    const Poly kmod = d == 1 ? Poly::monomial(fq, 1) : first_irreducible(fq, d);
    for (unsigned i = 0; i <= d; ++i) spec.k_modulus.push_back(fq.decode(kmod.coeff(i)));
    return spec;
}

std::shared_ptr<FieldCtx> make_standard_field(std::uint64_t q, unsigned d) {
    return std::make_shared<FieldCtx>(standard_field_spec(q, d));
}

fq_t random_fq(const FqCtx& fq, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, fq.q() - 1);
    return dist(rng);
}

fq_t random_fq_nonzero(const FqCtx& fq, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, fq.q() - 1);
    return dist(rng);
}

FieldElement random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::vector<fq_t> c(ctx.d());
    for (auto& x : c) x = random_fq(ctx.fq(), rng);
    return ctx.from_coeffs(std::move(c));
}

FieldElement random_element_nonzero(const FieldCtx& ctx, std::mt19937_64& rng) {
    while (true) {
        FieldElement x = random_element(ctx, rng);
        if (!x.is_zero()) return x;
    }
}

Poly random_poly(const FqCtx& fq, unsigned degree, std::mt19937_64& rng) {
    std::vector<fq_t> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = random_fq(fq, rng);
    c[degree] = random_fq_nonzero(fq, rng);
    return Poly(fq, std::move(c));
}

Poly random_monic_poly(const FqCtx& fq, unsigned degree, std::mt19937_64& rng) {
    std::vector<fq_t> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = random_fq(fq, rng);
    c[degree] = fq.one();
    return Poly(fq, std::move(c));
}

OrePoly random_ore_poly(const FieldCtx& ctx, unsigned degree, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    c.reserve(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c.push_back(random_element(ctx, rng));
    c.push_back(random_element_nonzero(ctx, rng));
    return OrePoly(ctx, std::move(c));
}

DrinfeldModule random_drinfeld_module(const FieldCtx& ctx, unsigned rank, std::mt19937_64& rng) {
    if (rank == 0) fail(Errc::InvalidModule, "rank must be >= 1");
    std::vector<FieldElement> c;
    c.reserve(rank + 1);
    c.push_back(random_element(ctx, rng)); // gamma(T)
    for (unsigned i = 1; i < rank; ++i) c.push_back(random_element(ctx, rng));
    c.push_back(random_element_nonzero(ctx, rng));
    return DrinfeldModule(ctx, OrePoly(ctx, std::move(c)));
}

} // namespace drinfeld
