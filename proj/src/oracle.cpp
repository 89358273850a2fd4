#include "drinfeld/oracle.hpp"

#include <algorithm>

#include "drinfeld/linalg.hpp"

namespace drinfeld {

std::uint64_t field_size_checked(const FieldCtx& ctx) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < ctx.d(); ++i) {
        if (size > kOracleSizeCap / ctx.q()) fail(Errc::TooLarge, "field too large for the oracle");
        size *= ctx.q();
    }
    if (size > kOracleSizeCap) fail(Errc::TooLarge, "field too large for the oracle");
    return size;
}

FieldElement element_from_index(const FieldCtx& ctx, std::uint64_t n) {
    std::vector<fq_t> c(ctx.d());
    for (unsigned i = 0; i < ctx.d(); ++i) {
        c[i] = n % ctx.q();
        n /= ctx.q();
    }
    return ctx.from_coeffs(std::move(c));
}

Poly brute_annihilator(const DrinfeldModule& phi, const FieldElement& x) {
    const FieldCtx& ctx = phi.ctx();
    field_size_checked(ctx);
    const FqCtx& fq = ctx.fq();
    if (x.is_zero()) return Poly::one(fq);
    for (unsigned deg = 1; deg <= ctx.d(); ++deg) {
        // monic a = T^deg + (lower coefficients as an ascending base-q counter)
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= fq.q();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<fq_t> c(deg + 1, 0);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < deg; ++i) {
                c[i] = v % fq.q();
                v /= fq.q();
            }
            c[deg] = fq.one();
            const Poly a(fq, std::move(c));
            if (oeval(phi_eval(phi, a), x).is_zero()) return a;
        }
    }
    fail(Errc::NotSubmodule, "no annihilator of degree <= d found");
}

std::vector<Poly> brute_module_structure(const DrinfeldModule& phi,
                                         const std::function<bool(const FieldElement&)>& predicate) {
    const FieldCtx& ctx = phi.ctx();
    const FqCtx& fq = ctx.fq();
    const std::uint64_t size = field_size_checked(ctx);

    std::vector<FieldElement> subset;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        FieldElement x = element_from_index(ctx, idx);
        if (predicate(x)) subset.push_back(std::move(x));
    }
    if (subset.empty() || !predicate(ctx.zero()))
        fail(Errc::NotSubmodule, "subset does not contain 0");

    // F_q-basis of the subset by greedy echelon: subset must be exactly the
    // span (checked by cardinality plus membership of every element).
    std::vector<std::vector<fq_t>> basis;
    {
        std::vector<std::vector<fq_t>> rows; // echelonized copies
        std::vector<std::size_t> leads;
        auto reduce = [&](std::vector<fq_t> v) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const fq_t c = v[leads[i]];
                if (c == 0) continue;
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = fq.sub(v[j], fq.mul(c, rows[i][j]));
            }
            return v;
        };
        for (const auto& x : subset) {
            std::vector<fq_t> v = reduce(x.coeffs());
            const auto nz = std::find_if(v.begin(), v.end(), [](fq_t c) { return c != 0; });
            if (nz == v.end()) continue;
            basis.push_back(x.coeffs());
            const std::size_t ld = static_cast<std::size_t>(nz - v.begin());
            const fq_t s = fq.inv(v[ld]);
            for (auto& c : v) c = fq.mul(c, s);
            rows.push_back(std::move(v));
            leads.push_back(ld);
        }
        std::uint64_t span_size = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) span_size *= fq.q();
        if (span_size != subset.size())
            fail(Errc::NotSubmodule, "subset is not an F_q-subspace");
        for (const auto& x : subset) {
            const std::vector<fq_t> v = reduce(x.coeffs());
            if (std::any_of(v.begin(), v.end(), [](fq_t c) { return c != 0; }))
                fail(Errc::NotSubmodule, "subset is not closed under F_q combinations");
        }
    }
    if (basis.empty()) return {};

    const MatFq n = MatFq::from_columns(fq, ctx.d(), basis);
    MatFq y(fq, ctx.d(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FieldElement img = oeval(phi.phi_T(), ctx.from_coeffs(basis[j]));
        if (!predicate(img)) fail(Errc::NotSubmodule, "subset not stable under phi_T");
        for (unsigned i = 0; i < ctx.d(); ++i) y.at(i, j) = img.coeff(i);
    }
    MatFq induced;
    try {
        induced = solve_in_span(n, y);
    } catch (const Error& e) {
        if (e.code() == Errc::NotInSpan) fail(Errc::NotSubmodule, "subset not stable under phi_T");
        throw;
    }

    const SmithForm sf = smith_normal_form(characteristic_matrix(induced));
    return nonunit_diagonal(sf.diagonal);
}

std::vector<Poly> irreducible_divisors(const Poly& f) {
    const FqCtx& fq = f.fq();
    if (f.is_zero()) fail(Errc::ZeroInput, "irreducible divisors of zero");
    std::vector<Poly> out;
    for (int deg = 1; deg <= f.degree(); ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= fq.q();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<fq_t> c(deg + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < deg; ++i) {
                c[i] = v % fq.q();
                v /= fq.q();
            }
            c[deg] = fq.one();
            const Poly candidate(fq, std::move(c));
            if (pdivides(candidate, f) && is_irreducible(candidate)) out.push_back(candidate);
        }
    }
    return out;
}

std::uint64_t count_torsion_points(const DrinfeldModule& phi, const Poly& a) {
    const FieldCtx& ctx = phi.ctx();
    const std::uint64_t size = field_size_checked(ctx);
    const OrePoly phi_a = phi_eval(phi, a);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < size; ++idx)
        if (oeval(phi_a, element_from_index(ctx, idx)).is_zero()) ++count;
    return count;
}

} // namespace drinfeld
