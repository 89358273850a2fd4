#include "drinfeld/module.hpp"

namespace drinfeld {

namespace {

std::shared_ptr<const VectorEvalStrategy>& ev_slot() {
    static std::shared_ptr<const VectorEvalStrategy> s = std::make_shared<HornerVectorEval>();
    return s;
}

} // namespace

DrinfeldModule::DrinfeldModule(const FieldCtx& ctx, OrePoly phi_t)
    : ctx_(&ctx), phi_t_(std::move(phi_t)) {
    if (&phi_t_.ctx() != ctx_) fail(Errc::ContextMismatch, "phi_T from a different field");
    if (phi_t_.tau_degree() < 1) fail(Errc::InvalidModule, "phi_T must have tau-degree >= 1");
    rank_ = static_cast<unsigned>(phi_t_.tau_degree());
    gamma_ = phi_t_.coeff(0);
    char_p_ = min_poly(gamma_);
}

OrePoly phi_eval(const DrinfeldModule& phi, const Poly& a) {
    const FieldCtx& ctx = phi.ctx();
    if (&a.fq() != &ctx.fq()) fail(Errc::ContextMismatch, "polynomial over a different F_q");
    OrePoly acc(ctx);
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        acc = omul(acc, phi.phi_T());
        const fq_t c = a.coeff(k);
        if (c != 0) acc = oadd(acc, OrePoly::constant(ctx.from_fq(c)));
    }
    return acc;
}

Morphism morphism_new(const DrinfeldModule& phi, OrePoly u) {
    if (&u.ctx() != &phi.ctx()) fail(Errc::ContextMismatch, "morphism from a different field");
    if (u.is_zero()) return Morphism(phi, std::move(u), phi.phi_T());
    const auto [psi_t, rem] = rdiv(omul(u, phi.phi_T()), u);
    if (!rem.is_zero()) fail(Errc::NotAMorphism, "u * phi_T is not a left multiple of u");
    return Morphism(phi, std::move(u), psi_t);
}

Morphism zero_morphism(const DrinfeldModule& phi) {
    return morphism_new(phi, OrePoly::zero(phi.ctx()));
}

ModuleStructure morphism_kernel_invariants(const Morphism& m) {
    const DrinfeldModule& phi = m.source();
    const FieldCtx& ctx = phi.ctx();
    const FqCtx& fq = ctx.fq();
    const unsigned d = ctx.d();

    const MatFq mu = ore_matrix(m.u());
    const std::vector<std::vector<fq_t>> basis = kernel_basis(mu);
    if (basis.empty()) return {};

    const MatFq n = MatFq::from_columns(fq, d, basis);

    // Action of phi_T on the kernel: evaluate phi_T at the basis points and
    // express the images back in that basis.
    std::vector<FieldElement> points;
    points.reserve(basis.size());
    for (const auto& b : basis) points.push_back(ctx.from_coeffs(b));
    const LlcmTree tree = build_llcm_tree(points);
    const std::vector<FieldElement> images = multipoint_eval(phi.phi_T(), points, tree);

    MatFq y(fq, d, basis.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (unsigned i = 0; i < d; ++i) y.at(i, j) = images[j].coeff(i);

    MatFq x;
    try {
        x = solve_in_span(n, y);
    } catch (const Error& e) {
        if (e.code() == Errc::NotInSpan || e.code() == Errc::RankDeficient)
            fail(Errc::NotStabilized, "phi_T does not stabilize the kernel");
        throw;
    }

    const FrobeniusForm ff = frobenius_normal_form(x);

    // Generators: columns of N*S at the block offsets, read in K.
    const MatFq s_prime = mat_mul(n, ff.transform);
    ModuleStructure out;
    std::size_t offset = 0;
    for (const Poly& block : ff.blocks) {
        out.factors.push_back(block);
        out.generators.push_back(ctx.from_coeffs(s_prime.column(offset)));
        offset += static_cast<std::size_t>(block.degree());
    }
    return out;
}

ModuleStructure module_of_points_invariants(const DrinfeldModule& phi) {
    return morphism_kernel_invariants(zero_morphism(phi));
}

ChainGcdResult chain_gcd(const Poly& a, const std::vector<Poly>& chain) {
    if (a.is_zero()) fail(Errc::ZeroInput, "chain gcd with a = 0");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (&chain[i].fq() != &a.fq()) fail(Errc::ContextMismatch, "chain over a different F_q");
        if (!chain[i].is_monic() || chain[i].degree() < 1)
            fail(Errc::NotAChain, "chain entries must be monic and nonconstant");
        if (i + 1 < chain.size() && !pdivides(chain[i], chain[i + 1]))
            fail(Errc::NotAChain, "chain is not a divisibility chain");
    }
    ChainGcdResult out;
    const std::size_t l = chain.size();
    if (l == 0) return out;
    out.gammas.resize(l, Poly(a.fq()));
    out.rhos.resize(l, Poly(a.fq()));
    const Poly reduced = pdiv(a, chain[l - 1]).remainder;
    out.gammas[l - 1] = reduced.is_zero() ? chain[l - 1] : pgcd(reduced, chain[l - 1]);
    out.rhos[l - 1] = pdiv(chain[l - 1], out.gammas[l - 1]).quotient;
    for (std::size_t i = l - 1; i-- > 0;) {
        out.gammas[i] = pgcd(out.gammas[i + 1], chain[i]);
        out.rhos[i] = pdiv(chain[i], out.gammas[i]).quotient;
    }
    return out;
}

FieldElement HornerVectorEval::eval(const DrinfeldModule& phi, const Poly& a,
                                    const FieldElement& x) const {
    const FieldCtx& ctx = phi.ctx();
    if (a.is_zero()) return ctx.zero();
    // sum c_k phi_T^k(x) with phi_T applied iteratively to the point.
    FieldElement acc = a.coeff(0) == 0 ? ctx.zero() : mul_fq(a.coeff(0), x);
    FieldElement cur = x;
    for (std::size_t k = 1; k < a.coeffs().size(); ++k) {
        cur = oeval(phi.phi_T(), cur);
        if (a.coeff(k) != 0) acc = add(acc, mul_fq(a.coeff(k), cur));
    }
    return acc;
}

const VectorEvalStrategy& vector_eval_strategy() { return *ev_slot(); }

void set_vector_eval_strategy(std::shared_ptr<const VectorEvalStrategy> s) {
    if (!s) fail(Errc::ZeroInput, "null vector evaluation strategy");
    ev_slot() = std::move(s);
}

FieldElement phi_action(const DrinfeldModule& phi, const Poly& a, const FieldElement& x) {
    return vector_eval_strategy().eval(phi, a, x);
}

ModuleStructure torsion_from_points(const DrinfeldModule& phi, const Poly& a,
                                    const ModuleStructure& pts) {
    if (a.is_zero()) fail(Errc::ZeroInput, "torsion for a = 0");
    if (pts.factors.size() != pts.generators.size())
        fail(Errc::NotAChain, "mismatched factors and generators");
    const ChainGcdResult cg = chain_gcd(a, pts.factors);
    ModuleStructure out;
    for (std::size_t i = 0; i < pts.factors.size(); ++i) {
        if (cg.gammas[i].degree() < 1) continue; // gamma_i = 1: contributes nothing
        out.factors.push_back(cg.gammas[i]);
        out.generators.push_back(phi_action(phi, cg.rhos[i], pts.generators[i]));
    }
    return out;
}

} // namespace drinfeld
