#include "drinfeld/motive.hpp"

namespace drinfeld {

namespace {

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

} // namespace

KPoly::KPoly(const FieldCtx& ctx, std::vector<FieldElement> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
    trim(c_);
}

FieldElement KPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx().zero(); }

MotiveCoords motive_coords(const DrinfeldModule& phi, const OrePoly& f) {
    const FieldCtx& ctx = phi.ctx();
    if (&f.ctx() != &ctx) fail(Errc::ContextMismatch, "Ore polynomial from a different field");
    const unsigned r = phi.rank();

    // Peel T-layers: f = c_0 + q_0 phi_T, q_0 = c_1 + q_1 phi_T, ... with
    // deg_tau c_j < r, so f = sum_j c_j phi_T^j.
    std::vector<OrePoly> layers;
    OrePoly g = f;
    while (!g.is_zero()) {
        if (g.tau_degree() < static_cast<int>(r)) {
            layers.push_back(g);
            break;
        }
        auto [q, c] = rdiv(g, phi.phi_T());
        layers.push_back(c);
        g = q;
    }

    MotiveCoords mc;
    mc.coords.reserve(r);
    for (unsigned i = 0; i < r; ++i) {
        std::vector<FieldElement> c;
        c.reserve(layers.size());
        for (const auto& layer : layers) c.push_back(layer.coeff(i));
        mc.coords.emplace_back(ctx, std::move(c));
    }
    return mc;
}

OrePoly motive_reconstruct(const DrinfeldModule& phi, const MotiveCoords& mc) {
    const FieldCtx& ctx = phi.ctx();
    int top = Poly::kNegInfDegree;
    for (const auto& c : mc.coords) top = std::max(top, c.degree());
    OrePoly acc(ctx);
    if (top == Poly::kNegInfDegree) return acc;
    for (int j = top; j >= 0; --j) {
        std::vector<FieldElement> layer;
        layer.reserve(mc.coords.size());
        for (const auto& c : mc.coords) layer.push_back(c.coeff(static_cast<std::size_t>(j)));
        acc = oadd(omul(acc, phi.phi_T()), OrePoly(ctx, std::move(layer)));
    }
    return acc;
}

Poly rational_lcm(const DrinfeldModule& phi) {
    const FieldCtx& ctx = phi.ctx();
    const FqCtx& fq = ctx.fq();
    const unsigned d = ctx.d();

    // tau^d - 1
    std::vector<FieldElement> c(d + 1, ctx.zero());
    c[0] = neg(ctx.one());
    c[d] = ctx.one();
    const OrePoly taud_minus_1(ctx, std::move(c));

    const MotiveCoords mc = motive_coords(phi, taud_minus_1);

    // Expand each K[T]-coordinate over the basis of K: r*d polynomials over
    // F_q, whose monic gcd is g_phi.
    Poly g(fq);
    for (const auto& kc : mc.coords) {
        for (unsigned k = 0; k < d; ++k) {
            std::vector<fq_t> coeffs;
            coeffs.reserve(kc.coeffs().size());
            for (const auto& elem : kc.coeffs()) coeffs.push_back(elem.coeff(k));
            const Poly component(fq, std::move(coeffs));
            if (component.is_zero()) continue;
            g = g.is_zero() ? pmonic(component) : pgcd(g, component);
            if (g.is_one()) return g;
        }
    }
    if (g.is_zero()) fail(Errc::ZeroInput, "tau^d - 1 has no motive coordinates");
    return g;
}

bool is_torsion_rational(const DrinfeldModule& phi, const Poly& a) {
    const FieldCtx& ctx = phi.ctx();
    if (a.is_zero()) fail(Errc::ZeroInput, "rationality of the 0-torsion");
    const OrePoly phi_a = phi_eval(phi, a);
    const unsigned h = static_cast<unsigned>(phi_a.tau_valuation());
    const unsigned d = ctx.d();
    // tau^h (tau^d - 1) = tau^{h+d} - tau^h
    std::vector<FieldElement> c(h + d + 1, ctx.zero());
    c[h] = neg(ctx.one());
    c[h + d] = ctx.one();
    const OrePoly target(ctx, std::move(c));
    return right_divides(phi_a, target);
}

unsigned max_rational_p_power(const DrinfeldModule& phi, const ModuleStructure& pts) {
    Poly n_phi = Poly::one(phi.ctx().fq());
    for (const auto& f : pts.factors) n_phi = pmul(n_phi, f);
    const unsigned v = n_phi.is_constant() ? 0 : p_adic_valuation(n_phi, phi.char_p());
    for (unsigned s = v; s >= 1; --s)
        if (is_torsion_rational(phi, ppow(phi.char_p(), s))) return s;
    return 0;
}

} // namespace drinfeld
