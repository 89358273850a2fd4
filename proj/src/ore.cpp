#include "drinfeld/ore.hpp"

#include <algorithm>

namespace drinfeld {

namespace {

const FieldCtx& common_ctx(const OrePoly& a, const OrePoly& b) {
    if (&a.ctx() != &b.ctx()) fail(Errc::ContextMismatch, "Ore polynomials over different fields");
    return a.ctx();
}

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::shared_ptr<const OreMulStrategy>& strategy_slot() {
    static std::shared_ptr<const OreMulStrategy> s = std::make_shared<SchoolbookOreMul>();
    return s;
}

} // namespace

OrePoly::OrePoly(const FieldCtx& ctx, std::vector<FieldElement> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.has_ctx() || &c.ctx() != ctx_)
            fail(Errc::ContextMismatch, "coefficient from a different field");
    trim(c_);
}

OrePoly OrePoly::one(const FieldCtx& ctx) { return constant(ctx.one()); }

OrePoly OrePoly::tau_power(const FieldCtx& ctx, unsigned k) {
    std::vector<FieldElement> c(k + 1, ctx.zero());
    c[k] = ctx.one();
    return OrePoly(ctx, std::move(c));
}

OrePoly OrePoly::constant(const FieldElement& c) {
    return OrePoly(c.ctx(), std::vector<FieldElement>{c});
}

int OrePoly::tau_valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return kNegInfDegree;
}

FieldElement OrePoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : ctx().zero();
}

const FieldElement& OrePoly::lead() const {
    if (c_.empty()) fail(Errc::ZeroInput, "leading coefficient of the zero Ore polynomial");
    return c_.back();
}

bool OrePoly::is_monic() const { return !c_.empty() && c_.back() == ctx().one(); }

bool operator==(const OrePoly& a, const OrePoly& b) {
    if (a.ctx_ != b.ctx_ || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

OrePoly oadd(const OrePoly& a, const OrePoly& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    std::vector<FieldElement> c;
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= a.coeffs().size()) c.push_back(b.coeffs()[i]);
        else if (i >= b.coeffs().size()) c.push_back(a.coeffs()[i]);
        else c.push_back(add(a.coeffs()[i], b.coeffs()[i]));
    }
    return OrePoly(ctx, std::move(c));
}

OrePoly osub(const OrePoly& a, const OrePoly& b) { return oadd(a, oneg(b)); }

OrePoly oneg(const OrePoly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(neg(x));
    return OrePoly(a.ctx(), std::move(c));
}

OrePoly oscale(const FieldElement& s, const OrePoly& a) {
    if (s.is_zero()) return OrePoly(a.ctx());
    std::vector<FieldElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(mul(s, x));
    return OrePoly(a.ctx(), std::move(c));
}

OrePoly omonic(const OrePoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return oscale(inv(a.lead()), a);
}

OrePoly SchoolbookOreMul::multiply(const OrePoly& f, const OrePoly& g) const {
    const FieldCtx& ctx = common_ctx(f, g);
    if (f.is_zero() || g.is_zero()) return OrePoly(ctx);
    const std::size_t nf = f.coeffs().size(), ng = g.coeffs().size();
    std::vector<FieldElement> out(nf + ng - 1, ctx.zero());
    std::vector<FieldElement> gs(g.coeffs()); // tau^i-twisted copy of g
    for (std::size_t i = 0; i < nf; ++i) {
        if (i > 0)
            for (auto& x : gs) x = frobenius(x, 1);
        const FieldElement& fi = f.coeffs()[i];
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j < ng; ++j) {
            if (gs[j].is_zero()) continue;
            out[i + j] = add(out[i + j], mul(fi, gs[j]));
        }
    }
    return OrePoly(ctx, std::move(out));
}

const OreMulStrategy& ore_mul_strategy() { return *strategy_slot(); }

void set_ore_mul_strategy(std::shared_ptr<const OreMulStrategy> s) {
    if (!s) fail(Errc::ZeroInput, "null Ore multiplication strategy");
    strategy_slot() = std::move(s);
}

OrePoly omul(const OrePoly& f, const OrePoly& g) { return ore_mul_strategy().multiply(f, g); }

OreDivResult rdiv(const OrePoly& f, const OrePoly& g) {
    const FieldCtx& ctx = common_ctx(f, g);
    if (g.is_zero()) fail(Errc::DivisionByZero, "right division by the zero Ore polynomial");
    if (f.is_zero() || f.tau_degree() < g.tau_degree()) return {OrePoly(ctx), f};
    const std::size_t gd = static_cast<std::size_t>(g.tau_degree());
    std::vector<FieldElement> r(f.coeffs());
    std::vector<FieldElement> q(r.size() - gd, ctx.zero());
    for (std::size_t top = r.size(); top-- > gd;) {
        if (r[top].is_zero()) continue;
        const std::size_t k = top - gd;
        // c * tau^k * g cancels the leading term: c = r_top / (g_gd)^{q^k}
        const FieldElement c = mul(r[top], inv(frobenius(g.lead(), k)));
        q[k] = c;
        for (std::size_t j = 0; j <= gd; ++j) {
            const FieldElement gj = g.coeffs()[j];
            if (gj.is_zero()) continue;
            r[k + j] = sub(r[k + j], mul(c, frobenius(gj, k)));
        }
    }
    r.resize(gd);
    return {OrePoly(ctx, std::move(q)), OrePoly(ctx, std::move(r))};
}

OrePoly rgcd(const OrePoly& f, const OrePoly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "rgcd of two zero Ore polynomials");
    OrePoly a = f, b = g;
    while (!b.is_zero()) {
        OrePoly r = rdiv(a, b).remainder;
        a = b;
        b = r;
    }
    return omonic(a);
}

OrePoly llcm(const OrePoly& f, const OrePoly& g) {
    const FieldCtx& ctx = common_ctx(f, g);
    if (f.is_zero() || g.is_zero()) fail(Errc::ZeroInput, "llcm requires nonzero inputs");
    // Extended right-Euclidean algorithm: track u with r_i = u_i f + v_i g;
    // at termination u_last * f is the llcm.
    OrePoly r0 = f, r1 = g;
    OrePoly u0 = OrePoly::one(ctx), u1 = OrePoly(ctx);
    while (!r1.is_zero()) {
        auto [q, r2] = rdiv(r0, r1);
        OrePoly u2 = osub(u0, omul(q, u1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    return omonic(omul(u1, f));
}

bool right_divides(const OrePoly& g, const OrePoly& f) { return rdiv(f, g).remainder.is_zero(); }

OrePoly fold_mod_taud(const OrePoly& f) {
    const FieldCtx& ctx = f.ctx();
    const unsigned d = ctx.d();
    if (f.is_zero() || f.coeffs().size() <= d) return f;
    std::vector<FieldElement> out(d, ctx.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const FieldElement& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        out[i % d] = add(out[i % d], c);
    }
    return OrePoly(ctx, std::move(out));
}

FieldElement oeval(const OrePoly& f, const FieldElement& x) {
    const FieldCtx& ctx = f.ctx();
    if (&x.ctx() != &ctx) fail(Errc::ContextMismatch, "point from a different field");
    if (f.is_zero()) return ctx.zero();
    FieldElement acc = f.coeffs()[0].is_zero() ? ctx.zero() : mul(f.coeffs()[0], x);
    FieldElement xq = x;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        xq = frobenius(xq, 1);
        if (!f.coeffs()[i].is_zero()) acc = add(acc, mul(f.coeffs()[i], xq));
    }
    return acc;
}

} // namespace drinfeld
