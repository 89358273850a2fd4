#include "drinfeld/poly.hpp"

namespace drinfeld {

namespace {

void trim(std::vector<fq_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const FqCtx& common_fq(const Poly& a, const Poly& b) {
    if (&a.fq() != &b.fq()) fail(Errc::ContextMismatch, "polynomials over different fields");
    return a.fq();
}

} // namespace

Poly::Poly(const FqCtx& fq, std::vector<fq_t> coeffs) : fq_(&fq), c_(std::move(coeffs)) {
    trim(c_);
}

const FqCtx& Poly::fq() const {
    if (!fq_) fail(Errc::ContextMismatch, "polynomial has no field context");
    return *fq_;
}

Poly Poly::constant(const FqCtx& fq, fq_t c) {
    return c == 0 ? Poly(fq) : Poly(fq, std::vector<fq_t>{c});
}

Poly Poly::monomial(const FqCtx& fq, unsigned degree, fq_t c) {
    if (c == 0) return Poly(fq);
    std::vector<fq_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(fq, std::move(v));
}

fq_t Poly::lead() const {
    if (c_.empty()) fail(Errc::ZeroInput, "leading coefficient of zero polynomial");
    return c_.back();
}

bool operator==(const Poly& a, const Poly& b) { return a.fq_ == b.fq_ && a.c_ == b.c_; }

Poly padd(const Poly& a, const Poly& b) {
    const FqCtx& fq = common_fq(a, b);
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fq.add(a.coeff(i), b.coeff(i));
    return Poly(fq, std::move(c));
}

Poly psub(const Poly& a, const Poly& b) {
    const FqCtx& fq = common_fq(a, b);
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fq.sub(a.coeff(i), b.coeff(i));
    return Poly(fq, std::move(c));
}

Poly pneg(const Poly& a) {
    const FqCtx& fq = a.fq();
    std::vector<fq_t> c(a.coeffs());
    for (auto& x : c) x = fq.neg(x);
    return Poly(fq, std::move(c));
}

Poly pmul(const Poly& a, const Poly& b) {
    const FqCtx& fq = common_fq(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(fq);
    std::vector<fq_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = fq.add(c[i + j], fq.mul(a.coeff(i), b.coeff(j)));
    }
    return Poly(fq, std::move(c));
}

Poly pscale(const Poly& a, fq_t s) {
    const FqCtx& fq = a.fq();
    if (s == 0) return Poly(fq);
    std::vector<fq_t> c(a.coeffs());
    for (auto& x : c) x = fq.mul(x, s);
    return Poly(fq, std::move(c));
}

Poly pmonic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return pscale(a, a.fq().inv(a.lead()));
}

Poly ppow(const Poly& a, std::uint64_t k) {
    Poly out = Poly::one(a.fq());
    Poly base = a;
    while (k) {
        if (k & 1) out = pmul(out, base);
        base = pmul(base, base);
        k >>= 1;
    }
    return out;
}

PDivResult pdiv(const Poly& f, const Poly& g) {
    const FqCtx& fq = common_fq(f, g);
    if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (f.is_zero() || f.degree() < g.degree()) return {Poly(fq), f};
    const fq_t glead_inv = fq.inv(g.lead());
    std::vector<fq_t> r(f.coeffs());
    std::vector<fq_t> q(f.coeffs().size() - g.coeffs().size() + 1, 0);
    const std::size_t gd = g.coeffs().size() - 1;
    for (std::size_t i = r.size(); i-- > gd;) { // i is the current leading index
        if (r[i] == 0) continue;
        const fq_t c = fq.mul(r[i], glead_inv);
        q[i - gd] = c;
        for (std::size_t j = 0; j <= gd; ++j)
            r[i - gd + j] = fq.sub(r[i - gd + j], fq.mul(c, g.coeff(j)));
    }
    r.resize(gd);
    return {Poly(fq, std::move(q)), Poly(fq, std::move(r))};
}

Poly pgcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd of two zero polynomials");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = pdiv(a, b).remainder;
        a = b;
        b = r;
    }
    return pmonic(a);
}

PEgcdResult pegcd(const Poly& f, const Poly& h) {
    const FqCtx& fq = common_fq(f, h);
    if (f.is_zero() && h.is_zero()) fail(Errc::BothZero, "egcd of two zero polynomials");
    Poly r0 = f, r1 = h;
    Poly u0 = Poly::one(fq), u1 = Poly(fq);
    Poly v0 = Poly(fq), v1 = Poly::one(fq);
    while (!r1.is_zero()) {
        auto [q, r2] = pdiv(r0, r1);
        Poly u2 = psub(u0, pmul(q, u1));
        Poly v2 = psub(v0, pmul(q, v1));
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    const fq_t s = fq.inv(r0.lead());
    return {pscale(r0, s), pscale(u0, s), pscale(v0, s)};
}

unsigned p_adic_valuation(const Poly& n, const Poly& p) {
    if (n.is_zero()) fail(Errc::ZeroInput, "p-adic valuation of the zero polynomial");
    if (p.is_constant()) fail(Errc::ZeroInput, "p-adic valuation needs a nonconstant modulus");
    unsigned v = 0;
    Poly cur = n;
    while (true) {
        auto [q, r] = pdiv(cur, p);
        if (!r.is_zero()) return v;
        ++v;
        cur = q;
        if (cur.is_constant()) return v;
    }
}

bool pdivides(const Poly& a, const Poly& b) {
    if (a.is_zero()) fail(Errc::DivisionByZero, "divisibility by the zero polynomial");
    if (b.is_zero()) return true;
    return pdiv(b, a).remainder.is_zero();
}

Poly pmodpow(const Poly& base, std::uint64_t exp, const Poly& mod) {
    Poly out = pdiv(Poly::one(base.fq()), mod).remainder;
    Poly b = pdiv(base, mod).remainder;
    while (exp) {
        if (exp & 1) out = pdiv(pmul(out, b), mod).remainder;
        b = pdiv(pmul(b, b), mod).remainder;
        exp >>= 1;
    }
    return out;
}

bool is_irreducible(const Poly& m) {
    if (m.is_constant()) return false;
    if (m.degree() == 1) return true;
    const FqCtx& fq = m.fq();
    const unsigned n = static_cast<unsigned>(m.degree());
    const Poly x = Poly::monomial(fq, 1);
    Poly t = x; // x^{q^i} mod m
    for (unsigned i = 1; i <= n / 2; ++i) {
        t = pmodpow(t, fq.q(), m);
        Poly diff = psub(t, x);
        if (diff.is_zero()) return false; // every root lies in F_{q^i}, i <= n/2
        if (pgcd(diff, m).degree() >= 1) return false;
    }
    return true;
}

Poly first_irreducible(const FqCtx& fq, unsigned degree) {
    if (degree == 0) fail(Errc::DegreeMismatch, "irreducible polynomial of degree 0");
    std::vector<fq_t> c(degree + 1, 0);
    c[degree] = fq.one();
    while (true) {
        Poly candidate(fq, c);
        if (is_irreducible(candidate)) return candidate;
        // increment the lower coefficients as a base-q counter
        unsigned i = 0;
        while (i < degree) {
            if (++c[i] < fq.q()) break;
            c[i] = 0;
            ++i;
        }
        if (i == degree) fail(Errc::NotIrreducible, "no irreducible polynomial found");
    }
}

} // namespace drinfeld
