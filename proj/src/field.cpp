#include "drinfeld/field.hpp"

#include <algorithm>

namespace drinfeld {

namespace {

const FieldCtx& common_ctx(const FieldElement& a, const FieldElement& b) {
    if (!a.has_ctx() || !b.has_ctx() || &a.ctx() != &b.ctx())
        fail(Errc::ContextMismatch, "elements of different fields");
    return a.ctx();
}

std::vector<fq_t> kmod_coeffs(const FqCtx& fq, const std::vector<std::vector<std::uint64_t>>& kmod) {
    std::vector<fq_t> out;
    out.reserve(kmod.size());
    for (const auto& digits : kmod) {
        if (digits.size() > fq.e()) fail(Errc::DegreeMismatch, "k_modulus coefficient too long");
        out.push_back(fq.encode(digits));
    }
    return out;
}

} // namespace

FieldCtx::FieldCtx(const FieldSpec& spec)
    : fq_(spec.p, spec.fq_modulus), d_(spec.d), kmod_(fq_, kmod_coeffs(fq_, spec.k_modulus)) {
    if (spec.e != fq_.e()) fail(Errc::DegreeMismatch, "e does not match fq_modulus degree");
    if (d_ == 0) fail(Errc::DegreeMismatch, "d must be >= 1");
    if (kmod_.degree() != static_cast<int>(d_)) fail(Errc::DegreeMismatch, "k_modulus degree != d");
    if (!kmod_.is_monic()) fail(Errc::DegreeMismatch, "k_modulus must be monic");
    if (d_ >= 2 && !is_irreducible(kmod_)) fail(Errc::NotIrreducible, "k_modulus is reducible over F_q");

    // Column i of the Frobenius matrix: coordinates of (z^i)^q = (z^q)^i.
    const Poly zq = pmodpow(Poly::monomial(fq_, 1), fq_.q(), kmod_);
    frob_ = MatFq(fq_, d_, d_);
    Poly w = Poly::one(fq_);
    for (unsigned i = 0; i < d_; ++i) {
        for (unsigned k = 0; k < d_; ++k) frob_.at(k, i) = w.coeff(k);
        if (i + 1 < d_) w = pdiv(pmul(w, zq), kmod_).remainder;
    }
}

FieldSpec FieldCtx::spec() const {
    FieldSpec s;
    s.p = fq_.p();
    s.e = fq_.e();
    s.fq_modulus = fq_.modulus();
    s.d = d_;
    s.k_modulus.reserve(d_ + 1);
    for (unsigned i = 0; i <= d_; ++i) s.k_modulus.push_back(fq_.decode(kmod_.coeff(i)));
    return s;
}

const MatFq& FieldCtx::frobenius_power(unsigned k) const {
    std::call_once(frob_pows_once_, [this] {
        frob_pows_.resize(d_);
        frob_pows_[0] = MatFq::identity(fq_, d_);
        for (unsigned j = 1; j < d_; ++j) frob_pows_[j] = mat_mul(frob_pows_[j - 1], frob_);
    });
    return frob_pows_[k % d_];
}

FieldElement FieldCtx::zero() const { return FieldElement(*this, std::vector<fq_t>(d_, 0)); }

FieldElement FieldCtx::one() const { return from_fq(fq_.one()); }

FieldElement FieldCtx::gen() const { return basis_element(d_ > 1 ? 1 : 0); }

FieldElement FieldCtx::basis_element(unsigned i) const {
    if (i >= d_) fail(Errc::DegreeMismatch, "basis index out of range");
    std::vector<fq_t> c(d_, 0);
    c[i] = fq_.one();
    return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<fq_t> coeffs) const {
    if (coeffs.size() > d_) fail(Errc::DegreeMismatch, "too many coordinates for K");
    for (fq_t c : coeffs)
        if (c >= fq_.q()) fail(Errc::DegreeMismatch, "coordinate not reduced in F_q");
    coeffs.resize(d_, 0);
    return FieldElement(*this, std::move(coeffs));
}

FieldElement FieldCtx::from_fq(fq_t c) const {
    std::vector<fq_t> v(d_, 0);
    if (c >= fq_.q()) fail(Errc::DegreeMismatch, "coordinate not reduced in F_q");
    v[0] = c;
    return FieldElement(*this, std::move(v));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](fq_t x) { return x == 0; });
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    const FqCtx& fq = ctx.fq();
    std::vector<fq_t> c(ctx.d());
    for (unsigned i = 0; i < ctx.d(); ++i) c[i] = fq.add(a.coeff(i), b.coeff(i));
    ctx.count_arith();
    return ctx.from_coeffs(std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    const FqCtx& fq = ctx.fq();
    std::vector<fq_t> c(ctx.d());
    for (unsigned i = 0; i < ctx.d(); ++i) c[i] = fq.sub(a.coeff(i), b.coeff(i));
    ctx.count_arith();
    return ctx.from_coeffs(std::move(c));
}

FieldElement neg(const FieldElement& a) {
    const FieldCtx& ctx = a.ctx();
    const FqCtx& fq = ctx.fq();
    std::vector<fq_t> c(ctx.d());
    for (unsigned i = 0; i < ctx.d(); ++i) c[i] = fq.neg(a.coeff(i));
    ctx.count_arith();
    return ctx.from_coeffs(std::move(c));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    const FqCtx& fq = ctx.fq();
    const unsigned d = ctx.d();
    std::vector<fq_t> acc(2 * d - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (a.coeff(i) == 0) continue;
        for (unsigned j = 0; j < d; ++j)
            if (b.coeff(j) != 0) acc[i + j] = fq.add(acc[i + j], fq.mul(a.coeff(i), b.coeff(j)));
    }
    const Poly& kmod = ctx.k_modulus();
    for (unsigned k = 2 * d - 2; k >= d && k < acc.size(); --k) {
        const fq_t c = acc[k];
        if (c == 0) continue;
        acc[k] = 0;
        for (unsigned j = 0; j < d; ++j)
            acc[k - d + j] = fq.sub(acc[k - d + j], fq.mul(c, kmod.coeff(j)));
    }
    acc.resize(d);
    ctx.count_arith();
    return ctx.from_coeffs(std::move(acc));
}

FieldElement mul_fq(fq_t c, const FieldElement& a) {
    const FieldCtx& ctx = a.ctx();
    const FqCtx& fq = ctx.fq();
    std::vector<fq_t> out(ctx.d());
    for (unsigned i = 0; i < ctx.d(); ++i) out[i] = fq.mul(c, a.coeff(i));
    ctx.count_arith();
    return ctx.from_coeffs(std::move(out));
}

FieldElement inv(const FieldElement& a) {
    const FieldCtx& ctx = a.ctx();
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero in K");
    const Poly ap(ctx.fq(), a.coeffs());
    const PEgcdResult e = pegcd(ap, ctx.k_modulus());
    // gcd is 1 since the modulus is irreducible and a != 0
    const Poly r = pdiv(e.u, ctx.k_modulus()).remainder;
    std::vector<fq_t> c(ctx.d(), 0);
    for (unsigned i = 0; i < ctx.d(); ++i) c[i] = r.coeff(i);
    ctx.count_arith();
    return ctx.from_coeffs(std::move(c));
}

FieldElement frobenius(const FieldElement& x, std::uint64_t k) {
    const FieldCtx& ctx = x.ctx();
    const unsigned shift = static_cast<unsigned>(k % ctx.d());
    if (shift == 0) return x;
    std::vector<fq_t> y = mat_vec(ctx.frobenius_power(shift), x.coeffs());
    ctx.count_frobenius(shift);
    return ctx.from_coeffs(std::move(y));
}

Poly min_poly(const FieldElement& x) {
    const FieldCtx& ctx = x.ctx();
    const FqCtx& fq = ctx.fq();
    // Matrix of multiplication by x; its minimal polynomial is that of x.
    MatFq mx(fq, ctx.d(), ctx.d());
    Poly w(fq, x.coeffs());
    Poly col = Poly::one(fq);
    for (unsigned j = 0; j < ctx.d(); ++j) {
        const Poly prod = pdiv(pmul(col, w), ctx.k_modulus()).remainder;
        for (unsigned i = 0; i < ctx.d(); ++i) mx.at(i, j) = prod.coeff(i);
        col = pdiv(pmul(col, Poly::monomial(fq, 1)), ctx.k_modulus()).remainder;
    }
    return minimal_polynomial(mx);
}

} // namespace drinfeld
