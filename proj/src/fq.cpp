#include "drinfeld/fq.hpp"

#include <array>

#include "drinfeld/poly.hpp"

namespace drinfeld {

namespace {

constexpr unsigned kMaxExtension = 62;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

} // namespace

FqCtx::FqCtx(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), mod_(std::move(modulus)) {
    if (p_ >= (1ull << 31) || !is_prime_u64(p_)) fail(Errc::NotPrime, "p must be a prime < 2^31");
    if (mod_.size() < 2) fail(Errc::DegreeMismatch, "fq_modulus must have degree >= 1");
    for (auto& c : mod_) c %= p_;
    if (mod_.back() != 1) fail(Errc::DegreeMismatch, "fq_modulus must be monic");
    e_ = static_cast<unsigned>(mod_.size()) - 1;
    if (e_ > kMaxExtension) fail(Errc::TooLarge, "extension degree of F_q over F_p too large");

    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (q_ > (1ull << 62) / p_) fail(Errc::TooLarge, "q = p^e exceeds 2^62");
        q_ *= p_;
    }

    if (e_ >= 2) {
        // Check irreducibility of the modulus as a polynomial over F_p,
        // which is itself an FqCtx with a degree-one modulus.
        FqCtx prime_field(p_, {0, 1});
        Poly m(prime_field, mod_);
        if (!is_irreducible(m)) fail(Errc::NotIrreducible, "fq_modulus is reducible over F_p");
    }
}

std::vector<std::uint64_t> FqCtx::decode(fq_t a) const {
    std::vector<std::uint64_t> digits(e_);
    for (unsigned i = 0; i < e_; ++i) {
        digits[i] = a % p_;
        a /= p_;
    }
    return digits;
}

fq_t FqCtx::encode(const std::vector<std::uint64_t>& digits) const {
    fq_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
    return v;
}

fq_t FqCtx::add(fq_t a, fq_t b) const {
    if (e_ == 1) return (a + b) % p_;
    fq_t out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

fq_t FqCtx::neg(fq_t a) const {
    if (e_ == 1) return (p_ - a % p_) % p_;
    fq_t out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

fq_t FqCtx::sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

fq_t FqCtx::mul(fq_t a, fq_t b) const {
    if (e_ == 1) return (a * b) % p_;
    std::array<std::uint64_t, kMaxExtension> da{}, db{};
    std::array<std::uint64_t, 2 * kMaxExtension> acc{};
    for (unsigned i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
    // reduce modulo the monic modulus
    for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
        std::uint64_t c = acc[k];
        if (c == 0) continue;
        acc[k] = 0;
        for (unsigned j = 0; j < e_; ++j)
            acc[k - e_ + j] = (acc[k - e_ + j] + (p_ - c * mod_[j] % p_)) % p_;
    }
    fq_t out = 0;
    for (unsigned i = e_; i-- > 0;) out = out * p_ + acc[i];
    return out;
}

fq_t FqCtx::pow(fq_t a, std::uint64_t k) const {
    fq_t out = one(), base = a;
    while (k) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

fq_t FqCtx::inv(fq_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero in F_q");
    return pow(a, q_ - 2);
}

} // namespace drinfeld
