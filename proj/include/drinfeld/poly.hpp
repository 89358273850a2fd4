#pragma once

#include <limits>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

// Univariate polynomial over F_q with ascending coefficients. The zero
// polynomial is the empty coefficient sequence; its degree is the sentinel
// kNegInfDegree, never -1.
class Poly {
  public:
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    Poly() = default; // unusable until assigned from a context-carrying value

    explicit Poly(const FqCtx& fq) : fq_(&fq) {}
    Poly(const FqCtx& fq, std::vector<fq_t> coeffs);

    static Poly zero(const FqCtx& fq) { return Poly(fq); }
    static Poly one(const FqCtx& fq) { return constant(fq, fq.one()); }
    static Poly constant(const FqCtx& fq, fq_t c);
    static Poly monomial(const FqCtx& fq, unsigned degree, fq_t c = 1);

    const FqCtx& fq() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == fq().one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    fq_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    fq_t lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == fq().one(); }
    const std::vector<fq_t>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    const FqCtx* fq_ = nullptr;
    std::vector<fq_t> c_; // trailing coefficient nonzero
};

Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pneg(const Poly& a);
Poly pmul(const Poly& a, const Poly& b);
Poly pscale(const Poly& a, fq_t c);
Poly pmonic(const Poly& a);
Poly ppow(const Poly& a, std::uint64_t k);

struct PDivResult {
    Poly quotient;
    Poly remainder;
};

// Euclidean division f = q*g + r with deg r < deg g.
PDivResult pdiv(const Poly& f, const Poly& g);

// Monic gcd; pgcd(f, 0) is the monic normalization of f.
Poly pgcd(const Poly& f, const Poly& g);

struct PEgcdResult {
    Poly g; // monic gcd
    Poly u;
    Poly v; // u*f + v*h = g
};
PEgcdResult pegcd(const Poly& f, const Poly& h);

// Largest v such that p^v divides n, by repeated exact division.
unsigned p_adic_valuation(const Poly& n, const Poly& p);

// True when a divides b exactly. a must be nonzero.
bool pdivides(const Poly& a, const Poly& b);

Poly pmodpow(const Poly& base, std::uint64_t exp, const Poly& mod);

// Deterministic irreducibility test: gcd with x^{q^i} - x for i up to deg/2.
bool is_irreducible(const Poly& m);

// Lexicographically first monic irreducible of the given degree (coefficient
// tuples enumerated as ascending base-q integers).
Poly first_irreducible(const FqCtx& fq, unsigned degree);

} // namespace drinfeld
