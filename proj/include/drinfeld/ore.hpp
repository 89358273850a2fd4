#pragma once

#include <memory>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

// Element of K{tau}: coefficients in K by ascending tau-power, subject to the
// commutation rule tau * a = a^q * tau. Zero is the empty sequence.
class OrePoly {
  public:
    static constexpr int kNegInfDegree = Poly::kNegInfDegree;

    OrePoly() = default;
    explicit OrePoly(const FieldCtx& ctx) : ctx_(&ctx) {}
    OrePoly(const FieldCtx& ctx, std::vector<FieldElement> coeffs);

    static OrePoly zero(const FieldCtx& ctx) { return OrePoly(ctx); }
    static OrePoly one(const FieldCtx& ctx);
    static OrePoly tau_power(const FieldCtx& ctx, unsigned k); // tau^k
    static OrePoly constant(const FieldElement& c);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    int tau_degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    int tau_valuation() const; // kNegInfDegree for zero
    FieldElement coeff(std::size_t i) const;
    const FieldElement& lead() const;
    bool is_monic() const;
    // Nonzero constant coefficient; over a finite field this is equivalent to
    // the kernel over the algebraic closure having full dimension.
    bool is_separable() const { return !c_.empty() && !c_[0].is_zero(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    friend bool operator==(const OrePoly& a, const OrePoly& b);
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<FieldElement> c_; // trailing coefficient nonzero
};

OrePoly oadd(const OrePoly& a, const OrePoly& b);
OrePoly osub(const OrePoly& a, const OrePoly& b);
OrePoly oneg(const OrePoly& a);
// Left multiplication by the constant c.
OrePoly oscale(const FieldElement& c, const OrePoly& a);
OrePoly omonic(const OrePoly& a);

// Product under tau * a = a^q * tau. Dispatches through the multiplication
// strategy (schoolbook by default).
OrePoly omul(const OrePoly& f, const OrePoly& g);

struct OreDivResult {
    OrePoly quotient;
    OrePoly remainder;
};

// Right Euclidean division: f = q*g + r with deg_tau r < deg_tau g.
OreDivResult rdiv(const OrePoly& f, const OrePoly& g);

// Monic generator of K{tau}f + K{tau}g.
OrePoly rgcd(const OrePoly& f, const OrePoly& g);

// Monic generator of K{tau}f n K{tau}g, via the extended right-Euclidean
// algorithm. Both inputs must be nonzero.
OrePoly llcm(const OrePoly& f, const OrePoly& g);

// True when rdiv(f, g) has zero remainder.
bool right_divides(const OrePoly& g, const OrePoly& f);

// Reduction modulo tau^d - 1: coefficient i of the result is the sum of the
// coefficients of f at indices congruent to i mod d. Acts identically on K.
OrePoly fold_mod_taud(const OrePoly& f);

// Naive evaluation sum a_i x^{q^i} with iterated Frobenius.
FieldElement oeval(const OrePoly& f, const FieldElement& x);

// Pluggable multiplication kernel.
class OreMulStrategy {
  public:
    virtual ~OreMulStrategy() = default;
    virtual OrePoly multiply(const OrePoly& f, const OrePoly& g) const = 0;
};

// Schoolbook O(n^2) products with incremental tau-twists.
class SchoolbookOreMul final : public OreMulStrategy {
  public:
    OrePoly multiply(const OrePoly& f, const OrePoly& g) const override;
};

const OreMulStrategy& ore_mul_strategy();
void set_ore_mul_strategy(std::shared_ptr<const OreMulStrategy> s);

} // namespace drinfeld
