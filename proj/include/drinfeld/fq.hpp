#pragma once

#include <cstdint>
#include <vector>

#include "drinfeld/errors.hpp"

namespace drinfeld {

// An element of F_q = F_p[w]/(m), encoded as the integer sum c_i p^i where
// (c_0, ..., c_{e-1}) are its coefficients in the monomial basis. The
// encoding is a bijection [0, q) <-> F_q, so elements can double as dense
// enumeration indices.
using fq_t = std::uint64_t;

// Arithmetic context for the coefficient field F_q = F_{p^e}.
class FqCtx {
  public:
    // `modulus` is the defining polynomial over F_p, ascending, monic, of
    // degree e >= 1. For e >= 2 it is checked for irreducibility.
    FqCtx(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    fq_t zero() const { return 0; }
    fq_t one() const { return 1; }

    fq_t add(fq_t a, fq_t b) const;
    fq_t sub(fq_t a, fq_t b) const;
    fq_t neg(fq_t a) const;
    fq_t mul(fq_t a, fq_t b) const;
    fq_t inv(fq_t a) const;
    fq_t pow(fq_t a, std::uint64_t k) const;

    // Embeds an integer through F_p (reduced mod p).
    fq_t from_int(std::uint64_t v) const { return v % p_; }

    // Coefficients over F_p, ascending, length e.
    std::vector<std::uint64_t> decode(fq_t a) const;
    fq_t encode(const std::vector<std::uint64_t>& digits) const;

  private:
    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<std::uint64_t> mod_;
};

} // namespace drinfeld
