#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

// Snapshot of the instrumentation counters: arithmetic operations in K and
// applications of the Frobenius endomorphism, counted separately.
struct OpCounter {
    std::uint64_t arith_ops = 0;
    std::uint64_t frobenius_apps = 0;

    OpCounter operator-(const OpCounter& o) const {
        return {arith_ops - o.arith_ops, frobenius_apps - o.frobenius_apps};
    }
};

struct FieldSpec {
    std::uint64_t p = 0;
    unsigned e = 0;
    std::vector<std::uint64_t> fq_modulus; // over F_p, ascending, monic, degree e
    unsigned d = 0;
    std::vector<std::vector<std::uint64_t>> k_modulus; // over F_q, ascending, monic, degree d
};

class FieldElement;

// The working field K = F_q[z]/(k_modulus) over F_q = F_p[w]/(fq_modulus),
// with the F_q-basis (1, z, ..., z^{d-1}) and the precomputed matrix of the
// Frobenius endomorphism x -> x^q in that basis. Carries the operation
// counters; all other state is immutable after construction.
class FieldCtx {
  public:
    explicit FieldCtx(const FieldSpec& spec);
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    const FqCtx& fq() const { return fq_; }
    std::uint64_t p() const { return fq_.p(); }
    unsigned e() const { return fq_.e(); }
    std::uint64_t q() const { return fq_.q(); }
    unsigned d() const { return d_; }
    const Poly& k_modulus() const { return kmod_; }
    const MatFq& frobenius_matrix() const { return frob_; }
    FieldSpec spec() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const; // the class of z
    FieldElement basis_element(unsigned i) const; // z^i, 0 <= i < d
    FieldElement from_coeffs(std::vector<fq_t> coeffs) const; // length <= d, zero-padded
    FieldElement from_fq(fq_t c) const;

    OpCounter counters() const {
        return {arith_.load(std::memory_order_relaxed), frob_apps_.load(std::memory_order_relaxed)};
    }
    void reset_counters() const {
        arith_.store(0, std::memory_order_relaxed);
        frob_apps_.store(0, std::memory_order_relaxed);
    }

    void count_arith(std::uint64_t n = 1) const { arith_.fetch_add(n, std::memory_order_relaxed); }
    void count_frobenius(std::uint64_t n) const {
        frob_apps_.fetch_add(n, std::memory_order_relaxed);
    }

    // Matrix of x -> x^{q^k} for 0 <= k < d, built lazily.
    const MatFq& frobenius_power(unsigned k) const;

    // Opaque per-context cache slot (holds the llcm tree over the basis).
    std::shared_ptr<const void>& cache_slot() const { return cache_; }
    std::mutex& cache_mutex() const { return cache_mu_; }

  private:
    FqCtx fq_;
    unsigned d_;
    Poly kmod_;
    MatFq frob_;
    mutable std::vector<MatFq> frob_pows_;
    mutable std::once_flag frob_pows_once_;
    mutable std::atomic<std::uint64_t> arith_{0};
    mutable std::atomic<std::uint64_t> frob_apps_{0};
    mutable std::shared_ptr<const void> cache_;
    mutable std::mutex cache_mu_;
};

// An element of K: d coefficients over F_q in the basis (1, z, ..., z^{d-1}).
// Immutable value; carries a pointer to its context, which must outlive it.
class FieldElement {
  public:
    FieldElement() = default;

    const FieldCtx& ctx() const { return *ctx_; }
    bool has_ctx() const { return ctx_ != nullptr; }
    const std::vector<fq_t>& coeffs() const { return c_; }
    fq_t coeff(std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class FieldCtx;
    FieldElement(const FieldCtx& ctx, std::vector<fq_t> c) : ctx_(&ctx), c_(std::move(c)) {}

    const FieldCtx* ctx_ = nullptr;
    std::vector<fq_t> c_;
};

// Each call counts one arithmetic operation in K.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
// Scalar multiplication by an F_q constant; one arithmetic operation.
FieldElement mul_fq(fq_t c, const FieldElement& a);

// x^{q^k} via the precomputed Frobenius matrix power; counts k mod d
// Frobenius applications (none when k = 0 mod d).
FieldElement frobenius(const FieldElement& x, std::uint64_t k = 1);

// Monic minimal polynomial of x over F_q (uncounted; plumbing).
Poly min_poly(const FieldElement& x);

} // namespace drinfeld
