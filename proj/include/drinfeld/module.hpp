#pragma once

#include <memory>
#include <vector>

#include "drinfeld/meval.hpp"

namespace drinfeld {

// A Drinfeld F_q[T]-module over K, given by phi_T. gamma(T) is the constant
// coefficient of phi_T; the characteristic char_p is the monic minimal
// polynomial of gamma(T) over F_q.
class DrinfeldModule {
  public:
    DrinfeldModule(const FieldCtx& ctx, OrePoly phi_t);

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldElement& gamma_T() const { return gamma_; }
    const OrePoly& phi_T() const { return phi_t_; }
    unsigned rank() const { return rank_; }
    const Poly& char_p() const { return char_p_; }

  private:
    const FieldCtx* ctx_;
    FieldElement gamma_;
    OrePoly phi_t_;
    unsigned rank_;
    Poly char_p_;
};

// phi_a by Horner's rule in phi_T; deg_tau = rank * deg a.
OrePoly phi_eval(const DrinfeldModule& phi, const Poly& a);

// A morphism u from phi, with u * phi_T = psi_T * u. The zero morphism has
// psi = phi.
class Morphism {
  public:
    const DrinfeldModule& source() const { return phi_; }
    const OrePoly& u() const { return u_; }
    const OrePoly& target_phi_T() const { return psi_t_; }
    bool is_zero() const { return u_.is_zero(); }

  private:
    friend Morphism morphism_new(const DrinfeldModule& phi, OrePoly u);
    Morphism(DrinfeldModule phi, OrePoly u, OrePoly psi_t)
        : phi_(std::move(phi)), u_(std::move(u)), psi_t_(std::move(psi_t)) {}

    DrinfeldModule phi_;
    OrePoly u_;
    OrePoly psi_t_;
};

// Validates u mechanically: the remainder of u * phi_T by u must vanish
// (NotAMorphism otherwise); the quotient is psi_T. Checking a = T suffices
// for A = F_q[T].
Morphism morphism_new(const DrinfeldModule& phi, OrePoly u);
Morphism zero_morphism(const DrinfeldModule& phi);

// Invariant factors d_1 | ... | d_l and a Frobenius decomposition
// x_1, ..., x_l. The trivial module is the empty chain and empty generators.
struct ModuleStructure {
    std::vector<Poly> factors;
    std::vector<FieldElement> generators;
};

// Main pipeline: matrix of u, kernel basis, induced action of phi_T,
// Frobenius normal form with transform, generators mapped back to K.
ModuleStructure morphism_kernel_invariants(const Morphism& m);

// Invariants of the full module of rational points phi(K), i.e. the kernel
// of the zero morphism.
ModuleStructure module_of_points_invariants(const DrinfeldModule& phi);

struct ChainGcdResult {
    std::vector<Poly> gammas; // gcd(a, d_i), a divisibility chain itself
    std::vector<Poly> rhos;   // d_i / gamma_i
};

// Top-down chain gcd: one reduction a mod d_l, then gamma_i = gcd(gamma_{i+1}, d_i).
// chain must be a divisibility chain of monic nonconstant polynomials
// (NotAChain); a must be nonzero (ZeroInput).
ChainGcdResult chain_gcd(const Poly& a, const std::vector<Poly>& chain);

// a-torsion invariants from the invariants of phi(K): factors gamma_i and
// generators phi_{rho_i}(x_i), restricted to indices with gamma_i != 1.
ModuleStructure torsion_from_points(const DrinfeldModule& phi, const Poly& a,
                                    const ModuleStructure& pts);

// Pluggable strategy for evaluating a(phi_T) on a point (the EV primitive).
class VectorEvalStrategy {
  public:
    virtual ~VectorEvalStrategy() = default;
    virtual FieldElement eval(const DrinfeldModule& phi, const Poly& a,
                              const FieldElement& x) const = 0;
};

// Horner on a applied to x through repeated phi_T evaluation.
class HornerVectorEval final : public VectorEvalStrategy {
  public:
    FieldElement eval(const DrinfeldModule& phi, const Poly& a,
                      const FieldElement& x) const override;
};

const VectorEvalStrategy& vector_eval_strategy();
void set_vector_eval_strategy(std::shared_ptr<const VectorEvalStrategy> s);

// a(phi_T)(x) through the current strategy.
FieldElement phi_action(const DrinfeldModule& phi, const Poly& a, const FieldElement& x);

} // namespace drinfeld
