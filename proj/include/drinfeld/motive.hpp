#pragma once

#include <vector>

#include "drinfeld/module.hpp"

namespace drinfeld {

// Polynomial over K, ascending coefficients (coordinate entries of the
// Anderson motive; no ring arithmetic needed beyond storage).
class KPoly {
  public:
    KPoly() = default;
    explicit KPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
    KPoly(const FieldCtx& ctx, std::vector<FieldElement> coeffs);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? Poly::kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

  private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<FieldElement> c_;
};

// Coordinates of an Ore polynomial in the canonical K[T]-basis
// {1, tau, ..., tau^{r-1}} of the Anderson motive: f = sum_i C_i(T) . tau^i
// under the action T . g = g * phi_T.
struct MotiveCoords {
    std::vector<KPoly> coords; // length r
};

// Computed by iterated right division by phi_T: each remainder (tau-degree
// < r) contributes one T-layer.
MotiveCoords motive_coords(const DrinfeldModule& phi, const OrePoly& f);

// Substitutes the K[T]-action back; inverse of motive_coords.
OrePoly motive_reconstruct(const DrinfeldModule& phi, const MotiveCoords& mc);

// The rationality invariant g_phi: monic gcd of the F_q[T]-coordinates of
// tau^d - 1 in the motive (each K[T]-coordinate expanded over the basis).
// For a coprime to char_p, the a-torsion is rational iff a divides g_phi.
Poly rational_lcm(const DrinfeldModule& phi);

// General criterion: phi_a right-divides tau^h (tau^d - 1), with h the
// tau-valuation of phi_a. Valid for separable and inseparable a alike.
bool is_torsion_rational(const DrinfeldModule& phi, const Poly& a);

// Largest s with rational p^s-torsion, where p = char_p: descending search
// from the p-adic valuation of the product of the invariant factors.
// pts must be module_of_points_invariants(phi).
unsigned max_rational_p_power(const DrinfeldModule& phi, const ModuleStructure& pts);

} // namespace drinfeld
