#pragma once

#include <functional>
#include <vector>

#include "drinfeld/module.hpp"

namespace drinfeld {

// Brute-force ground truth, used only by tests and the verify command.
// These paths never call frobenius_normal_form or multipoint_eval, so a bug
// shared with the main pipeline cannot mask itself.

constexpr std::uint64_t kOracleSizeCap = 4096; // maximum q^d

// q^d when it fits under the oracle cap; TooLarge otherwise.
std::uint64_t field_size_checked(const FieldCtx& ctx);

// Element with enumeration index n (digits base q are the coordinates).
FieldElement element_from_index(const FieldCtx& ctx, std::uint64_t n);

// Monic generator of { a : phi_a(x) = 0 }, by enumerating monic polynomials
// of ascending degree. Returns 1 for x = 0.
Poly brute_annihilator(const DrinfeldModule& phi, const FieldElement& x);

// Invariant factors of the F_q[T]-module on { x in K : predicate(x) }, via
// exhaustive enumeration, naive evaluation and the Smith normal form of
// T*Id - (induced action). The subset must be an F_q-subspace stable under
// phi_T (NotSubmodule).
std::vector<Poly> brute_module_structure(const DrinfeldModule& phi,
                                         const std::function<bool(const FieldElement&)>& predicate);

// All monic irreducible divisors of f, by enumeration (test plumbing).
std::vector<Poly> irreducible_divisors(const Poly& f);

// #ker_K(phi_a) by enumeration.
std::uint64_t count_torsion_points(const DrinfeldModule& phi, const Poly& a);

} // namespace drinfeld
