#pragma once

#include <memory>
#include <vector>

#include "drinfeld/ore.hpp"

namespace drinfeld {

// Binary llcm tree over nonzero evaluation points: each leaf holds
// L_x = tau - tau(x)/x, each internal node the llcm of its children.
struct LlcmTreeNode {
    OrePoly poly;
    std::size_t lo = 0, hi = 0; // index range [lo, hi) of covered points
    std::unique_ptr<LlcmTreeNode> left, right;

    bool is_leaf() const { return !left; }
};

class LlcmTree {
  public:
    LlcmTree(const FieldCtx& ctx, std::vector<FieldElement> points,
             std::unique_ptr<LlcmTreeNode> root)
        : ctx_(&ctx), points_(std::move(points)), root_(std::move(root)) {}

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<FieldElement>& points() const { return points_; }
    const LlcmTreeNode& root() const { return *root_; }

  private:
    const FieldCtx* ctx_;
    std::vector<FieldElement> points_;
    std::unique_ptr<LlcmTreeNode> root_;
};

// Points must be nonzero (ZeroPoint) and nonempty (EmptyInput). Splits at
// ceil(l/2); never pads.
LlcmTree build_llcm_tree(const std::vector<FieldElement>& points);

// Evaluates f at the given points using a tree built over the nonzero points
// among them, in order (TreeMismatch otherwise). f is folded mod tau^d - 1
// first; zero points short-circuit to 0.
std::vector<FieldElement> multipoint_eval(const OrePoly& f,
                                          const std::vector<FieldElement>& points,
                                          const LlcmTree& tree);

// The llcm tree over the basis (1, z, ..., z^{d-1}), built once per context.
const LlcmTree& basis_llcm_tree(const FieldCtx& ctx);

// d x d matrix of f over F_q relative to the basis: column i holds the
// coordinates of f(z^i). Fast path: fold, then multipoint evaluation on the
// cached basis tree.
MatFq ore_matrix(const OrePoly& f);

// Column-by-column naive evaluation; Theta(deg_tau(f) * d) Frobenius
// applications.
MatFq ore_matrix_naive(const OrePoly& f);

} // namespace drinfeld
