#include "drinfeld/meval.hpp"

namespace drinfeld {

namespace {

// L_x = tau - tau(x)/x for a nonzero point.
OrePoly leaf_poly(const FieldElement& x) {
    const FieldCtx& ctx = x.ctx();
    const FieldElement c = neg(mul(frobenius(x, 1), inv(x)));
    return OrePoly(ctx, {c, ctx.one()});
}

std::unique_ptr<LlcmTreeNode> build_node(const std::vector<FieldElement>& pts, std::size_t lo,
                                         std::size_t hi) {
    auto node = std::make_unique<LlcmTreeNode>();
    node->lo = lo;
    node->hi = hi;
    if (hi - lo == 1) {
        node->poly = leaf_poly(pts[lo]);
        return node;
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2; // left half gets ceil(l/2)
    node->left = build_node(pts, lo, mid);
    node->right = build_node(pts, mid, hi);
    node->poly = llcm(node->left->poly, node->right->poly);
    return node;
}

void eval_node(const LlcmTreeNode& node, const OrePoly& f,
               const std::vector<FieldElement>& pts, std::vector<FieldElement>& out) {
    if (node.is_leaf()) {
        const OrePoly rem = rdiv(f, node.poly).remainder; // constant
        const FieldElement& x = pts[node.lo];
        out[node.lo] = rem.is_zero() ? x.ctx().zero() : mul(rem.coeff(0), x);
        return;
    }
    eval_node(*node.left, rdiv(f, node.left->poly).remainder, pts, out);
    eval_node(*node.right, rdiv(f, node.right->poly).remainder, pts, out);
}

} // namespace

LlcmTree build_llcm_tree(const std::vector<FieldElement>& points) {
    if (points.empty()) fail(Errc::EmptyInput, "llcm tree over no points");
    const FieldCtx& ctx = points.front().ctx();
    for (const auto& x : points) {
        if (&x.ctx() != &ctx) fail(Errc::ContextMismatch, "points from different fields");
        if (x.is_zero()) fail(Errc::ZeroPoint, "llcm tree point must be nonzero");
    }
    return LlcmTree(ctx, points, build_node(points, 0, points.size()));
}

std::vector<FieldElement> multipoint_eval(const OrePoly& f,
                                          const std::vector<FieldElement>& points,
                                          const LlcmTree& tree) {
    const FieldCtx& ctx = f.ctx();
    if (&tree.ctx() != &ctx) fail(Errc::ContextMismatch, "tree from a different field");

    std::vector<std::size_t> nonzero_at;
    std::vector<FieldElement> filtered;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (&points[i].ctx() != &ctx) fail(Errc::ContextMismatch, "point from a different field");
        if (points[i].is_zero()) continue;
        nonzero_at.push_back(i);
        filtered.push_back(points[i]);
    }
    if (filtered.size() != tree.points().size())
        fail(Errc::TreeMismatch, "tree built over a different point count");
    for (std::size_t i = 0; i < filtered.size(); ++i)
        if (filtered[i] != tree.points()[i])
            fail(Errc::TreeMismatch, "tree built over different points");

    std::vector<FieldElement> out(points.size(), ctx.zero());
    if (filtered.empty()) return out;

    std::vector<FieldElement> vals(filtered.size(), ctx.zero());
    eval_node(tree.root(), fold_mod_taud(f), filtered, vals);
    for (std::size_t i = 0; i < vals.size(); ++i) out[nonzero_at[i]] = vals[i];
    return out;
}

const LlcmTree& basis_llcm_tree(const FieldCtx& ctx) {
    std::lock_guard<std::mutex> lock(ctx.cache_mutex());
    auto& slot = ctx.cache_slot();
    if (!slot) {
        std::vector<FieldElement> basis;
        basis.reserve(ctx.d());
        for (unsigned i = 0; i < ctx.d(); ++i) basis.push_back(ctx.basis_element(i));
        slot = std::shared_ptr<const void>(new LlcmTree(build_llcm_tree(basis)),
                                           [](const void* p) {
                                               delete static_cast<const LlcmTree*>(p);
                                           });
    }
    return *static_cast<const LlcmTree*>(slot.get());
}

MatFq ore_matrix(const OrePoly& f) {
    const FieldCtx& ctx = f.ctx();
    const LlcmTree& tree = basis_llcm_tree(ctx);
    const std::vector<FieldElement> vals = multipoint_eval(f, tree.points(), tree);
    MatFq m(ctx.fq(), ctx.d(), ctx.d());
    for (unsigned j = 0; j < ctx.d(); ++j)
        for (unsigned i = 0; i < ctx.d(); ++i) m.at(i, j) = vals[j].coeff(i);
    return m;
}

MatFq ore_matrix_naive(const OrePoly& f) {
    const FieldCtx& ctx = f.ctx();
    MatFq m(ctx.fq(), ctx.d(), ctx.d());
    for (unsigned j = 0; j < ctx.d(); ++j) {
        const FieldElement y = oeval(f, ctx.basis_element(j));
        for (unsigned i = 0; i < ctx.d(); ++i) m.at(i, j) = y.coeff(i);
    }
    return m;
}

} // namespace drinfeld
