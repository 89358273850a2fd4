#include "drinfeld/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace drinfeld {

namespace {

const FqCtx& common_fq(const MatFq& a, const MatFq& b) {
    if (&a.fq() != &b.fq()) fail(Errc::ContextMismatch, "matrices over different fields");
    return a.fq();
}

} // namespace

MatFq MatFq::identity(const FqCtx& fq, std::size_t n) {
    MatFq m(fq, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = fq.one();
    return m;
}

MatFq MatFq::from_columns(const FqCtx& fq, std::size_t rows,
                          const std::vector<std::vector<fq_t>>& cols) {
    MatFq m(fq, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail(Errc::DegreeMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<fq_t> MatFq::column(std::size_t j) const {
    std::vector<fq_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

bool operator==(const MatFq& a, const MatFq& b) {
    return a.fq_ == b.fq_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

MatFq mat_mul(const MatFq& a, const MatFq& b) {
    const FqCtx& fq = common_fq(a, b);
    if (a.cols() != b.rows()) fail(Errc::DegreeMismatch, "matrix product shape mismatch");
    MatFq c(fq, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const fq_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = fq.add(c.at(i, j), fq.mul(aik, b.at(k, j)));
        }
    return c;
}

MatFq mat_add(const MatFq& a, const MatFq& b) {
    const FqCtx& fq = common_fq(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::DegreeMismatch, "matrix sum shape mismatch");
    MatFq c(fq, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = fq.add(a.at(i, j), b.at(i, j));
    return c;
}

std::vector<fq_t> mat_vec(const MatFq& a, const std::vector<fq_t>& x) {
    const FqCtx& fq = a.fq();
    if (a.cols() != x.size()) fail(Errc::DegreeMismatch, "matrix-vector shape mismatch");
    std::vector<fq_t> y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        fq_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && x[j] != 0) acc = fq.add(acc, fq.mul(a.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

MatFq mat_pow(const MatFq& a, std::uint64_t k) {
    if (a.rows() != a.cols()) fail(Errc::DegreeMismatch, "power of a non-square matrix");
    MatFq out = MatFq::identity(a.fq(), a.rows());
    MatFq base = a;
    while (k) {
        if (k & 1) out = mat_mul(out, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return out;
}

MatFq mat_inverse(const MatFq& a) {
    const FqCtx& fq = a.fq();
    if (a.rows() != a.cols()) fail(Errc::DegreeMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    MatFq m = a;
    MatFq inv = MatFq::identity(fq, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) fail(Errc::RankDeficient, "matrix is singular");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        const fq_t s = fq.inv(m.at(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(k, j) = fq.mul(m.at(k, j), s);
            inv.at(k, j) = fq.mul(inv.at(k, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            const fq_t c = m.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = fq.sub(m.at(i, j), fq.mul(c, m.at(k, j)));
                inv.at(i, j) = fq.sub(inv.at(i, j), fq.mul(c, inv.at(k, j)));
            }
        }
    }
    return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(MatFq& m) {
    const FqCtx& fq = m.fq();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        const fq_t s = fq.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = fq.mul(m.at(row, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const fq_t c = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = fq.sub(m.at(i, j), fq.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<fq_t>> kernel_basis(const MatFq& m) {
    const FqCtx& fq = m.fq();
    MatFq r = m;
    const std::vector<std::size_t> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<fq_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<fq_t> v(m.cols(), 0);
        v[free_col] = fq.one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = fq.neg(r.at(pi, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFq solve_in_span(const MatFq& n, const MatFq& y) {
    const FqCtx& fq = common_fq(n, y);
    if (n.rows() != y.rows()) fail(Errc::DegreeMismatch, "solve_in_span shape mismatch");
    const std::size_t rows = n.rows(), nc = n.cols(), yc = y.cols();
    // Eliminate on the augmented matrix [N | Y].
    MatFq aug(fq, rows, nc + yc);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug.at(i, j) = n.at(i, j);
        for (std::size_t j = 0; j < yc; ++j) aug.at(i, nc + j) = y.at(i, j);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(nc, rows);
    for (std::size_t col = 0; col < nc; ++col) {
        std::size_t piv = row;
        while (piv < rows && aug.at(piv, col) == 0) ++piv;
        if (piv == rows) fail(Errc::RankDeficient, "coefficient matrix lacks full column rank");
        if (piv != row)
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        const fq_t s = fq.inv(aug.at(row, col));
        for (std::size_t j = col; j < aug.cols(); ++j) aug.at(row, j) = fq.mul(aug.at(row, j), s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            const fq_t c = aug.at(i, col);
            for (std::size_t j = col; j < aug.cols(); ++j)
                aug.at(i, j) = fq.sub(aug.at(i, j), fq.mul(c, aug.at(row, j)));
        }
        pivot_of_col[col] = row;
        ++row;
    }
    // Rows below the rank must have vanished entirely.
    for (std::size_t i = row; i < rows; ++i)
        for (std::size_t j = 0; j < yc; ++j)
            if (aug.at(i, nc + j) != 0)
                fail(Errc::NotInSpan, "right-hand side not in the column span");
    MatFq x(fq, nc, yc);
    for (std::size_t col = 0; col < nc; ++col)
        for (std::size_t j = 0; j < yc; ++j) x.at(col, j) = aug.at(pivot_of_col[col], nc + j);
    return x;
}

// ---------------------------------------------------------------------------
// Frobenius normal form via cyclic (spin basis) decomposition.

namespace {

struct SpinBasis {
    // Echelonized spans with combination tracking: ech[i] is a reduced
    // vector; combo[i] expresses it over the inserted vectors.
    std::vector<std::vector<fq_t>> ech;
    std::vector<std::vector<fq_t>> combo;
    std::vector<std::size_t> lead; // leading index of ech[i]

    // Reduces v against the rows. Returns the residual and the combination
    // used (over inserted vector indices, length = #inserted so far).
    std::pair<std::vector<fq_t>, std::vector<fq_t>> reduce(const FqCtx& fq,
                                                           std::vector<fq_t> v) const {
        std::vector<fq_t> c(ech.size() + 1, 0);
        for (std::size_t i = 0; i < ech.size(); ++i) {
            const fq_t coeff = v[lead[i]];
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = fq.sub(v[j], fq.mul(coeff, ech[i][j]));
            for (std::size_t j = 0; j < combo[i].size(); ++j)
                c[j] = fq.sub(c[j], fq.mul(coeff, combo[i][j]));
        }
        return {std::move(v), std::move(c)};
    }

    // Inserts a (nonzero residual, combination) pair; the new vector gets
    // combination c + e_{#inserted}.
    void insert(const FqCtx& fq, std::vector<fq_t> residual, std::vector<fq_t> c) {
        std::size_t ld = 0;
        while (residual[ld] == 0) ++ld;
        const fq_t s = fq.inv(residual[ld]);
        for (auto& x : residual) x = fq.mul(x, s);
        c[combo.size()] = fq.one(); // own index
        for (auto& x : c) x = fq.mul(x, s);
        ech.push_back(std::move(residual));
        combo.push_back(std::move(c));
        lead.push_back(ld);
    }
};

// Order polynomial of v under M (monic generator of {f : f(M)v = 0}) along
// with the spin chain v, Mv, ..., M^{deg-1}v.
struct SpinResult {
    Poly order;
    std::vector<std::vector<fq_t>> chain;
};

SpinResult spin_order(const MatFq& m, const std::vector<fq_t>& v) {
    const FqCtx& fq = m.fq();
    SpinBasis sb;
    std::vector<std::vector<fq_t>> chain;
    std::vector<fq_t> cur = v;
    while (true) {
        auto [residual, combination] = sb.reduce(fq, cur);
        const bool zero = std::all_of(residual.begin(), residual.end(),
                                      [](fq_t x) { return x == 0; });
        if (zero) {
            // residual = M^k v + sum_j combination[j] * M^j v, so the
            // combination entries are the order coefficients directly.
            std::vector<fq_t> coeffs = std::move(combination);
            coeffs.back() = fq.one();
            return {Poly(fq, std::move(coeffs)), std::move(chain)};
        }
        sb.insert(fq, std::move(residual), std::move(combination));
        chain.push_back(cur);
        cur = mat_vec(m, cur);
    }
}

// f(M) v by Horner.
std::vector<fq_t> poly_apply(const MatFq& m, const Poly& f, const std::vector<fq_t>& v) {
    const FqCtx& fq = m.fq();
    std::vector<fq_t> acc(v.size(), 0);
    if (f.is_zero()) return acc;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = mat_vec(m, acc);
        const fq_t c = f.coeff(k);
        if (c != 0)
            for (std::size_t i = 0; i < v.size(); ++i) acc[i] = fq.add(acc[i], fq.mul(c, v[i]));
    }
    return acc;
}

// Removes from a every factor sharing a prime with b.
Poly strip_common(const Poly& a, const Poly& b) {
    Poly out = a;
    while (true) {
        Poly g = pgcd(out, b);
        if (g.degree() < 1) return out;
        out = pdiv(out, g).quotient;
    }
}

// Factorization-free coprime splitting: f | a, g | b, f*g = lcm(a, b),
// gcd(f, g) = 1.
std::pair<Poly, Poly> coprime_split(const Poly& a, const Poly& b) {
    const Poly sa = strip_common(a, b);
    const Poly sb = strip_common(b, a);
    const Poly l = pmonic(pdiv(pmul(a, b), pgcd(a, b)).quotient);
    const Poly s = pdiv(l, pmul(sa, sb)).quotient; // shared primes at max multiplicity
    if (s.degree() < 1) return {pmonic(sa), pmonic(sb)};
    const Poly t = pdiv(s, pgcd(s, b)).quotient; // primes where a strictly wins
    const Poly fs = pdiv(s, strip_common(s, t)).quotient;
    const Poly gs = pdiv(s, fs).quotient;
    return {pmonic(pmul(sa, fs)), pmonic(pmul(sb, gs))};
}

// Vector of maximal order (its order is the minimal polynomial of M).
std::pair<std::vector<fq_t>, Poly> max_order_vector(const MatFq& m) {
    const FqCtx& fq = m.fq();
    const std::size_t n = m.rows();
    std::vector<fq_t> w(n, 0);
    w[0] = fq.one();
    Poly order = spin_order(m, w).order;
    for (std::size_t i = 1; i < n; ++i) {
        if (static_cast<std::size_t>(order.degree()) == n) break;
        std::vector<fq_t> ei(n, 0);
        ei[i] = fq.one();
        const Poly oi = spin_order(m, ei).order;
        if (pdivides(oi, order)) continue; // lcm unchanged
        auto [f, g] = coprime_split(order, oi);
        std::vector<fq_t> wa = poly_apply(m, pdiv(order, f).quotient, w);
        std::vector<fq_t> wb = poly_apply(m, pdiv(oi, g).quotient, ei);
        for (std::size_t j = 0; j < n; ++j) w[j] = fq.add(wa[j], wb[j]);
        order = pmul(f, g);
    }
    return {std::move(w), std::move(order)};
}

} // namespace

Poly minimal_polynomial(const MatFq& m) {
    if (m.rows() != m.cols()) fail(Errc::DegreeMismatch, "minimal polynomial of non-square matrix");
    if (m.rows() == 0) return Poly::one(m.fq());
    return max_order_vector(m).second;
}

FrobeniusForm frobenius_normal_form(const MatFq& m) {
    const FqCtx& fq = m.fq();
    if (m.rows() != m.cols()) fail(Errc::DegreeMismatch, "Frobenius form of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {{}, MatFq(fq, 0, 0)};

    auto [w, mu] = max_order_vector(m);
    const std::size_t bdeg = static_cast<std::size_t>(mu.degree());

    // Spin chain of the maximal vector.
    std::vector<std::vector<fq_t>> wchain;
    {
        std::vector<fq_t> cur = w;
        for (std::size_t j = 0; j < bdeg; ++j) {
            wchain.push_back(cur);
            cur = mat_vec(m, cur);
        }
    }

    if (bdeg == n) {
        return {{mu}, MatFq::from_columns(fq, n, wchain)};
    }

    // Complete the chain with standard basis vectors to a basis of the space.
    std::vector<std::size_t> chosen;
    {
        SpinBasis sb;
        for (const auto& v : wchain) {
            auto [res, comb] = sb.reduce(fq, v);
            sb.insert(fq, std::move(res), std::move(comb));
        }
        for (std::size_t i = 0; i < n && sb.ech.size() < n; ++i) {
            std::vector<fq_t> ei(n, 0);
            ei[i] = fq.one();
            auto [res, comb] = sb.reduce(fq, ei);
            if (std::all_of(res.begin(), res.end(), [](fq_t x) { return x == 0; })) continue;
            sb.insert(fq, std::move(res), std::move(comb));
            chosen.push_back(i);
        }
    }

    std::vector<std::vector<fq_t>> basis_cols = wchain;
    for (auto i : chosen) {
        std::vector<fq_t> ei(n, 0);
        ei[i] = fq.one();
        basis_cols.push_back(std::move(ei));
    }
    const MatFq c = MatFq::from_columns(fq, n, basis_cols);
    const MatFq cinv = mat_inverse(c);
    const MatFq a = mat_mul(cinv, mat_mul(m, c));

    // Action induced on the quotient by the cyclic subspace of w.
    const std::size_t qn = n - bdeg;
    MatFq qact(fq, qn, qn);
    for (std::size_t i = 0; i < qn; ++i)
        for (std::size_t j = 0; j < qn; ++j) qact.at(i, j) = a.at(bdeg + i, bdeg + j);

    FrobeniusForm sub = frobenius_normal_form(qact);

    // Lift each quotient generator and correct it to kill its order exactly.
    std::vector<Poly> blocks;
    std::vector<std::vector<fq_t>> transform_cols;
    std::size_t offset = 0;
    for (const Poly& dbar : sub.blocks) {
        std::vector<fq_t> ybar = sub.transform.column(offset);
        offset += static_cast<std::size_t>(dbar.degree());

        std::vector<fq_t> x(n, 0);
        for (std::size_t j = 0; j < qn; ++j) {
            if (ybar[j] == 0) continue;
            x[chosen[j]] = fq.add(x[chosen[j]], ybar[j]); // lift through chosen basis vectors
        }
        // dbar(M) x lies in the cyclic subspace; read off h with dbar(M)x = h(M)w.
        const std::vector<fq_t> u = poly_apply(m, dbar, x);
        const std::vector<fq_t> coords = mat_vec(cinv, u);
        std::vector<fq_t> hc(coords.begin(), coords.begin() + bdeg);
        const Poly h(fq, std::move(hc));
        const auto [g, rem] = pdiv(h, dbar);
        if (!rem.is_zero()) fail(Errc::NotStabilized, "cyclic correction failed");
        const std::vector<fq_t> corr = poly_apply(m, g, w);
        for (std::size_t j = 0; j < n; ++j) x[j] = fq.sub(x[j], corr[j]);

        blocks.push_back(dbar);
        std::vector<fq_t> cur = x;
        for (int j = 0; j < dbar.degree(); ++j) {
            transform_cols.push_back(cur);
            cur = mat_vec(m, cur);
        }
    }
    blocks.push_back(mu);
    for (auto& col : wchain) transform_cols.push_back(std::move(col));

    return {std::move(blocks), MatFq::from_columns(fq, n, transform_cols)};
}

MatFq block_companion(const FqCtx& fq, const std::vector<Poly>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(b.degree());
    MatFq m(fq, n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        const std::size_t k = static_cast<std::size_t>(b.degree());
        for (std::size_t j = 0; j + 1 < k; ++j) m.at(off + j + 1, off + j) = fq.one();
        for (std::size_t i = 0; i < k; ++i) m.at(off + i, off + k - 1) = fq.neg(b.coeff(i));
        off += k;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Polynomial matrices, Smith normal form, Fitting oracle.

MatPoly MatPoly::identity(const FqCtx& fq, std::size_t n) {
    MatPoly m(fq, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(fq);
    return m;
}

MatPoly matpoly_mul(const MatPoly& a, const MatPoly& b) {
    if (&a.fq() != &b.fq()) fail(Errc::ContextMismatch, "matrices over different fields");
    if (a.cols() != b.rows()) fail(Errc::DegreeMismatch, "matrix product shape mismatch");
    MatPoly c(a.fq(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = padd(c.at(i, j), pmul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

MatPoly characteristic_matrix(const MatFq& m) {
    if (m.rows() != m.cols()) fail(Errc::DegreeMismatch, "characteristic matrix of non-square");
    const FqCtx& fq = m.fq();
    MatPoly p(fq, m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Poly entry = Poly::constant(fq, fq.neg(m.at(i, j)));
            if (i == j) entry = padd(entry, Poly::monomial(fq, 1));
            p.at(i, j) = std::move(entry);
        }
    return p;
}

SmithForm smith_normal_form(const MatPoly& p) {
    const FqCtx& fq = p.fq();
    const std::size_t rows = p.rows(), cols = p.cols();
    MatPoly d = p;
    MatPoly u = MatPoly::identity(fq, rows);
    MatPoly v = MatPoly::identity(fq, cols);

    auto swap_rows = [&](std::size_t i1, std::size_t i2) {
        if (i1 == i2) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(d.at(i1, j), d.at(i2, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(i1, j), u.at(i2, j));
    };
    auto swap_cols = [&](std::size_t j1, std::size_t j2) {
        if (j1 == j2) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(d.at(i, j1), d.at(i, j2));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, j1), v.at(i, j2));
    };
    auto add_row_multiple = [&](std::size_t dst, std::size_t src, const Poly& c) {
        for (std::size_t j = 0; j < cols; ++j) d.at(dst, j) = padd(d.at(dst, j), pmul(c, d.at(src, j)));
        for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) = padd(u.at(dst, j), pmul(c, u.at(src, j)));
    };
    auto add_col_multiple = [&](std::size_t dst, std::size_t src, const Poly& c) {
        for (std::size_t i = 0; i < rows; ++i) d.at(i, dst) = padd(d.at(i, dst), pmul(c, d.at(i, src)));
        for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) = padd(v.at(i, dst), pmul(c, v.at(i, src)));
    };
    auto scale_row = [&](std::size_t i, fq_t s) {
        for (std::size_t j = 0; j < cols; ++j) d.at(i, j) = pscale(d.at(i, j), s);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) = pscale(u.at(i, j), s);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
        while (true) {
            // Pivot: nonzero entry of minimal degree, smallest (row, col) on ties.
            std::size_t pi = rows, pj = cols;
            int pdeg = 0;
            bool found = false;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    const Poly& entry = d.at(i, j);
                    if (entry.is_zero()) continue;
                    if (!found || entry.degree() < pdeg) {
                        found = true;
                        pdeg = entry.degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                for (std::size_t i = k; i < steps; ++i) d.at(i, i) = Poly(fq);
                goto done;
            }
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool reduced = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d.at(i, k).is_zero()) continue;
                const auto [q, r] = pdiv(d.at(i, k), d.at(k, k));
                add_row_multiple(i, k, pneg(q));
                if (!r.is_zero()) reduced = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d.at(k, j).is_zero()) continue;
                const auto [q, r] = pdiv(d.at(k, j), d.at(k, k));
                add_col_multiple(j, k, pneg(q));
                if (!r.is_zero()) reduced = false;
            }
            if (!reduced) continue; // a smaller-degree entry appeared

            bool cleared = true;
            for (std::size_t i = k + 1; i < rows && cleared; ++i)
                if (!d.at(i, k).is_zero()) cleared = false;
            for (std::size_t j = k + 1; j < cols && cleared; ++j)
                if (!d.at(k, j).is_zero()) cleared = false;
            if (!cleared) continue;

            // The pivot must divide every remaining entry.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < cols && divides_all; ++j) {
                    if (d.at(i, j).is_zero()) continue;
                    if (!pdiv(d.at(i, j), d.at(k, k)).remainder.is_zero()) {
                        add_row_multiple(k, i, Poly::one(fq));
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
    }
done:
    std::vector<Poly> diag;
    diag.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        Poly entry = d.at(k, k);
        if (!entry.is_zero() && !entry.is_monic()) {
            scale_row(k, fq.inv(entry.lead()));
            entry = d.at(k, k);
        }
        diag.push_back(entry);
    }
    return {std::move(diag), std::move(u), std::move(v)};
}

std::vector<Poly> nonunit_diagonal(const std::vector<Poly>& diag) {
    std::vector<Poly> out;
    for (const auto& e : diag)
        if (e.is_zero() || e.degree() >= 1) out.push_back(e);
    return out;
}

namespace {

Poly minor_det(const MatPoly& p, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    const FqCtx& fq = p.fq();
    const std::size_t k = rows.size();
    if (k == 0) return Poly::one(fq);
    if (k == 1) return p.at(rows[0], cols[0]);
    Poly det(fq);
    std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
    for (std::size_t i = 0; i < k; ++i) {
        const Poly& entry = p.at(rows[i], cols[0]);
        if (i > 0) subrows[i - 1] = rows[i - 1];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> subcols(cols.begin() + 1, cols.end());
        Poly term = pmul(entry, minor_det(p, subrows, subcols));
        det = (i % 2 == 0) ? padd(det, term) : psub(det, term);
    }
    return det;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<Poly> fitting_invariants(const MatPoly& p) {
    const FqCtx& fq = p.fq();
    if (p.rows() != p.cols()) fail(Errc::DegreeMismatch, "Fitting oracle needs a square matrix");
    const std::size_t n = p.rows();
    if (n > 8) fail(Errc::TooLarge, "Fitting oracle capped at 8x8");

    // delta[k] = monic gcd of all k-minors (delta[0] = 1); zero when all
    // k-minors vanish.
    std::vector<Poly> delta(n + 1, Poly(fq));
    delta[0] = Poly::one(fq);
    for (std::size_t k = 1; k <= n; ++k) {
        Poly g(fq);
        std::vector<std::size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        bool more_rows = true;
        while (more_rows) {
            std::iota(ci.begin(), ci.end(), 0);
            bool more_cols = true;
            while (more_cols) {
                const Poly det = minor_det(p, ri, ci);
                if (!det.is_zero()) g = g.is_zero() ? pmonic(det) : pgcd(g, det);
                if (g.is_one()) break;
                more_cols = next_combination(ci, n);
            }
            if (g.is_one()) break;
            more_rows = next_combination(ri, n);
        }
        delta[k] = g;
        if (g.is_zero()) break; // all larger minors vanish too
    }

    std::vector<Poly> chain;
    for (std::size_t k = 1; k <= n; ++k) {
        if (delta[k].is_zero()) {
            chain.push_back(Poly(fq));
            continue;
        }
        const Poly dk = pdiv(delta[k], delta[k - 1]).quotient;
        if (dk.degree() >= 1) chain.push_back(pmonic(dk));
    }
    return chain;
}

} // namespace drinfeld
