#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace drinfeld;
using namespace test_helpers;

namespace {

MatFq random_matrix(const FqCtx& fq, std::size_t n, std::mt19937_64& rng) {
    MatFq m(fq, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_fq(fq, rng);
    return m;
}

// Determinant by cofactor expansion; independent of the library paths.
Poly det_poly(const MatPoly& p) {
    const FqCtx& fq = p.fq();
    const std::size_t n = p.rows();
    if (n == 0) return Poly::one(fq);
    if (n == 1) return p.at(0, 0);
    Poly det(fq);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.at(i, 0).is_zero()) continue;
        MatPoly sub(fq, n - 1, n - 1);
        for (std::size_t si = 0, ri = 0; si < n; ++si) {
            if (si == i) continue;
            for (std::size_t j = 1; j < n; ++j) sub.at(ri, j - 1) = p.at(si, j);
            ++ri;
        }
        Poly term = pmul(p.at(i, 0), det_poly(sub));
        det = (i % 2 == 0) ? padd(det, term) : psub(det, term);
    }
    return det;
}

MatFq poly_of_matrix(const MatFq& m, const Poly& f) {
    const FqCtx& fq = m.fq();
    MatFq acc(fq, m.rows(), m.rows());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = mat_mul(acc, m);
        if (f.coeff(k) != 0) {
            MatFq c(fq, m.rows(), m.rows());
            for (std::size_t i = 0; i < m.rows(); ++i) c.at(i, i) = f.coeff(k);
            acc = mat_add(acc, c);
        }
    }
    return acc;
}

bool is_zero_matrix(const MatFq& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

void check_frobenius_form(const MatFq& m) {
    const FrobeniusForm ff = frobenius_normal_form(m);
    // Divisibility chain of monic nonconstant blocks summing to the dimension.
    std::size_t total = 0;
    for (std::size_t i = 0; i < ff.blocks.size(); ++i) {
        CHECK(ff.blocks[i].is_monic());
        CHECK(ff.blocks[i].degree() >= 1);
        total += static_cast<std::size_t>(ff.blocks[i].degree());
        if (i + 1 < ff.blocks.size()) CHECK(pdivides(ff.blocks[i], ff.blocks[i + 1]));
    }
    CHECK(total == m.rows());
    // Similarity through the transform: M * S = S * Fnf.
    const MatFq fnf = block_companion(m.fq(), ff.blocks);
    CHECK(mat_mul(m, ff.transform) == mat_mul(ff.transform, fnf));
    CHECK_NOTHROW(mat_inverse(ff.transform));
    // Product of blocks = characteristic polynomial (via independent det).
    Poly prod = Poly::one(m.fq());
    for (const auto& b : ff.blocks) prod = pmul(prod, b);
    CHECK(prod == pmonic(det_poly(characteristic_matrix(m))));
    // Last block annihilates M.
    if (!ff.blocks.empty()) CHECK(is_zero_matrix(poly_of_matrix(m, ff.blocks.back())));
}

} // namespace

TEST_CASE("kernel_basis worked examples") {
    FqCtx f2(2, {0, 1});
    CHECK(kernel_basis(MatFq::identity(f2, 3)).empty());
    {
        const auto basis = kernel_basis(MatFq(f2, 4, 4)); // zero matrix
        CHECK(basis.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(basis[i][j] == (i == j ? 1u : 0u));
    }
    {
        MatFq m(f2, 2, 2);
        m.at(0, 0) = 1;
        m.at(1, 0) = 1;
        const auto basis = kernel_basis(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<fq_t>{0, 1});
        CHECK(mat_vec(m, basis[0]) == std::vector<fq_t>{0, 0});
    }
}

TEST_CASE("kernel basis vectors always lie in the kernel (random)") {
    FqCtx f3(3, {0, 1});
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const MatFq m = random_matrix(f3, n, rng);
        const auto basis = kernel_basis(m);
        for (const auto& v : basis) {
            const std::vector<fq_t> image = mat_vec(m, v);
            CHECK(std::all_of(image.begin(), image.end(), [](fq_t c) { return c == 0; }));
        }
        // rank-nullity via rref rank of a fresh copy
        CHECK(basis.size() <= n);
    }
}

TEST_CASE("solve_in_span worked examples and errors") {
    FqCtx f2(2, {0, 1});
    std::mt19937_64 rng(2);
    {
        const MatFq n = MatFq::identity(f2, 3);
        const MatFq y = random_matrix(f2, 3, rng);
        CHECK(solve_in_span(n, y) == y);
    }
    {
        MatFq n(f2, 3, 2);
        n.at(0, 0) = 1;
        n.at(1, 1) = 1;
        const MatFq y(f2, 3, 2); // zero
        const MatFq x = solve_in_span(n, y);
        CHECK(is_zero_matrix(x));
    }
    {
        // Column (0,0,1) is outside the span of the first two basis vectors.
        MatFq n(f2, 3, 2);
        n.at(0, 0) = 1;
        n.at(1, 1) = 1;
        MatFq y(f2, 3, 1);
        y.at(2, 0) = 1;
        CHECK_THROWS_WITH_AS(solve_in_span(n, y), doctest::Contains("NotInSpan"), Error);
    }
    {
        MatFq n(f2, 3, 2); // rank 1 < 2 columns
        n.at(0, 0) = 1;
        n.at(0, 1) = 1;
        CHECK_THROWS_WITH_AS(solve_in_span(n, MatFq(f2, 3, 1)),
                             doctest::Contains("RankDeficient"), Error);
    }
}

TEST_CASE("solve_in_span solves N X = Y on random full-rank systems") {
    FqCtx f5(5, {0, 1});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 2 + rng() % 5;
        const std::size_t cols = 1 + rng() % rows;
        MatFq n(f5, rows, cols);
        // random full-column-rank N: random matrix with identity block mixed in
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = 0; i < rows; ++i) n.at(i, j) = random_fq(f5, rng);
            n.at(j, j) = 1; // keep it full rank most of the time
        }
        const MatFq x_true = [&] {
            MatFq x(f5, cols, 1 + rng() % 3);
            for (std::size_t i = 0; i < x.rows(); ++i)
                for (std::size_t j = 0; j < x.cols(); ++j) x.at(i, j) = random_fq(f5, rng);
            return x;
        }();
        const MatFq y = mat_mul(n, x_true);
        MatFq solved;
        try {
            solved = solve_in_span(n, y);
        } catch (const Error& e) {
            if (e.code() == Errc::RankDeficient) continue; // the mix-in failed
            throw;
        }
        CHECK(mat_mul(n, solved) == y);
        CHECK(solved == x_true); // uniqueness under full column rank
    }
}

TEST_CASE("frobenius_normal_form worked examples") {
    FqCtx f2(2, {0, 1});
    FqCtx f3(3, {0, 1});
    {
        // identity: d blocks T - 1
        const FrobeniusForm ff = frobenius_normal_form(MatFq::identity(f3, 4));
        CHECK(ff.blocks.size() == 4);
        for (const auto& b : ff.blocks) CHECK(b == poly_of(f3, {2, 1})); // T - 1 = T + 2
        check_frobenius_form(MatFq::identity(f3, 4));
    }
    {
        // companion matrix of an irreducible cubic stays one block
        const Poly c = first_irreducible(f3, 3);
        const MatFq m = block_companion(f3, {c});
        const FrobeniusForm ff = frobenius_normal_form(m);
        REQUIRE(ff.blocks.size() == 1);
        CHECK(ff.blocks[0] == c);
        check_frobenius_form(m);
    }
    {
        // M = [[1,0],[1,0]] over F_2 is cyclic with minimal polynomial T^2+T
        MatFq m(f2, 2, 2);
        m.at(0, 0) = 1;
        m.at(1, 0) = 1;
        const FrobeniusForm ff = frobenius_normal_form(m);
        REQUIRE(ff.blocks.size() == 1);
        CHECK(ff.blocks[0] == poly_of(f2, {0, 1, 1}));
        check_frobenius_form(m);
    }
    {
        const FrobeniusForm ff = frobenius_normal_form(MatFq(f2, 0, 0));
        CHECK(ff.blocks.empty());
    }
}

TEST_CASE("frobenius_normal_form is deterministic") {
    FqCtx f3(3, {0, 1});
    std::mt19937_64 rng(4);
    const MatFq m = random_matrix(f3, 6, rng);
    const FrobeniusForm a = frobenius_normal_form(m);
    const FrobeniusForm b = frobenius_normal_form(m);
    CHECK(a.blocks.size() == b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) CHECK(a.blocks[i] == b.blocks[i]);
    CHECK(a.transform == b.transform);
}

TEST_CASE("smith_normal_form worked examples") {
    FqCtx f2(2, {0, 1});
    FqCtx f3(3, {0, 1});
    {
        // T*Id - Identity: diagonal of T - 1
        const SmithForm sf = smith_normal_form(characteristic_matrix(MatFq::identity(f3, 3)));
        REQUIRE(sf.diagonal.size() == 3);
        for (const auto& e : sf.diagonal) CHECK(e == poly_of(f3, {2, 1}));
    }
    {
        // already a chain: diag(T, T^2)
        MatPoly p(f2, 2, 2);
        p.at(0, 0) = poly_of(f2, {0, 1});
        p.at(1, 1) = poly_of(f2, {0, 0, 1});
        const SmithForm sf = smith_normal_form(p);
        CHECK(sf.diagonal[0] == poly_of(f2, {0, 1}));
        CHECK(sf.diagonal[1] == poly_of(f2, {0, 0, 1}));
    }
    {
        // T*Id - [[1,0],[1,0]] over F_2: (1, T^2+T)
        MatFq m(f2, 2, 2);
        m.at(0, 0) = 1;
        m.at(1, 0) = 1;
        const SmithForm sf = smith_normal_form(characteristic_matrix(m));
        REQUIRE(sf.diagonal.size() == 2);
        CHECK(sf.diagonal[0].is_one());
        CHECK(sf.diagonal[1] == poly_of(f2, {0, 1, 1}));
    }
}

TEST_CASE("smith_normal_form: transform identity, unimodularity, chain") {
    FqCtx f3(3, {0, 1});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        MatPoly p(f3, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() % 4) p.at(i, j) = random_poly(f3, rng() % 3, rng);
        const SmithForm sf = smith_normal_form(p);
        // U*P*V equals the diagonal exactly.
        const MatPoly upv = matpoly_mul(sf.u, matpoly_mul(p, sf.v));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (i == j && i < sf.diagonal.size()) CHECK(upv.at(i, j) == sf.diagonal[i]);
                else CHECK(upv.at(i, j).is_zero());
            }
        // U, V unimodular: constant nonzero determinants.
        const Poly du = det_poly(sf.u), dv = det_poly(sf.v);
        CHECK(du.degree() == 0);
        CHECK(dv.degree() == 0);
        // Divisibility chain, zeros allowed at the end.
        for (std::size_t i = 0; i + 1 < sf.diagonal.size(); ++i) {
            if (sf.diagonal[i].is_zero()) CHECK(sf.diagonal[i + 1].is_zero());
            else if (!sf.diagonal[i + 1].is_zero() || true)
                CHECK((sf.diagonal[i + 1].is_zero() ||
                       pdiv(sf.diagonal[i + 1], sf.diagonal[i]).remainder.is_zero()));
        }
        // Monic or zero entries.
        for (const auto& e : sf.diagonal) CHECK((e.is_zero() || e.is_monic()));
    }
}

TEST_CASE("cross-oracle: Smith diagonal of T*Id - M equals FNF blocks") {
    FqCtx f2(2, {0, 1});
    FqCtx f3(3, {0, 1});
    std::mt19937_64 rng(6);
    int trials = 0;
    for (const FqCtx* fq : {&f2, &f3}) {
        for (int t = 0; t < 110; ++t) {
            const std::size_t n = 1 + rng() % 8;
            const MatFq m = random_matrix(*fq, n, rng);
            const FrobeniusForm ff = frobenius_normal_form(m);
            const SmithForm sf = smith_normal_form(characteristic_matrix(m));
            const std::vector<Poly> inv = nonunit_diagonal(sf.diagonal);
            REQUIRE(inv.size() == ff.blocks.size());
            for (std::size_t i = 0; i < inv.size(); ++i) CHECK(inv[i] == ff.blocks[i]);
            ++trials;
        }
    }
    CHECK(trials >= 200);
}

TEST_CASE("frobenius form full contract on random matrices") {
    FqCtx f5(5, {0, 1});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) check_frobenius_form(random_matrix(f5, 1 + rng() % 7, rng));
}

TEST_CASE("fitting_invariants worked examples") {
    FqCtx f2(2, {0, 1});
    {
        MatPoly p(f2, 2, 2);
        p.at(0, 0) = poly_of(f2, {0, 1});
        p.at(1, 1) = poly_of(f2, {0, 0, 1});
        const auto chain = fitting_invariants(p);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0] == poly_of(f2, {0, 1}));
        CHECK(chain[1] == poly_of(f2, {0, 0, 1}));
    }
    {
        // companion characteristic matrix: single invariant factor c
        const Poly c = poly_of(f2, {1, 1, 0, 1}); // T^3 + T + 1
        const MatPoly p = characteristic_matrix(block_companion(f2, {c}));
        const auto chain = fitting_invariants(p);
        REQUIRE(chain.size() == 1);
        CHECK(chain[0] == c);
        const SmithForm sf = smith_normal_form(p);
        CHECK(nonunit_diagonal(sf.diagonal) == chain);
    }
    {
        MatPoly big(f2, 9, 9);
        CHECK_THROWS_WITH_AS(fitting_invariants(big), doctest::Contains("TooLarge"), Error);
    }
}

TEST_CASE("fitting_invariants agrees with Smith on random matrices up to 5x5") {
    FqCtx f2(2, {0, 1});
    FqCtx f3(3, {0, 1});
    std::mt19937_64 rng(8);
    int trials = 0;
    for (const FqCtx* fq : {&f2, &f3}) {
        for (int t = 0; t < 55; ++t) {
            const std::size_t n = 1 + rng() % 5;
            MatPoly p(*fq, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (rng() % 4) p.at(i, j) = random_poly(*fq, rng() % 3, rng);
            const auto fit = fitting_invariants(p);
            const auto smith = nonunit_diagonal(smith_normal_form(p).diagonal);
            REQUIRE(fit.size() == smith.size());
            for (std::size_t i = 0; i < fit.size(); ++i) CHECK(fit[i] == smith[i]);
            ++trials;
        }
    }
    CHECK(trials >= 100);
}
