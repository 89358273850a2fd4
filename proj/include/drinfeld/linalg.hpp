#pragma once

#include <cstddef>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Dense row-major matrix over F_q.
class MatFq {
  public:
    MatFq() = default;
    MatFq(const FqCtx& fq, std::size_t rows, std::size_t cols)
        : fq_(&fq), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatFq identity(const FqCtx& fq, std::size_t n);
    static MatFq from_columns(const FqCtx& fq, std::size_t rows,
                              const std::vector<std::vector<fq_t>>& cols);

    const FqCtx& fq() const { return *fq_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    fq_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    fq_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<fq_t> column(std::size_t j) const;

    friend bool operator==(const MatFq& a, const MatFq& b);
    friend bool operator!=(const MatFq& a, const MatFq& b) { return !(a == b); }

  private:
    const FqCtx* fq_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<fq_t> a_;
};

MatFq mat_mul(const MatFq& a, const MatFq& b);
MatFq mat_add(const MatFq& a, const MatFq& b);
std::vector<fq_t> mat_vec(const MatFq& a, const std::vector<fq_t>& x);
MatFq mat_pow(const MatFq& a, std::uint64_t k);
MatFq mat_inverse(const MatFq& a); // RankDeficient if singular

// Echelonized basis of the right kernel; empty when the kernel is trivial.
std::vector<std::vector<fq_t>> kernel_basis(const MatFq& m);

// The unique X with N*X = Y. N must have full column rank (RankDeficient)
// and every column of Y must lie in the column span of N (NotInSpan).
MatFq solve_in_span(const MatFq& n, const MatFq& y);

// Frobenius (rational canonical) form. blocks is the divisibility chain
// d_1 | ... | d_l of monic nonconstant polynomials; transform S satisfies
// S * Fnf * S^{-1} = M, i.e. the columns of S are the decomposition basis
// (generator spins) expressed in the original coordinates.
struct FrobeniusForm {
    std::vector<Poly> blocks;
    MatFq transform;
};

FrobeniusForm frobenius_normal_form(const MatFq& m);

// Block-diagonal matrix of companion blocks, in chain order.
MatFq block_companion(const FqCtx& fq, const std::vector<Poly>& blocks);

// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const MatFq& m);

// Dense matrix with entries in F_q[T].
class MatPoly {
  public:
    MatPoly() = default;
    MatPoly(const FqCtx& fq, std::size_t rows, std::size_t cols)
        : fq_(&fq), rows_(rows), cols_(cols), a_(rows * cols, Poly(fq)) {}

    static MatPoly identity(const FqCtx& fq, std::size_t n);

    const FqCtx& fq() const { return *fq_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    const FqCtx* fq_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;
};

MatPoly matpoly_mul(const MatPoly& a, const MatPoly& b);

// T*Id - M, the characteristic matrix of M.
MatPoly characteristic_matrix(const MatFq& m);

// Smith normal form U*P*V = diag, diagonal entries monic (or zero) forming a
// divisibility chain, U and V unimodular.
struct SmithForm {
    std::vector<Poly> diagonal; // length min(rows, cols)
    MatPoly u;
    MatPoly v;
};

SmithForm smith_normal_form(const MatPoly& p);

// Diagonal entries that are neither units nor dropped: degree >= 1 entries
// plus any zero entries, i.e. the invariant factors of the cokernel.
std::vector<Poly> nonunit_diagonal(const std::vector<Poly>& diag);

// Fitting-ideal oracle: invariant factors of a square presentation matrix
// via gcds of k-minors. Dimension capped at 8 (TooLarge).
std::vector<Poly> fitting_invariants(const MatPoly& p);

} // namespace drinfeld
