#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncalc/rational.hpp"

namespace ncalc {

// Sparse vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec make_sparse(std::map<int, Rational> entries);
SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);   // y + a*x
SparseVec scale(const SparseVec& x, const Rational& a);
Rational entry(const SparseVec& v, int idx);

// Row echelon basis of a subspace; reduction yields canonical coset representatives.
class Echelon {
public:
    // returns true when v was independent of the current span
    bool insert(const SparseVec& v);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    bool is_pivot(int idx) const { return rows_.count(idx) != 0; }

private:
    std::map<int, SparseVec> rows_;
};

// Matrix stored by rows; columns are unknowns.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}
    // build from column images (column j = images[j], indices < rows)
    static SparseMatrix from_columns(int rows, const std::vector<SparseVec>& columns);
    void add(int r, int c, const Rational& v);
};

std::size_t rank(const SparseMatrix& m);
std::size_t rank_of_vectors(const std::vector<SparseVec>& vs);

// Basis of {x : m x = 0}.
std::vector<SparseVec> nullspace(const SparseMatrix& m);

// Some x with m x = b, or nullopt.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

// Dense square matrices (small sizes only).
using DenseMatrix = std::vector<std::vector<Rational>>;
DenseMatrix identity_matrix(std::size_t n);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
std::optional<DenseMatrix> inverse(const DenseMatrix& a);
std::size_t dense_rank(const DenseMatrix& a);

}  // namespace ncalc
