#pragma once

#include "dpoly/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dpoly {

using Vec = std::vector<Rational>;

// Sparse matrix over Q. Only nonzero entries are stored; every mutation
// keeps that invariant.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, const Rational& v);
    void add(std::size_t i, std::size_t j, const Rational& v);
    Rational get(std::size_t i, std::size_t j) const;

    const std::map<std::size_t, Rational>& row(std::size_t i) const { return row_data_[i]; }

    Vec apply(const Vec& x) const; // m * x
    std::size_t nnz() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::map<std::size_t, Rational>> row_data_;
};

// Rank over Q. Fraction-free (Bareiss) elimination on integer-scaled rows;
// pivot = first row with a nonzero entry in the current column, columns
// scanned left to right, so results and intermediate states are
// reproducible run to run.
std::size_t rank(const SparseMatrix& m);

// Basis of ker(m); size is always cols - rank(m) and every vector is an
// exact solution of m*v = 0.
std::vector<Vec> nullspace_basis(const SparseMatrix& m);

// One exact solution of m*x = b, or nullopt when infeasible. The returned
// vector is re-verified against m before being handed back.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

// Small dense matrices over Q, used for module actions and connections.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, Vec(cols, Rational(0))) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix operator*(const Rational& c) const;
    bool operator==(const DenseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    DenseMatrix transpose() const;
    bool is_zero() const;
    Vec apply(const Vec& x) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Vec> a_;
};

// Kronecker product in row-major convention: (A (x) B) acts on vec(e_i (x) f_j),
// index i*B.cols + j.
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

} // namespace dpoly
