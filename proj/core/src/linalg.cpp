#include "dpoly/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

void SparseMatrix::set(std::size_t i, std::size_t j, const Rational& v)
{
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("SparseMatrix::set index out of bounds");
    if (v == 0)
        row_data_[i].erase(j);
    else
        row_data_[i][j] = v;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& v)
{
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("SparseMatrix::add index out of bounds");
    auto it = row_data_[i].find(j);
    if (it == row_data_[i].end()) {
        if (v != 0)
            row_data_[i][j] = v;
        return;
    }
    it->second += v;
    if (it->second == 0)
        row_data_[i].erase(it);
}

Rational SparseMatrix::get(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("SparseMatrix::get index out of bounds");
    auto it = row_data_[i].find(j);
    return it == row_data_[i].end() ? Rational(0) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("SparseMatrix::apply dimension mismatch");
    Vec y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_data_[i])
            y[i] += v * x[j];
    return y;
}

std::size_t SparseMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& r : row_data_)
        n += r.size();
    return n;
}

namespace {

using IRow = std::map<std::size_t, Integer>;

// Clear denominators row by row; rank and kernels are unchanged.
std::vector<IRow> integer_rows(const SparseMatrix& m)
{
    std::vector<IRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm = 1;
        for (const auto& [j, v] : m.row(i))
            lcm = boost::multiprecision::lcm(lcm, denominator(v));
        for (const auto& [j, v] : m.row(i))
            rows[i][j] = numerator(v) * (lcm / denominator(v));
    }
    return rows;
}

struct Echelon {
    std::vector<IRow> rows;              // rows in elimination order; first `pivots.size()` are pivot rows
    std::vector<std::size_t> pivot_cols; // pivot column of each pivot row, increasing
};

// Fraction-free forward elimination (Bareiss update
// new = (pivot*row - factor*pivot_row)/previous_pivot; the division is exact
// by Sylvester's determinant identity, also with skipped columns and row
// swaps). Pivots by the first-nonzero rule for reproducibility.
Echelon eliminate(std::vector<IRow> rows, std::size_t cols)
{
    Echelon e;
    std::size_t next = 0; // rows above `next` are finished pivot rows
    Integer prev_pivot = 1;
    for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
        std::size_t sel = next;
        while (sel < rows.size() && (rows[sel].count(col) == 0))
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[next], rows[sel]);
        const IRow& p = rows[next];
        const Integer pivot = p.at(col);
        for (std::size_t i = next + 1; i < rows.size(); ++i) {
            IRow& r = rows[i];
            auto fit = r.find(col);
            const Integer factor = (fit == r.end()) ? Integer(0) : fit->second;
            IRow updated;
            auto pi = p.begin();
            auto ri = r.begin();
            while (pi != p.end() || ri != r.end()) {
                std::size_t j;
                Integer val;
                if (ri != r.end() && (pi == p.end() || ri->first < pi->first)) {
                    j = ri->first;
                    val = ri->second * pivot;
                    ++ri;
                } else if (pi != p.end() && (ri == r.end() || pi->first < ri->first)) {
                    j = pi->first;
                    val = -factor * pi->second;
                    ++pi;
                } else {
                    j = pi->first;
                    val = ri->second * pivot - factor * pi->second;
                    ++pi;
                    ++ri;
                }
                if (val != 0)
                    updated[j] = val / prev_pivot; // exact
            }
            updated.erase(col);
            r = std::move(updated);
        }
        e.pivot_cols.push_back(col);
        prev_pivot = pivot;
        ++next;
    }
    e.rows = std::move(rows);
    return e;
}

// Back-substitute the pivot rows of an echelon form for the solution with
// all free variables at zero; rhs lives in the extra last column when
// `augmented`.
Vec back_substitute(const Echelon& e, std::size_t cols, bool augmented)
{
    Vec x(cols, Rational(0));
    for (std::size_t pi = e.pivot_cols.size(); pi-- > 0;) {
        const IRow& row = e.rows[pi];
        const std::size_t pc = e.pivot_cols[pi];
        Rational s(0);
        for (const auto& [j, v] : row) {
            if (j == pc)
                continue;
            if (augmented && j == cols) {
                s += Rational(v);
                continue;
            }
            s -= Rational(v) * x[j];
        }
        x[pc] = s / Rational(row.at(pc));
    }
    return x;
}

} // namespace

std::size_t rank(const SparseMatrix& m)
{
    return eliminate(integer_rows(m), m.cols()).pivot_cols.size();
}

std::vector<Vec> nullspace_basis(const SparseMatrix& m)
{
    Echelon e = eliminate(integer_rows(m), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        Vec v(m.cols(), Rational(0));
        v[free_col] = 1;
        // Solve the pivot equations with this single free variable set.
        for (std::size_t pi = e.pivot_cols.size(); pi-- > 0;) {
            const IRow& row = e.rows[pi];
            const std::size_t pc = e.pivot_cols[pi];
            Rational s(0);
            for (const auto& [j, val] : row)
                if (j != pc)
                    s -= Rational(val) * v[j];
            v[pc] = s / Rational(row.at(pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length does not match rows");

    // Eliminate the augmented system [m | b].
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i))
            aug.set(i, j, v);
        aug.set(i, m.cols(), b[i]);
    }
    Echelon e = eliminate(integer_rows(aug), aug.cols());
    for (std::size_t c : e.pivot_cols)
        if (c == m.cols())
            return std::nullopt; // pivot in the rhs column: inconsistent

    Vec x = back_substitute(e, m.cols(), /*augmented=*/true);
    if (m.apply(x) != b)
        throw std::logic_error("solve: internal verification failed");
    return x;
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const
{
    DenseMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.a_[i][j] = a_[i][j] + o.a_[i][j];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const
{
    DenseMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.a_[i][j] = a_[i][j] - o.a_[i][j];
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("DenseMatrix::operator* dimension mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            if (a_[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i][j] += a_[i][l] * o.a_[l][j];
        }
    return r;
}

DenseMatrix DenseMatrix::operator*(const Rational& c) const
{
    DenseMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.a_[i][j] = a_[i][j] * c;
    return r;
}

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.a_[j][i] = a_[i][j];
    return r;
}

bool DenseMatrix::is_zero() const
{
    for (const auto& row : a_)
        for (const auto& v : row)
            if (v != 0)
                return false;
    return true;
}

Vec DenseMatrix::apply(const Vec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("DenseMatrix::apply dimension mismatch");
    Vec y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += a_[i][j] * x[j];
    return y;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b)
{
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0)
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

} // namespace dpoly
