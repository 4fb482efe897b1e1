#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpoly/linalg.hpp"

#include <random>

using namespace dpoly;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows)
{
    SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0)
                m.set(i, j, Rational(rows[i][j]));
    return m;
}

// dense determinant by cofactor expansion, the brute-force rank oracle
Rational det(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return Rational(1);
    if (n == 1)
        return a[0][0];
    Rational sum(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t l = 0; l < n; ++l)
                if (l != j)
                    row.push_back(a[i][l]);
            minor.push_back(row);
        }
        Rational term = a[0][j] * det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

// rank = largest r with a nonzero r x r minor
std::size_t minor_rank(const SparseMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t best = 0;
    const std::size_t cap = std::min(rows, cols);
    std::vector<std::size_t> ri, ci;
    auto choose = [&](auto&& self, std::vector<std::size_t>& sel, std::size_t limit, std::size_t want,
                      std::size_t from, auto&& body) -> bool {
        if (sel.size() == want)
            return body();
        for (std::size_t i = from; i < limit; ++i) {
            sel.push_back(i);
            if (self(self, sel, limit, want, i + 1, body))
                return true;
            sel.pop_back();
        }
        return false;
    };
    for (std::size_t r = cap; r >= 1; --r) {
        ri.clear();
        bool found = choose(choose, ri, rows, r, 0, [&]() {
            ci.clear();
            return choose(choose, ci, cols, r, 0, [&]() {
                std::vector<std::vector<Rational>> sub(r, std::vector<Rational>(r));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        sub[i][j] = m.get(ri[i], ci[j]);
                return det(sub) != 0;
            });
        });
        if (found) {
            best = r;
            break;
        }
    }
    return best;
}

} // namespace

TEST_CASE("rank on pinned matrices")
{
    CHECK(rank(from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
    CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace on pinned matrices")
{
    CHECK(nullspace_basis(from_rows({{1, 0}, {0, 1}})).empty());
    CHECK(nullspace_basis(from_rows({{0, 0}})).size() == 2);

    auto basis = nullspace_basis(from_rows({{1, 2}, {2, 4}}));
    REQUIRE(basis.size() == 1);
    // proportional to (2, -1)
    CHECK(basis[0][0] * Rational(-1) == basis[0][1] * Rational(2));
}

TEST_CASE("solve on pinned systems")
{
    auto id2 = from_rows({{1, 0}, {0, 1}});
    auto x = solve(id2, {Rational(3), Rational(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 4);

    auto zero = from_rows({{0, 0}});
    CHECK(!solve(zero, {Rational(1)}).has_value());

    auto scalar = from_rows({{2}});
    auto y = solve(scalar, {Rational(1)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == Rational(1, 2));

    CHECK_THROWS_AS((void)solve(id2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("randomized rank/nullspace/solve properties with minor-rank oracle")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 4;
        SparseMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const int num = static_cast<int>(rng() % 9) - 4;
                const int den = 1 + static_cast<int>(rng() % 3);
                if (num != 0 && rng() % 3 != 0)
                    m.set(i, j, Rational(num, den));
            }

        const std::size_t r = rank(m);
        CHECK(r == minor_rank(m));

        auto basis = nullspace_basis(m);
        CHECK(r + basis.size() == cols);
        for (const auto& v : basis) {
            const Vec image = m.apply(v);
            for (const auto& entry : image)
                CHECK(entry == 0);
        }

        // feasible rhs: random combination of columns
        Vec coeffs(cols);
        for (auto& c : coeffs)
            c = Rational(static_cast<int>(rng() % 5) - 2);
        Vec b = m.apply(coeffs);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);

        // infeasibility matches the rank criterion
        Vec b2(rows);
        for (auto& c : b2)
            c = Rational(static_cast<int>(rng() % 5) - 2);
        SparseMatrix aug(rows, cols + 1);
        for (std::size_t i = 0; i < rows; ++i) {
            for (const auto& [j, v] : m.row(i))
                aug.set(i, j, v);
            aug.set(i, cols, b2[i]);
        }
        const bool feasible = solve(m, b2).has_value();
        CHECK(feasible == (rank(aug) == r));
    }
}

TEST_CASE("dense matrix helpers")
{
    DenseMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 1) = -1;
    DenseMatrix b = a.transpose();
    CHECK(b.at(1, 0) == 2);
    DenseMatrix prod = a * DenseMatrix::identity(2);
    CHECK(prod == a);
    DenseMatrix k = kronecker(a, DenseMatrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 2) == 2); // (0,1) block of a times identity
    CHECK(k.at(1, 3) == 2);
}
