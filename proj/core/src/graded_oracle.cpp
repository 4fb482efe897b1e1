#include "dpoly/graded_oracle.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace dpoly {

namespace {

using Expo = std::vector<int>;  // one symmetric-coalgebra monomial
using Tuple = std::vector<int>; // flattened tuple of monomials, stride k

int expo_weight(const Expo& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

void monomials_of_weight(int k, int weight, std::size_t pos, Expo& cur, std::vector<Expo>& out)
{
    if (pos + 1 == static_cast<std::size_t>(k)) {
        cur[pos] = weight;
        out.push_back(cur);
        return;
    }
    for (int e = weight; e >= 0; --e) {
        cur[pos] = e;
        monomials_of_weight(k, weight - e, pos + 1, cur, out);
    }
}

std::vector<Expo> weight_monomials(int k, int weight)
{
    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(k), 0);
    monomials_of_weight(k, weight, 0, cur, out);
    return out;
}

std::vector<Tuple> tuples(int k, int degree, int weight)
{
    std::vector<Tuple> out;
    if (degree == 0) {
        if (weight == 0)
            out.push_back(Tuple{});
        return out;
    }
    Tuple cur;
    auto rec = [&](auto&& self, int legs, int remaining) -> void {
        if (legs == 0) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int w = remaining; w >= 0; --w)
            for (const auto& mono : weight_monomials(k, w)) {
                cur.insert(cur.end(), mono.begin(), mono.end());
                self(self, legs - 1, remaining - w);
                cur.resize(cur.size() - mono.size());
            }
    };
    rec(rec, degree, weight);
    return out;
}

Integer binom(int n, int r)
{
    Integer b = 1;
    for (int i = 0; i < r; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// Binomial coproduct of one monomial: all exponent splittings with
// product-of-binomials coefficients.
std::vector<std::tuple<Expo, Expo, Rational>> binomial_coproduct(const Expo& e)
{
    std::vector<std::tuple<Expo, Expo, Rational>> out;
    std::vector<Expo> lefts{Expo(e.size(), 0)};
    std::vector<Integer> coeffs{Integer(1)};
    for (std::size_t s = 0; s < e.size(); ++s) {
        if (e[s] == 0)
            continue;
        std::vector<Expo> nl;
        std::vector<Integer> nc;
        for (std::size_t t = 0; t < lefts.size(); ++t)
            for (int b = 0; b <= e[s]; ++b) {
                Expo next = lefts[t];
                next[s] = b;
                nl.push_back(std::move(next));
                nc.push_back(coeffs[t] * binom(e[s], b));
            }
        lefts = std::move(nl);
        coeffs = std::move(nc);
    }
    for (std::size_t t = 0; t < lefts.size(); ++t) {
        Expo right(e.size());
        for (std::size_t s = 0; s < e.size(); ++s)
            right[s] = e[s] - lefts[t][s];
        out.emplace_back(std::move(lefts[t]), std::move(right), Rational(coeffs[t]));
    }
    return out;
}

// Cobar coboundary of a single tuple, as a sparse column over the
// degree-(n+1) tuples of the same weight.
std::map<Tuple, Rational> cobar_column(int k, const Tuple& tuple)
{
    const int n = static_cast<int>(tuple.size()) / k;
    std::map<Tuple, Rational> col;
    auto add = [&](const Tuple& key, const Rational& v) {
        auto it = col.find(key);
        if (it == col.end()) {
            if (v != 0)
                col.emplace(key, v);
            return;
        }
        it->second += v;
        if (it->second == 0)
            col.erase(it);
    };
    if (n == 0)
        return col;

    Tuple front(static_cast<std::size_t>(k), 0);
    front.insert(front.end(), tuple.begin(), tuple.end());
    add(front, Rational(1));

    for (int i = 1; i <= n; ++i) {
        const auto leg_begin = tuple.begin() + static_cast<std::ptrdiff_t>((i - 1) * k);
        Expo leg(leg_begin, leg_begin + k);
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        for (const auto& [a, b, coeff] : binomial_coproduct(leg)) {
            Tuple key;
            key.reserve(tuple.size() + static_cast<std::size_t>(k));
            key.insert(key.end(), tuple.begin(), leg_begin);
            key.insert(key.end(), a.begin(), a.end());
            key.insert(key.end(), b.begin(), b.end());
            key.insert(key.end(), leg_begin + k, tuple.end());
            add(key, sign * coeff);
        }
    }

    Tuple back = tuple;
    back.insert(back.end(), static_cast<std::size_t>(k), 0);
    add(back, (n + 1) % 2 == 0 ? Rational(1) : Rational(-1));
    return col;
}

SparseMatrix cobar_matrix(int k, int degree, int weight)
{
    const auto src = tuples(k, degree, weight);
    const auto dst = tuples(k, degree + 1, weight);
    std::map<Tuple, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r)
        row_of.emplace(dst[r], r);
    SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
        for (const auto& [key, v] : cobar_column(k, src[col]))
            m.set(row_of.at(key), col, v);
    return m;
}

} // namespace

GradedBettiTable graded_oracle_betti(int k, int max_weight, int max_degree)
{
    if (k < 1)
        throw std::invalid_argument("graded_oracle_betti: k must be >= 1");
    GradedBettiTable table;
    table.k = k;
    for (int w = 0; w <= max_weight; ++w) {
        std::map<int, std::size_t> rank_at;
        for (int n = 0; n <= max_degree - 1; ++n) {
            const long dim = static_cast<long>(tuples(k, n, w).size());
            auto rank_of = [&](int deg) {
                auto it = rank_at.find(deg);
                if (it != rank_at.end())
                    return it->second;
                std::size_t r = rank(cobar_matrix(k, deg, w));
                rank_at.emplace(deg, r);
                return r;
            };
            const long ker = dim - static_cast<long>(rank_of(n));
            const long im = n == 0 ? 0 : static_cast<long>(rank_of(n - 1));
            table.rows.push_back({w, n, ker - im});
        }
    }
    return table;
}

} // namespace dpoly
