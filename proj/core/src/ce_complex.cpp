#include "dpoly/ce_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

bool hmodule_is_flat(const LiePair& pair, const HModule& mod)
{
    const std::size_t m = pair.dim_h();
    if (mod.action.size() != m)
        return false;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            DenseMatrix lhs = mod.action[x] * mod.action[y] - mod.action[y] * mod.action[x];
            DenseMatrix rhs(mod.dim, mod.dim);
            for (std::size_t z = 0; z < m; ++z)
                if (pair.c(x, y, z) != 0)
                    rhs = rhs + mod.action[z] * pair.c(x, y, z);
            // closure guarantees c(x,y,z) = 0 for z >= dim_h on a valid pair
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

HModule trivial_module(const LiePair& pair, std::size_t dim)
{
    HModule mod;
    mod.dim = dim;
    mod.action.assign(pair.dim_h(), DenseMatrix(dim, dim));
    return mod;
}

HModule quotient_module(const LiePair& pair)
{
    HModule mod;
    mod.dim = pair.dim_quotient();
    for (std::size_t x = 0; x < pair.dim_h(); ++x)
        mod.action.push_back(pair.quotient_action_matrix(x));
    return mod;
}

HModule dual_module(const HModule& mod)
{
    HModule dual;
    dual.dim = mod.dim;
    for (const auto& a : mod.action)
        dual.action.push_back(a.transpose() * Rational(-1));
    return dual;
}

HModule tensor_module(const HModule& a, const HModule& b)
{
    HModule t;
    t.dim = a.dim * b.dim;
    const DenseMatrix ia = DenseMatrix::identity(a.dim);
    const DenseMatrix ib = DenseMatrix::identity(b.dim);
    for (std::size_t x = 0; x < a.action.size(); ++x)
        t.action.push_back(kronecker(a.action[x], ib) + kronecker(ia, b.action[x]));
    return t;
}

HModule end_module(const HModule& mod)
{
    return tensor_module(mod, dual_module(mod));
}

bool CECochain::is_zero() const
{
    for (const auto& [tuple, v] : values)
        for (const auto& x : v)
            if (x != 0)
                return false;
    return true;
}

Vec ce_evaluate(const CECochain& c, std::vector<std::size_t> tuple, std::size_t mod_dim)
{
    // Sort with parity; equal neighbours kill the value.
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j])
                return Vec(mod_dim, Rational(0));
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    auto it = c.values.find(tuple);
    if (it == c.values.end())
        return Vec(mod_dim, Rational(0));
    Vec v = it->second;
    if (sign < 0)
        for (auto& x : v)
            x = -x;
    return v;
}

CECochain ce_differential(const LiePair& pair, const HModule& mod, const CECochain& c)
{
    if (mod.action.size() != pair.dim_h())
        throw std::invalid_argument("ce_differential: module does not match pair");
    const std::size_t m = pair.dim_h();
    const std::size_t p = c.degree;

    CECochain dc;
    dc.degree = p + 1;
    for (const auto& tuple : increasing_tuples(m, p + 1)) {
        Vec value(mod.dim, Rational(0));
        for (std::size_t i = 0; i <= p; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t <= p; ++t)
                if (t != i)
                    rest.push_back(tuple[t]);
            Vec inner = ce_evaluate(c, rest, mod.dim);
            Vec acted = mod.act(tuple[i], inner);
            const int sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t t = 0; t < mod.dim; ++t)
                value[t] += sign > 0 ? acted[t] : -acted[t];
        }
        for (std::size_t i = 0; i + 1 <= p; ++i)
            for (std::size_t j = i + 1; j <= p; ++j) {
                std::vector<std::size_t> rest;
                for (std::size_t t = 0; t <= p; ++t)
                    if (t != i && t != j)
                        rest.push_back(tuple[t]);
                // c([Xi,Xj], rest) with the bracket expanded over h (closure
                // keeps it there on a valid pair).
                for (std::size_t z = 0; z < m; ++z) {
                    const Rational& coeff = pair.c(tuple[i], tuple[j], z);
                    if (coeff == 0)
                        continue;
                    std::vector<std::size_t> args;
                    args.push_back(z);
                    args.insert(args.end(), rest.begin(), rest.end());
                    Vec inner = ce_evaluate(c, args, mod.dim);
                    const int sign = ((i + j) % 2 == 0) ? 1 : -1;
                    for (std::size_t t = 0; t < mod.dim; ++t)
                        value[t] += (sign > 0 ? coeff : -coeff) * inner[t];
                }
            }
        bool zero = std::all_of(value.begin(), value.end(), [](const Rational& x) { return x == 0; });
        if (!zero)
            dc.values[tuple] = std::move(value);
    }
    return dc;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t m, std::size_t p)
{
    std::vector<std::vector<std::size_t>> out;
    if (p > m)
        return out;
    std::vector<std::size_t> tuple(p);
    for (std::size_t i = 0; i < p; ++i)
        tuple[i] = i;
    while (true) {
        out.push_back(tuple);
        if (p == 0)
            break;
        // next combination in lex order
        std::size_t i = p;
        while (i-- > 0) {
            if (tuple[i] != i + m - p) {
                ++tuple[i];
                for (std::size_t j = i + 1; j < p; ++j)
                    tuple[j] = tuple[j - 1] + 1;
                break;
            }
            if (i == 0)
                return out;
        }
    }
    return out;
}

std::size_t ce_space_dim(const LiePair& pair, const HModule& mod, std::size_t p)
{
    return increasing_tuples(pair.dim_h(), p).size() * mod.dim;
}

Vec ce_coordinates(const LiePair& pair, const HModule& mod, const CECochain& c)
{
    const auto tuples = increasing_tuples(pair.dim_h(), c.degree);
    Vec coords(tuples.size() * mod.dim, Rational(0));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        auto it = c.values.find(tuples[t]);
        if (it == c.values.end())
            continue;
        for (std::size_t i = 0; i < mod.dim; ++i)
            coords[t * mod.dim + i] = it->second[i];
    }
    return coords;
}

CECochain ce_from_coordinates(const LiePair& pair, const HModule& mod, std::size_t degree, const Vec& coords)
{
    const auto tuples = increasing_tuples(pair.dim_h(), degree);
    if (coords.size() != tuples.size() * mod.dim)
        throw std::invalid_argument("ce_from_coordinates: wrong length");
    CECochain c;
    c.degree = degree;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Vec v(coords.begin() + static_cast<std::ptrdiff_t>(t * mod.dim),
              coords.begin() + static_cast<std::ptrdiff_t>((t + 1) * mod.dim));
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; }))
            c.values[tuples[t]] = std::move(v);
    }
    return c;
}

SparseMatrix ce_differential_matrix(const LiePair& pair, const HModule& mod, std::size_t p)
{
    const auto src = increasing_tuples(pair.dim_h(), p);
    SparseMatrix m(ce_space_dim(pair, mod, p + 1), ce_space_dim(pair, mod, p));
    for (std::size_t t = 0; t < src.size(); ++t)
        for (std::size_t i = 0; i < mod.dim; ++i) {
            CECochain basis;
            basis.degree = p;
            Vec v(mod.dim, Rational(0));
            v[i] = 1;
            basis.values[src[t]] = v;
            Vec img = ce_coordinates(pair, mod, ce_differential(pair, mod, basis));
            for (std::size_t r = 0; r < img.size(); ++r)
                if (img[r] != 0)
                    m.set(r, t * mod.dim + i, img[r]);
        }
    return m;
}

std::size_t ce_cohomology_dim(const LiePair& pair, const HModule& mod, std::size_t p)
{
    if (p > pair.dim_h())
        return 0;
    const std::size_t dim_p = ce_space_dim(pair, mod, p);
    const std::size_t rank_dp = rank(ce_differential_matrix(pair, mod, p));
    const std::size_t rank_prev = p == 0 ? 0 : rank(ce_differential_matrix(pair, mod, p - 1));
    return dim_p - rank_dp - rank_prev;
}

std::optional<CECochain> ce_coboundary_witness(const LiePair& pair, const HModule& mod, const CECochain& c)
{
    if (!ce_differential(pair, mod, c).is_zero())
        throw std::invalid_argument("ce_coboundary_witness: input is not a cocycle");
    if (c.degree == 0) {
        // d from degree -1 is zero: only the zero cochain is exact.
        if (!c.is_zero())
            return std::nullopt;
        CECochain zero;
        zero.degree = 0; // convention: witness of 0 in degree 0 is 0 itself
        return zero;
    }
    SparseMatrix d_prev = ce_differential_matrix(pair, mod, c.degree - 1);
    auto x = solve(d_prev, ce_coordinates(pair, mod, c));
    if (!x)
        return std::nullopt;
    CECochain phi = ce_from_coordinates(pair, mod, c.degree - 1, *x);
    // Re-verify before returning: a solver bug must not masquerade as math.
    CECochain check = ce_differential(pair, mod, phi);
    Vec lhs = ce_coordinates(pair, mod, check);
    Vec rhs = ce_coordinates(pair, mod, c);
    if (lhs != rhs)
        throw std::logic_error("ce_coboundary_witness: verification failed");
    return phi;
}

} // namespace dpoly
