#include "dpoly/atiyah.hpp"

#include <stdexcept>

namespace dpoly {

namespace {

Connection base_connection(const LiePair& pair)
{
    Connection conn;
    conn.nabla.reserve(pair.dim_g());
    for (std::size_t x = 0; x < pair.dim_h(); ++x)
        conn.nabla.push_back(pair.quotient_action_matrix(x));
    return conn;
}

} // namespace

Connection canonical_connection(const LiePair& pair)
{
    const std::size_t k = pair.dim_quotient();
    Connection conn = base_connection(pair);
    for (std::size_t i = 0; i < k; ++i) {
        DenseMatrix m(k, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t p = 0; p < k; ++p)
                m.at(p, j) = pair.c(pair.dim_h() + i, pair.dim_h() + j, pair.dim_h() + p) / 2;
        conn.nabla.push_back(m);
    }
    return conn;
}

Connection canonical_connection(const LiePair& pair, const std::vector<DenseMatrix>& complement_params)
{
    const std::size_t k = pair.dim_quotient();
    if (complement_params.size() != k)
        throw std::invalid_argument("canonical_connection: one matrix per complement direction required");
    for (const auto& m : complement_params)
        if (m.rows() != k || m.cols() != k)
            throw std::invalid_argument("canonical_connection: parameter matrix has wrong shape");
    Connection conn = base_connection(pair);
    for (const auto& m : complement_params)
        conn.nabla.push_back(m);
    return conn;
}

Connection flat_complement_connection(const LiePair& pair)
{
    const std::size_t k = pair.dim_quotient();
    return canonical_connection(pair, std::vector<DenseMatrix>(k, DenseMatrix(k, k)));
}

bool connection_extends_action(const LiePair& pair, const Connection& conn)
{
    if (conn.nabla.size() != pair.dim_g())
        return false;
    for (std::size_t x = 0; x < pair.dim_h(); ++x)
        if (!(conn.nabla[x] == pair.quotient_action_matrix(x)))
            return false;
    return true;
}

DenseMatrix curvature(const LiePair& pair, const Connection& conn, const Vec& x, const Vec& y)
{
    const std::size_t k = pair.dim_quotient();
    if (x.size() != pair.dim_g() || y.size() != pair.dim_g())
        throw std::invalid_argument("curvature: direction vectors must have dim_g coordinates");
    auto nabla_of = [&](const Vec& v) {
        DenseMatrix m(k, k);
        for (std::size_t l = 0; l < pair.dim_g(); ++l)
            if (v[l] != 0)
                m = m + conn.nabla[l] * v[l];
        return m;
    };
    DenseMatrix nx = nabla_of(x);
    DenseMatrix ny = nabla_of(y);
    return nx * ny - ny * nx - nabla_of(pair.bracket(x, y));
}

HModule atiyah_module(const LiePair& pair)
{
    HModule q = quotient_module(pair);
    return tensor_module(dual_module(q), end_module(q));
}

CECochain atiyah_cocycle(const LiePair& pair, const Connection& conn)
{
    const std::size_t k = pair.dim_quotient();
    const std::size_t m = pair.dim_h();
    if (!connection_extends_action(pair, conn))
        throw std::invalid_argument("atiyah_cocycle: connection does not extend the h-action");

    Vec dir_x(pair.dim_g(), Rational(0)), dir_y(pair.dim_g(), Rational(0));
    // Lift-independence: the curvature must kill h x h.
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            dir_x.assign(pair.dim_g(), Rational(0));
            dir_y.assign(pair.dim_g(), Rational(0));
            dir_x[x] = 1;
            dir_y[y] = 1;
            if (!curvature(pair, conn, dir_x, dir_y).is_zero())
                throw std::invalid_argument("atiyah_cocycle: curvature does not vanish on the subalgebra");
        }

    CECochain cocycle;
    cocycle.degree = 1;
    for (std::size_t x = 0; x < m; ++x) {
        Vec value(k * k * k, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            dir_x.assign(pair.dim_g(), Rational(0));
            dir_y.assign(pair.dim_g(), Rational(0));
            dir_x[x] = 1;
            dir_y[m + i] = 1;
            DenseMatrix r = curvature(pair, conn, dir_x, dir_y);
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = 0; q < k; ++q)
                    value[i * k * k + p * k + q] = r.at(p, q);
        }
        bool zero = true;
        for (const auto& v : value)
            if (v != 0)
                zero = false;
        if (!zero)
            cocycle.values[{x}] = std::move(value);
    }

    HModule mod = atiyah_module(pair);
    if (!ce_differential(pair, mod, cocycle).is_zero())
        throw std::invalid_argument("atiyah_cocycle: curvature cochain is not closed");
    return cocycle;
}

ClassResult class_is_nonzero(const LiePair& pair, const Connection& conn)
{
    CECochain cocycle = atiyah_cocycle(pair, conn);
    HModule mod = atiyah_module(pair);
    ClassResult res;
    if (pair.dim_h() == 0) {
        // no degree-1 cochains at all: the class is trivially zero
        res.nonzero = false;
        CECochain zero;
        zero.degree = 0;
        res.witness = zero;
        return res;
    }
    auto witness = ce_coboundary_witness(pair, mod, cocycle);
    res.nonzero = !witness.has_value();
    res.witness = std::move(witness);
    return res;
}

IndependenceResult independence_check(const LiePair& pair, const Connection& c1, const Connection& c2)
{
    CECochain r1 = atiyah_cocycle(pair, c1);
    CECochain r2 = atiyah_cocycle(pair, c2);
    HModule mod = atiyah_module(pair);

    CECochain diff;
    diff.degree = 1;
    for (std::size_t x = 0; x < pair.dim_h(); ++x) {
        Vec v1 = ce_evaluate(r1, {x}, mod.dim);
        Vec v2 = ce_evaluate(r2, {x}, mod.dim);
        Vec d(mod.dim, Rational(0));
        bool zero = true;
        for (std::size_t t = 0; t < mod.dim; ++t) {
            d[t] = v1[t] - v2[t];
            if (d[t] != 0)
                zero = false;
        }
        if (!zero)
            diff.values[{x}] = std::move(d);
    }

    IndependenceResult res;
    auto witness = ce_coboundary_witness(pair, mod, diff);
    res.ok = witness.has_value();
    res.witness = std::move(witness);
    return res;
}

} // namespace dpoly
