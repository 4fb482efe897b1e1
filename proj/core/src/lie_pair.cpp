#include "dpoly/lie_pair.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpoly {

std::string violation_to_string(const Violation& v)
{
    std::ostringstream os;
    switch (v.kind) {
    case Violation::Kind::Antisymmetry:
        os << "antisymmetry";
        break;
    case Violation::Kind::Jacobi:
        os << "jacobi";
        break;
    case Violation::Kind::SubalgebraClosure:
        os << "subalgebra_closure";
        break;
    }
    os << " (";
    for (std::size_t t = 0; t < v.indices.size(); ++t)
        os << (t ? "," : "") << v.indices[t];
    os << "): " << v.detail;
    return os.str();
}

PairValidation LiePair::validate(std::size_t dim_g, std::size_t dim_h,
                                            const std::vector<std::vector<Vec>>& c,
                                            std::vector<std::string> names)
{
    if (dim_h > dim_g)
        throw std::invalid_argument("subalgebra dimension exceeds algebra dimension");
    if (c.size() != dim_g)
        throw std::invalid_argument("structure-constant table has wrong first dimension");
    for (const auto& row : c) {
        if (row.size() != dim_g)
            throw std::invalid_argument("structure-constant table has wrong second dimension");
        for (const auto& entry : row)
            if (entry.size() != dim_g)
                throw std::invalid_argument("structure-constant table has wrong third dimension");
    }
    if (names.empty())
        for (std::size_t i = 0; i < dim_g; ++i)
            names.push_back("x" + std::to_string(i + 1));
    if (names.size() != dim_g)
        throw std::invalid_argument("basis name count does not match dimension");

    PairValidation res;

    for (std::size_t i = 0; i < dim_g; ++i)
        for (std::size_t j = i; j < dim_g; ++j)
            for (std::size_t k = 0; k < dim_g; ++k) {
                Rational defect = c[i][j][k] + c[j][i][k];
                if (defect != 0)
                    res.violations.push_back({Violation::Kind::Antisymmetry,
                                              {i, j, k},
                                              "c[i][j][k] + c[j][i][k] = " + rational_to_string(defect)});
            }

    // Jacobi on every basis triple; dimensions are desk scale so the cubic
    // sweep is instant.
    auto bracket_basis = [&](std::size_t i, std::size_t j) { return c[i][j]; };
    for (std::size_t i = 0; i < dim_g; ++i)
        for (std::size_t j = i + 1; j < dim_g; ++j)
            for (std::size_t k = j + 1; k < dim_g; ++k) {
                Vec defect(dim_g, Rational(0));
                // [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj]
                auto accumulate = [&](std::size_t a, std::size_t b, std::size_t cc) {
                    const Vec& ab = bracket_basis(a, b);
                    for (std::size_t l = 0; l < dim_g; ++l) {
                        if (ab[l] == 0)
                            continue;
                        for (std::size_t t = 0; t < dim_g; ++t)
                            defect[t] += ab[l] * c[l][cc][t];
                    }
                };
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                bool zero = true;
                for (const auto& d : defect)
                    if (d != 0)
                        zero = false;
                if (!zero) {
                    std::string detail = "jacobiator = (";
                    for (std::size_t t = 0; t < dim_g; ++t)
                        detail += (t ? "," : "") + rational_to_string(defect[t]);
                    detail += ")";
                    res.violations.push_back({Violation::Kind::Jacobi, {i, j, k}, detail});
                }
            }

    for (std::size_t i = 0; i < dim_h; ++i)
        for (std::size_t j = 0; j < dim_h; ++j)
            for (std::size_t k = dim_h; k < dim_g; ++k)
                if (c[i][j][k] != 0)
                    res.violations.push_back({Violation::Kind::SubalgebraClosure,
                                              {i, j, k},
                                              "bracket leaks onto complement coordinate " +
                                                  std::to_string(k) + " with coefficient " +
                                                  rational_to_string(c[i][j][k])});

    if (res.violations.empty()) {
        LiePair p;
        p.dim_g_ = dim_g;
        p.dim_h_ = dim_h;
        p.sc_ = c;
        p.names_ = std::move(names);
        res.pair = std::move(p);
    }
    return res;
}

Vec LiePair::bracket(const Vec& x, const Vec& y) const
{
    if (x.size() != dim_g_ || y.size() != dim_g_)
        throw std::invalid_argument("bracket: vector length mismatch");
    Vec z(dim_g_, Rational(0));
    for (std::size_t i = 0; i < dim_g_; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_g_; ++j) {
            if (y[j] == 0)
                continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_g_; ++k)
                if (sc_[i][j][k] != 0)
                    z[k] += xy * sc_[i][j][k];
        }
    }
    return z;
}

Vec LiePair::quotient_action(const Vec& X, const Vec& q) const
{
    if (X.size() != dim_g_)
        throw std::invalid_argument("quotient_action: X has wrong length");
    for (std::size_t i = dim_h_; i < dim_g_; ++i)
        if (X[i] != 0)
            throw std::invalid_argument("quotient_action: X is not in the subalgebra");
    if (q.size() != dim_quotient())
        throw std::invalid_argument("quotient_action: class vector has wrong length");

    Vec lift(dim_g_, Rational(0));
    for (std::size_t i = 0; i < dim_quotient(); ++i)
        lift[dim_h_ + i] = q[i];
    Vec full = bracket(X, lift);
    return Vec(full.begin() + static_cast<std::ptrdiff_t>(dim_h_), full.end());
}

DenseMatrix LiePair::quotient_action_matrix(std::size_t h_index) const
{
    if (h_index >= dim_h_)
        throw std::invalid_argument("quotient_action_matrix: index not in subalgebra");
    const std::size_t k = dim_quotient();
    DenseMatrix m(k, k);
    for (std::size_t q = 0; q < k; ++q)
        for (std::size_t p = 0; p < k; ++p)
            m.at(p, q) = sc_[h_index][dim_h_ + q][dim_h_ + p];
    return m;
}

namespace {

PairValidation pair_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("pair file: top level must be an object");
    for (const char* key : {"dim", "subalgebra_dim"})
        if (!j.contains(key) || !j[key].is_number_unsigned())
            throw std::invalid_argument(std::string("pair file: missing or bad '") + key + "'");
    const std::size_t n = j["dim"].get<std::size_t>();
    const std::size_t m = j["subalgebra_dim"].get<std::size_t>();
    if (m > n)
        throw std::invalid_argument("pair file: subalgebra_dim exceeds dim");

    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != n)
            throw std::invalid_argument("pair file: 'basis' must list one name per dimension");
        for (const auto& b : j["basis"])
            names.push_back(b.get<std::string>());
    }

    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n, Rational(0))));
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array())
            throw std::invalid_argument("pair file: 'brackets' must be an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& e : j["brackets"]) {
            if (!e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
                throw std::invalid_argument("pair file: bracket entry needs i, j, coeffs");
            const std::size_t i = e["i"].get<std::size_t>();
            const std::size_t jj = e["j"].get<std::size_t>();
            if (i >= n || jj >= n)
                throw std::invalid_argument("pair file: bracket index out of range");
            if (i >= jj)
                throw std::invalid_argument("pair file: bracket entries require i < j");
            if (!seen.insert({i, jj}).second)
                throw std::invalid_argument("pair file: duplicate bracket entry");
            if (!e["coeffs"].is_array() || e["coeffs"].size() != n)
                throw std::invalid_argument("pair file: coeffs must have one entry per dimension");
            for (std::size_t k = 0; k < n; ++k) {
                Rational v = rational_from_string(e["coeffs"][k].get<std::string>());
                c[i][jj][k] = v;
                c[jj][i][k] = -v;
            }
        }
    }
    return LiePair::validate(n, m, c, names);
}

} // namespace

PairValidation parse_lie_pair_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("pair file: JSON parse error: ") + e.what());
    }
    return pair_from_json(j);
}

PairValidation load_lie_pair_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open pair file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lie_pair_json(buf.str());
}

} // namespace dpoly
