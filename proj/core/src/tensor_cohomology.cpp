#include "dpoly/tensor_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

std::vector<TensorKey> weight_slice_basis(const UEnv& env, int n, int total, int leg_cap)
{
    const auto legs_all = env.d1_basis_up_to_weight(std::min(total, leg_cap));
    std::vector<TensorKey> out;
    TensorKey cur;
    auto rec = [&](auto&& self, int remaining_legs, int remaining_weight) -> void {
        if (remaining_legs == 0) {
            if (remaining_weight == 0)
                out.push_back(cur);
            return;
        }
        for (const auto& leg : legs_all) {
            const int w = UEnv::weight(leg);
            if (w > remaining_weight)
                continue;
            cur.insert(cur.end(), leg.begin(), leg.end());
            self(self, remaining_legs - 1, remaining_weight - w);
            cur.resize(cur.size() - leg.size());
        }
    };
    if (n == 0) {
        if (total == 0)
            out.push_back(TensorKey{});
        return out;
    }
    rec(rec, n, total);
    return out;
}

SparseMatrix differential_slice_matrix(const UEnv& env, int n, int total, int leg_cap)
{
    const auto src = weight_slice_basis(env, n, total, leg_cap);
    const auto dst = weight_slice_basis(env, n + 1, total, leg_cap);
    std::map<TensorKey, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r)
        row_of.emplace(dst[r], r);

    const int k = static_cast<int>(env.k());
    SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        DTensor image = differential(env, mono_tensor(k, src[col]));
        for (const auto& [key, v] : image.terms) {
            auto it = row_of.find(key);
            if (it == row_of.end())
                throw std::logic_error("differential left its weight slice");
            m.set(it->second, col, v);
        }
    }
    return m;
}

CohomologyReport cohomology_report(const UEnv& env, const TruncationSpec& spec)
{
    if (spec.max_weight < 1 || spec.max_degree < 1)
        throw std::invalid_argument("cohomology_report: bounds must be >= 1");

    CohomologyReport report;
    report.spec = spec;

    const int w = spec.max_weight;
    // rank of d_n per weight slice, shared between the ker row of degree n
    // and the im row of degree n+1
    std::map<std::pair<int, int>, std::size_t> rank_cache;
    auto rank_at = [&](int n, int total) {
        auto key = std::make_pair(n, total);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end())
            return it->second;
        std::size_t r = rank(differential_slice_matrix(env, n, total, w));
        rank_cache.emplace(key, r);
        return r;
    };

    for (int n = 0; n <= spec.max_degree; ++n) {
        CohomologyRow row;
        row.degree = n;
        for (int total = 0; total <= w; ++total) {
            const long dim = static_cast<long>(weight_slice_basis(env, n, total, w).size());
            if (dim == 0)
                continue;
            const long rk = static_cast<long>(rank_at(n, total));
            row.dim_space += dim;
            row.dim_ker += dim - rk;
            if (n > 0)
                row.dim_im += static_cast<long>(rank_at(n - 1, total));
        }
        row.dim_h = row.dim_ker - row.dim_im;
        report.rows.push_back(row);
    }
    return report;
}

std::optional<DTensor> coboundary_witness_dpoly(const UEnv& env, const TruncationSpec& spec, const DTensor& c)
{
    const int k = static_cast<int>(env.k());
    if (c.leg_width != k)
        throw std::invalid_argument("coboundary_witness_dpoly: leg width mismatch");
    if (c.degree > spec.max_degree)
        throw std::invalid_argument("coboundary_witness_dpoly: cocycle outside truncation degree");
    for (const auto& [key, v] : c.terms)
        for (int i = 0; i < c.degree; ++i) {
            int leg = 0;
            for (int t = 0; t < k; ++t)
                leg += key[static_cast<std::size_t>(i * k + t)];
            if (leg > spec.max_weight)
                throw std::invalid_argument("coboundary_witness_dpoly: cocycle outside truncation weight");
        }
    if (!differential(env, c).is_zero())
        throw std::invalid_argument("coboundary_witness_dpoly: input is not a cocycle");

    const int n = c.degree;
    if (n == 0)
        return c.is_zero() ? std::optional<DTensor>(DTensor{0, k, {}}) : std::nullopt;

    // Split by total weight; the coboundary preserves it, so the slices
    // solve independently.
    std::map<int, DTensor> slices;
    for (const auto& [key, v] : c.terms) {
        auto [it, inserted] = slices.try_emplace(key_weight(key), DTensor{n, k, {}});
        it->second.terms.emplace(key, v);
    }

    DTensor witness{n - 1, k, {}};
    for (const auto& [total, slice] : slices) {
        const auto src = weight_slice_basis(env, n - 1, total, spec.max_weight);
        const auto dst = weight_slice_basis(env, n, total, spec.max_weight);
        std::map<TensorKey, std::size_t> row_of;
        for (std::size_t r = 0; r < dst.size(); ++r)
            row_of.emplace(dst[r], r);

        SparseMatrix m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            DTensor image = differential(env, mono_tensor(k, src[col]));
            for (const auto& [key, v] : image.terms)
                m.set(row_of.at(key), col, v);
        }
        Vec rhs(dst.size(), Rational(0));
        for (const auto& [key, v] : slice.terms)
            rhs[row_of.at(key)] = v;

        auto x = solve(m, rhs);
        if (!x)
            return std::nullopt;
        for (std::size_t col = 0; col < src.size(); ++col)
            if ((*x)[col] != 0)
                dt_add(witness, src[col], (*x)[col]);
    }

    if (!dt_equal(differential(env, witness), c))
        throw std::logic_error("coboundary_witness_dpoly: verification failed");
    return witness;
}

} // namespace dpoly
