#include "dpoly/hkr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpoly {

namespace {

Rational factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

int permutation_sign(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> increasing_index_tuples(int k, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i < k; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

DTensor hkr_map(const UEnv& env, const ExteriorElement& x)
{
    const int k = static_cast<int>(env.k());
    DTensor out{x.degree, k, {}};
    const Rational norm = Rational(1) / factorial(x.degree);
    for (const auto& [tuple, c] : x.terms) {
        if (static_cast<int>(tuple.size()) != x.degree)
            throw std::invalid_argument("hkr_map: tuple length does not match degree");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= k)
                throw std::invalid_argument("hkr_map: complement index out of range");
            if (i + 1 < tuple.size() && tuple[i] >= tuple[i + 1])
                throw std::invalid_argument("hkr_map: indices must strictly increase");
        }
        std::vector<int> perm(tuple.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            TensorKey key;
            key.reserve(tuple.size() * static_cast<std::size_t>(k));
            for (std::size_t pos = 0; pos < perm.size(); ++pos) {
                UEnv::D1Mono leg(static_cast<std::size_t>(k), 0);
                leg[static_cast<std::size_t>(tuple[static_cast<std::size_t>(perm[pos])])] = 1;
                key.insert(key.end(), leg.begin(), leg.end());
            }
            dt_add(out, key, c * norm * permutation_sign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

HkrReport hkr_check(const UEnv& env, const TruncationSpec& spec)
{
    const int k = static_cast<int>(env.k());
    HkrReport report;
    report.spec = spec;

    CohomologyReport cohomology = cohomology_report(env, spec);

    const int cocycle_limit = std::min(spec.max_degree, k);
    const int class_limit = std::min({spec.max_degree - 1, spec.max_weight - 1, k});

    auto binomial = [&](int n) {
        long b = 1;
        for (int i = 0; i < n; ++i)
            b = b * (k - i) / (i + 1);
        return b;
    };

    for (int n = 0; n <= std::max(cocycle_limit, class_limit); ++n) {
        HkrRow row;
        row.n = n;
        row.expected_binomial = binomial(n);

        const auto tuples = increasing_index_tuples(k, n);

        if (n <= cocycle_limit)
            for (const auto& t : tuples) {
                ExteriorElement x{n, {{t, Rational(1)}}};
                if (!differential(env, hkr_map(env, x)).is_zero()) {
                    row.cocycle_pass = false;
                    break;
                }
            }

        if (n <= class_limit) {
            // rank([d | images]) must exceed rank(d) by the full count, so
            // no nonzero rational combination of images is a coboundary.
            const auto dst = weight_slice_basis(env, n, n, spec.max_weight);
            std::map<TensorKey, std::size_t> row_of;
            for (std::size_t r = 0; r < dst.size(); ++r)
                row_of.emplace(dst[r], r);
            const auto src = weight_slice_basis(env, n == 0 ? 0 : n - 1, n, spec.max_weight);

            const std::size_t d_cols = n == 0 ? 0 : src.size();
            SparseMatrix d_only(dst.size(), d_cols);
            SparseMatrix aug(dst.size(), d_cols + tuples.size());
            if (n > 0)
                for (std::size_t col = 0; col < src.size(); ++col) {
                    DTensor image = differential(env, mono_tensor(k, src[col]));
                    for (const auto& [key, v] : image.terms) {
                        d_only.set(row_of.at(key), col, v);
                        aug.set(row_of.at(key), col, v);
                    }
                }
            for (std::size_t t = 0; t < tuples.size(); ++t) {
                ExteriorElement x{n, {{tuples[t], Rational(1)}}};
                for (const auto& [key, v] : hkr_map(env, x).terms)
                    aug.set(row_of.at(key), d_cols + t, v);
            }
            const std::size_t rank_d = n == 0 ? 0 : rank(d_only);
            row.independent_pass = rank(aug) == rank_d + tuples.size();

            // second route: each individual image must fail the witness solve
            if (row.independent_pass)
                for (const auto& t : tuples) {
                    ExteriorElement x{n, {{t, Rational(1)}}};
                    if (coboundary_witness_dpoly(env, spec, hkr_map(env, x)).has_value()) {
                        row.independent_pass = false;
                        break;
                    }
                }

            row.dim_h = cohomology.rows[static_cast<std::size_t>(n)].dim_h;
            if (row.dim_h != row.expected_binomial)
                row.independent_pass = false;
        }

        report.rows.push_back(row);
    }

    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const HkrRow& r) { return r.cocycle_pass && r.independent_pass; });
    return report;
}

} // namespace dpoly
