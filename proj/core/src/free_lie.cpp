#include "dpoly/free_lie.hpp"

#include "dpoly/atiyah.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpoly {

DTensor lie_bracket_tensor(const DTensor& u, const DTensor& v)
{
    const int sign_exp = u.degree * v.degree;
    DTensor uv = cup(u, v);
    DTensor vu = cup(v, u);
    return dt_sum(uv, dt_scale(vu, sign_exp % 2 == 0 ? Rational(-1) : Rational(1)));
}

namespace {

bool is_lyndon(const std::vector<int>& w)
{
    // strictly smaller than all proper rotations
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            const int a = w[i];
            const int b = w[(i + r) % n];
            if (a != b) {
                if (a > b)
                    return false;
                break;
            }
            if (i + 1 == n)
                return false; // periodic word
        }
    return true;
}

void all_words(int alphabet, int length, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a < alphabet; ++a) {
        cur.push_back(a);
        all_words(alphabet, length, cur, out);
        cur.pop_back();
    }
}

// Right standard factorization of a Lyndon word: the split before its
// lexicographically least proper suffix; both halves are Lyndon.
std::size_t standard_split(const std::vector<int>& w)
{
    std::size_t best = 1;
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<int> suffix(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        std::vector<int> best_suffix(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
        if (suffix < best_suffix)
            best = s;
    }
    return best;
}

DTensor expand_word(const std::vector<UEnv::D1Mono>& alphabet, int leg_width, const std::vector<int>& w)
{
    if (w.size() == 1) {
        const auto& leg = alphabet.at(static_cast<std::size_t>(w[0]));
        DTensor out{1, leg_width, {}};
        out.terms.emplace(TensorKey(leg.begin(), leg.end()), Rational(1));
        return out;
    }
    const std::size_t s = standard_split(w);
    std::vector<int> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
    std::vector<int> right(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    return lie_bracket_tensor(expand_word(alphabet, leg_width, left),
                              expand_word(alphabet, leg_width, right));
}

int word_weight(const std::vector<UEnv::D1Mono>& alphabet, const LieWord& w)
{
    int total = 0;
    for (int letter : w.word)
        total += UEnv::weight(alphabet.at(static_cast<std::size_t>(letter)));
    return w.squared ? 2 * total : total;
}

std::string word_to_string(const LieWord& w)
{
    std::ostringstream os;
    if (w.squared)
        os << "sq";
    os << "[";
    for (std::size_t i = 0; i < w.word.size(); ++i)
        os << (i ? "." : "") << w.word[i];
    os << "]";
    return os.str();
}

} // namespace

std::vector<std::vector<int>> lyndon_words(int alphabet, int length)
{
    std::vector<std::vector<int>> out;
    if (length <= 0)
        return out;
    std::vector<int> cur;
    std::vector<std::vector<int>> words;
    all_words(alphabet, length, cur, words);
    for (auto& w : words)
        if (is_lyndon(w))
            out.push_back(std::move(w));
    return out;
}

std::vector<LieWord> super_lyndon_basis(int alphabet, int degree)
{
    std::vector<LieWord> out;
    for (auto& w : lyndon_words(alphabet, degree))
        out.push_back({std::move(w), false});
    if (degree % 2 == 0 && (degree / 2) % 2 == 1)
        for (auto& w : lyndon_words(alphabet, degree / 2))
            out.push_back({std::move(w), true});
    return out;
}

DTensor expand_lie_word(const std::vector<UEnv::D1Mono>& alphabet, int leg_width, const LieWord& w)
{
    DTensor base = expand_word(alphabet, leg_width, w.word);
    if (!w.squared)
        return base;
    return lie_bracket_tensor(base, base);
}

DTensor symmetrize_cup(const std::vector<DTensor>& factors)
{
    if (factors.empty())
        throw std::invalid_argument("symmetrize_cup: empty product");
    const int k = factors.front().leg_width;
    int total_degree = 0;
    for (const auto& f : factors)
        total_degree += f.degree;

    std::vector<int> perm(factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    DTensor sum{total_degree, k, {}};
    Integer count = 0;
    std::sort(perm.begin(), perm.end());
    do {
        // Koszul sign: -1 for every out-of-order pair of odd factors.
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j] &&
                    factors[static_cast<std::size_t>(perm[i])].degree % 2 == 1 &&
                    factors[static_cast<std::size_t>(perm[j])].degree % 2 == 1)
                    sign = -sign;
        DTensor prod = unit_tensor(k, Rational(1));
        for (std::size_t i = 0; i < perm.size(); ++i)
            prod = cup(prod, factors[static_cast<std::size_t>(perm[i])]);
        sum = dt_sum(sum, dt_scale(prod, Rational(sign)));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dt_scale(sum, Rational(1) / Rational(count));
}

namespace {

struct BasisPool {
    std::vector<LieWord> words;     // all degrees mixed
    std::vector<DTensor> expansion; // aligned with words
    std::vector<int> degree;        // tensor degree
    std::vector<int> weight;        // total leg weight
};

BasisPool build_pool(const std::vector<UEnv::D1Mono>& alphabet, int leg_width, int max_degree)
{
    BasisPool pool;
    const int q = static_cast<int>(alphabet.size());
    for (int d = 1; d <= max_degree; ++d)
        for (auto& w : super_lyndon_basis(q, d)) {
            pool.expansion.push_back(expand_lie_word(alphabet, leg_width, w));
            pool.degree.push_back(w.degree());
            pool.weight.push_back(word_weight(alphabet, w));
            pool.words.push_back(std::move(w));
        }
    return pool;
}

// Symmetric monomials in the pool of total tensor degree n: factor indices
// nondecreasing, odd factors never repeated (their squares vanish in the
// Koszul-signed symmetric algebra).
void enumerate_monomials(const BasisPool& pool, int n, std::size_t min_index,
                         std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out)
{
    if (n == 0) {
        if (!cur.empty())
            out.push_back(cur);
        return;
    }
    for (std::size_t i = min_index; i < pool.words.size(); ++i) {
        if (pool.degree[i] > n)
            continue;
        const bool odd = pool.degree[i] % 2 == 1;
        if (odd && !cur.empty() && cur.back() == i)
            continue; // odd square
        cur.push_back(i);
        enumerate_monomials(pool, n - pool.degree[i], odd ? i + 1 : i, cur, out);
        cur.pop_back();
    }
}

long slice_rank(const UEnv& env, const TruncationSpec& spec, int n, int total,
                const std::vector<const DTensor*>& columns)
{
    const auto keys = weight_slice_basis(env, n, total, spec.max_weight);
    std::map<TensorKey, std::size_t> row_of;
    for (std::size_t r = 0; r < keys.size(); ++r)
        row_of.emplace(keys[r], r);
    SparseMatrix m(keys.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [key, v] : columns[c]->terms)
            m.set(row_of.at(key), c, v);
    return static_cast<long>(rank(m));
}

} // namespace

IsoReport verify_I_iso(const UEnv& env, const TruncationSpec& spec)
{
    const int k = static_cast<int>(env.k());
    const auto alphabet = env.d1_basis_up_to_weight(spec.max_weight);
    const long v_count = static_cast<long>(alphabet.size());

    IsoReport report;
    report.spec = spec;
    BasisPool pool = build_pool(alphabet, k, spec.max_degree);

    // Certify the super-Lyndon sets degreewise: expansions independent and
    // spanning against the right-nested bracket family, per weight slice.
    for (int d = 1; d <= spec.max_degree; ++d) {
        LyndonCertificate cert;
        cert.degree = d;
        std::map<int, std::vector<const DTensor*>> by_weight;
        for (std::size_t i = 0; i < pool.words.size(); ++i)
            if (pool.degree[i] == d) {
                ++cert.count;
                by_weight[pool.weight[i]].push_back(&pool.expansion[i]);
            }
        // right-nested brackets [p1,[p2,[..,pn]]] over all letter tuples
        std::vector<DTensor> nested;
        std::vector<int> tuple(static_cast<std::size_t>(d), 0);
        while (true) {
            DTensor t = expand_word(alphabet, k, {tuple.back()});
            for (std::size_t i = tuple.size() - 1; i-- > 0;)
                t = lie_bracket_tensor(expand_word(alphabet, k, {tuple[i]}), t);
            nested.push_back(std::move(t));
            std::size_t pos = tuple.size();
            while (pos-- > 0) {
                if (tuple[pos] + 1 < static_cast<int>(alphabet.size())) {
                    ++tuple[pos];
                    std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tuple.end(), 0);
                    break;
                }
                if (pos == 0) {
                    pos = SIZE_MAX;
                    break;
                }
            }
            if (pos == SIZE_MAX)
                break;
        }
        std::map<int, std::vector<const DTensor*>> nested_by_weight;
        for (const auto& t : nested)
            if (!t.is_zero())
                nested_by_weight[tensor_weight(t)].push_back(&t);

        std::set<int> totals;
        for (const auto& [w, cols] : by_weight)
            totals.insert(w);
        for (const auto& [w, cols] : nested_by_weight)
            totals.insert(w);
        for (int total : totals) {
            std::vector<const DTensor*> lyndon_cols;
            if (auto it = by_weight.find(total); it != by_weight.end())
                lyndon_cols = it->second;
            cert.rank_lyndon += slice_rank(env, spec, d, total, lyndon_cols);
            std::vector<const DTensor*> combined = lyndon_cols;
            if (auto it = nested_by_weight.find(total); it != nested_by_weight.end())
                combined.insert(combined.end(), it->second.begin(), it->second.end());
            cert.rank_with_nested += slice_rank(env, spec, d, total, combined);
        }
        cert.pass = cert.rank_lyndon == cert.count && cert.rank_with_nested == cert.count;
        report.certificates.push_back(cert);
    }

    for (int n = 1; n <= spec.max_degree; ++n) {
        IsoRow row;
        row.degree = n;
        row.tensor_dim = 1;
        for (int i = 0; i < n; ++i)
            row.tensor_dim *= v_count;

        std::vector<std::vector<std::size_t>> monomials;
        std::vector<std::size_t> cur;
        enumerate_monomials(pool, n, 0, cur, monomials);
        row.sym_monomials = static_cast<long>(monomials.size());

        // images grouped by total weight; the symmetrization preserves it
        std::map<int, std::vector<DTensor>> images_by_weight;
        for (const auto& mono : monomials) {
            std::vector<DTensor> factors;
            int total = 0;
            for (std::size_t i : mono) {
                factors.push_back(pool.expansion[i]);
                total += pool.weight[i];
            }
            images_by_weight[total].push_back(symmetrize_cup(factors));
        }

        bool slices_ok = true;
        for (const auto& [total, images] : images_by_weight) {
            const long dim = static_cast<long>(weight_slice_basis(env, n, total, spec.max_weight).size());
            std::vector<const DTensor*> cols;
            for (const auto& t : images)
                cols.push_back(&t);
            const long r = slice_rank(env, spec, n, total, cols);
            row.rank += r;
            if (r != dim || r != static_cast<long>(images.size()))
                slices_ok = false;
        }
        row.iso_pass = slices_ok && row.sym_monomials == row.tensor_dim && row.rank == row.tensor_dim;
        report.rows.push_back(row);
    }

    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const IsoRow& r) { return r.iso_pass; }) &&
                  std::all_of(report.certificates.begin(), report.certificates.end(),
                              [](const LyndonCertificate& c) { return c.pass; });
    return report;
}

DStabilityReport d_stability_check(const UEnv& env, const TruncationSpec& spec, std::uint64_t seed)
{
    const int k = static_cast<int>(env.k());
    const auto alphabet = env.d1_basis_up_to_weight(spec.max_weight);

    DStabilityReport report;
    report.spec = spec;
    report.seed = seed;
    BasisPool pool = build_pool(alphabet, k, spec.max_degree);

    for (std::size_t i = 0; i < pool.words.size(); ++i) {
        const int n = pool.degree[i];
        if (n > spec.max_degree - 1)
            continue;
        DStabilityRow row;
        row.degree = n;
        row.word = word_to_string(pool.words[i]);

        DTensor image = differential(env, pool.expansion[i]);
        if (image.is_zero()) {
            row.member = true;
            report.rows.push_back(row);
            continue;
        }
        const int total = tensor_weight(image); // d preserves the word's weight
        std::vector<const DTensor*> cols;
        for (std::size_t j = 0; j < pool.words.size(); ++j)
            if (pool.degree[j] == n + 1 && pool.weight[j] == total)
                cols.push_back(&pool.expansion[j]);

        const auto keys = weight_slice_basis(env, n + 1, total, spec.max_weight);
        std::map<TensorKey, std::size_t> row_of;
        for (std::size_t r = 0; r < keys.size(); ++r)
            row_of.emplace(keys[r], r);
        SparseMatrix m(keys.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [key, v] : cols[c]->terms)
                m.set(row_of.at(key), c, v);
        Vec rhs(keys.size(), Rational(0));
        for (const auto& [key, v] : image.terms)
            rhs[row_of.at(key)] = v;
        row.member = solve(m, rhs).has_value();
        report.rows.push_back(row);
    }

    // chain-map identity on seeded samples
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < pool.words.size(); ++i)
        if (pool.degree[i] <= spec.max_degree - 1)
            small.push_back(i);
    report.chain_map_pass = true;
    const std::size_t samples = std::min<std::size_t>(8, small.size() * small.size());
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t a = small[rng() % small.size()];
        const std::size_t b = small[rng() % small.size()];
        const DTensor& U = pool.expansion[a];
        const DTensor& V = pool.expansion[b];
        DTensor lhs = differential(env, lie_bracket_tensor(U, V));
        DTensor rhs = dt_sum(lie_bracket_tensor(differential(env, U), V),
                             dt_scale(lie_bracket_tensor(U, differential(env, V)),
                                      pool.degree[a] % 2 == 0 ? Rational(1) : Rational(-1)));
        ++report.chain_map_samples;
        if (!dt_equal(lhs, rhs))
            report.chain_map_pass = false;
    }

    report.pass = report.chain_map_pass &&
                  std::all_of(report.rows.begin(), report.rows.end(),
                              [](const DStabilityRow& r) { return r.member; });
    return report;
}

UEnv::D1Elem beta(const UEnv& env, const Vec& q)
{
    if (q.size() != env.k())
        throw std::invalid_argument("beta: quotient class has wrong length");
    UEnv::D1Elem out;
    for (std::size_t i = 0; i < env.k(); ++i) {
        if (q[i] == 0)
            continue;
        UEnv::D1Mono mono(env.k(), 0);
        mono[i] = 1;
        out.emplace(std::move(mono), q[i]);
    }
    return out;
}

namespace {

UEnv::D1Elem d1_scale_add(UEnv::D1Elem acc, const UEnv::D1Elem& other, const Rational& c)
{
    for (const auto& [mono, v] : other) {
        auto it = acc.find(mono);
        if (it == acc.end()) {
            if (c * v != 0)
                acc.emplace(mono, c * v);
            continue;
        }
        it->second += c * v;
        if (it->second == 0)
            acc.erase(it);
    }
    return acc;
}

} // namespace

CompatibilityReport bracket_compatibility_check(const UEnv& env, const TruncationSpec& spec)
{
    (void)spec;
    const LiePair& pair = env.pair();
    const std::size_t k = env.k();
    const std::size_t m = env.m();

    CompatibilityReport report;

    // s(b_p . b_q) = (1/2) reduce(lift(b_p) lift(b_q) + lift(b_q) lift(b_p))
    std::vector<std::vector<UEnv::D1Elem>> s(k, std::vector<UEnv::D1Elem>(k));
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
            UEnv::Elem prod = env.multiply(env.generator_elem(p), env.generator_elem(q));
            UEnv::Elem prod_rev = env.multiply(env.generator_elem(q), env.generator_elem(p));
            UEnv::Elem sum;
            for (const auto& [mono, c] : prod)
                sum[mono] = c / 2;
            for (const auto& [mono, c] : prod_rev) {
                sum[mono] += c / 2;
                if (sum[mono] == 0)
                    sum.erase(mono);
            }
            s[p][q] = env.reduce(sum);
        }

    // (i) d(s(b_p . b_q)) = -[beta(b_p), beta(b_q)]
    report.identity_i_pass = true;
    for (std::size_t p = 0; p < k && report.identity_i_pass; ++p)
        for (std::size_t q = 0; q < k; ++q) {
            DTensor lhs = differential(env, d1_to_tensor(env, s[p][q]));
            Vec ep(k, Rational(0)), eq(k, Rational(0));
            ep[p] = 1;
            eq[q] = 1;
            DTensor rhs = dt_scale(lie_bracket_tensor(d1_to_tensor(env, beta(env, ep)),
                                                      d1_to_tensor(env, beta(env, eq))),
                                   Rational(-1));
            if (!dt_equal(lhs, rhs)) {
                report.identity_i_pass = false;
                report.identity_i_counterexample =
                    "(b" + std::to_string(p + 1) + ", b" + std::to_string(q + 1) + ")";
                break;
            }
        }

    // (ii) equivariance defect against the curvature of the zero-parameter
    // connection, one global sign
    Connection conn = flat_complement_connection(pair);
    int sign = 0; // 0 = undetermined
    report.identity_ii_pass = true;
    for (std::size_t x = 0; x < m && report.identity_ii_pass; ++x) {
        Vec X(m, Rational(0));
        X[x] = 1;
        DenseMatrix action = pair.quotient_action_matrix(x);
        for (std::size_t p = 0; p < k && report.identity_ii_pass; ++p)
            for (std::size_t q = 0; q < k; ++q) {
                UEnv::D1Elem defect = env.act_d1(X, s[p][q]);
                // subtract s(X.(b_p . b_q)) = s((X.b_p) . b_q) + s(b_p . (X.b_q))
                for (std::size_t r = 0; r < k; ++r) {
                    defect = d1_scale_add(std::move(defect), s[r][q], -action.at(r, p));
                    defect = d1_scale_add(std::move(defect), s[p][r], -action.at(r, q));
                }

                Vec dir_x(pair.dim_g(), Rational(0)), dir_b(pair.dim_g(), Rational(0));
                dir_x[x] = 1;
                dir_b[m + p] = 1;
                DenseMatrix curv = curvature(pair, conn, dir_x, dir_b);
                Vec image(k, Rational(0));
                for (std::size_t r = 0; r < k; ++r)
                    image[r] = curv.at(r, q);
                UEnv::D1Elem candidate = beta(env, image);

                const bool defect_zero = defect.empty();
                const bool cand_zero = candidate.empty();
                if (defect_zero && cand_zero)
                    continue;
                int needed = 0;
                if (d1_scale_add(defect, candidate, Rational(-1)).empty())
                    needed = 1;
                else if (d1_scale_add(defect, candidate, Rational(1)).empty())
                    needed = -1;
                if (needed == 0 || (sign != 0 && sign != needed)) {
                    report.identity_ii_pass = false;
                    report.identity_ii_counterexample = "(X=" + pair.basis_names()[x] + ", b" +
                                                        std::to_string(p + 1) + ", b" +
                                                        std::to_string(q + 1) + ")";
                    break;
                }
                sign = needed;
            }
    }
    report.sign_determined = sign != 0;
    report.sign = sign != 0 ? sign : -1; // conventional default when all residuals vanish
    report.pass = report.identity_i_pass && report.identity_ii_pass;
    return report;
}

} // namespace dpoly
