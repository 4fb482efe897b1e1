#include "dpoly/uea.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dpoly {

namespace {

void add_term(UEnv::Elem& e, const UEnv::Mono& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto it = e.find(mono);
    if (it == e.end()) {
        e.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        e.erase(it);
}

void add_term_d1(UEnv::D1Elem& e, const UEnv::D1Mono& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto it = e.find(mono);
    if (it == e.end()) {
        e.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        e.erase(it);
}

Integer binomial(int n, int r)
{
    Integer b = 1;
    for (int i = 0; i < r; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

} // namespace

UEnv::UEnv(const LiePair& pair)
    : pair_(&pair), n_(pair.dim_g()), m_(pair.dim_h()), k_(pair.dim_g() - pair.dim_h())
{
    sc_.assign(n_, std::vector<Vec>(n_, Vec(n_, Rational(0))));
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            const std::size_t i = original_of_storage(s);
            const std::size_t j = original_of_storage(t);
            for (std::size_t l = 0; l < n_; ++l)
                sc_[s][t][storage_of_original(l)] = pair.c(i, j, l);
        }
}

std::size_t UEnv::storage_of_original(std::size_t orig) const
{
    return orig < m_ ? k_ + orig : orig - m_;
}

std::size_t UEnv::original_of_storage(std::size_t s) const
{
    return s < k_ ? m_ + s : s - k_;
}

int UEnv::weight(const Mono& mono)
{
    return std::accumulate(mono.begin(), mono.end(), 0);
}

int UEnv::weight_d1(const D1Elem& e)
{
    int w = 0;
    for (const auto& [mono, c] : e)
        w = std::max(w, weight(mono));
    return w;
}

UEnv::Mono UEnv::generator(std::size_t storage_pos) const
{
    Mono mono(n_, 0);
    mono.at(storage_pos) = 1;
    return mono;
}

UEnv::Elem UEnv::generator_elem(std::size_t storage_pos) const
{
    return Elem{{generator(storage_pos), Rational(1)}};
}

// mono * x_gen for a normal monomial. If the last letter sorts before the
// new one, append; otherwise peel the last letter y and use
// (w y) g = (w g) y + w [y,g].
UEnv::Elem UEnv::multiply_mono_gen(const Mono& mono, std::size_t gen) const
{
    std::size_t last = n_;
    for (std::size_t s = n_; s-- > 0;)
        if (mono[s] > 0) {
            last = s;
            break;
        }
    if (last == n_ || last <= gen) {
        Mono appended = mono;
        ++appended[gen];
        return Elem{{appended, Rational(1)}};
    }

    const auto key = std::make_pair(mono, gen);
    auto hit = straighten_memo_.find(key);
    if (hit != straighten_memo_.end())
        return hit->second;

    Mono head = mono;
    --head[last];

    Elem result;
    // (head * gen) * y, distributing over the straightened head*gen
    for (const auto& [hm, hc] : multiply_mono_gen(head, gen)) {
        for (const auto& [rm, rc] : multiply_mono_gen(hm, last))
            add_term(result, rm, hc * rc);
    }
    // head * [y, gen]
    const Vec& bracket = sc_[last][gen];
    for (std::size_t z = 0; z < n_; ++z) {
        if (bracket[z] == 0)
            continue;
        for (const auto& [rm, rc] : multiply_mono_gen(head, z))
            add_term(result, rm, bracket[z] * rc);
    }

    straighten_memo_.emplace(key, result);
    return result;
}

UEnv::Elem UEnv::multiply(const Elem& u, const Elem& v) const
{
    Elem result;
    for (const auto& [vm, vc] : v) {
        // Fold the letters of vm into each term of u, left to right.
        Elem partial = u;
        for (std::size_t s = 0; s < n_; ++s)
            for (int rep = 0; rep < vm[s]; ++rep) {
                Elem next;
                for (const auto& [pm, pc] : partial)
                    for (const auto& [rm, rc] : multiply_mono_gen(pm, s))
                        add_term(next, rm, pc * rc);
                partial = std::move(next);
            }
        for (const auto& [pm, pc] : partial)
            add_term(result, pm, pc * vc);
    }
    return result;
}

UEnv::Tensor2 UEnv::coproduct(const Elem& u) const
{
    std::map<std::pair<Mono, Mono>, Rational> acc;
    for (const auto& [mono, c] : u) {
        // All ways to split each exponent; subwords of a normal word are
        // normal, so no straightening occurs.
        std::vector<Mono> lefts{Mono(n_, 0)};
        std::vector<Integer> coeffs{Integer(1)};
        for (std::size_t s = 0; s < n_; ++s) {
            if (mono[s] == 0)
                continue;
            std::vector<Mono> nl;
            std::vector<Integer> nc;
            for (std::size_t t = 0; t < lefts.size(); ++t)
                for (int b = 0; b <= mono[s]; ++b) {
                    Mono next = lefts[t];
                    next[s] = b;
                    nl.push_back(std::move(next));
                    nc.push_back(coeffs[t] * binomial(mono[s], b));
                }
            lefts = std::move(nl);
            coeffs = std::move(nc);
        }
        for (std::size_t t = 0; t < lefts.size(); ++t) {
            Mono right(n_, 0);
            for (std::size_t s = 0; s < n_; ++s)
                right[s] = mono[s] - lefts[t][s];
            auto key = std::make_pair(std::move(lefts[t]), std::move(right));
            Rational add = c * Rational(coeffs[t]);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), add);
            else {
                it->second += add;
                if (it->second == 0)
                    acc.erase(it);
            }
        }
    }
    Tensor2 out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc)
        out.emplace_back(key.first, key.second, c);
    return out;
}

UEnv::D1Elem UEnv::reduce(const Elem& u) const
{
    D1Elem out;
    for (const auto& [mono, c] : u) {
        bool in_ideal = false;
        for (std::size_t s = k_; s < n_; ++s)
            if (mono[s] > 0) {
                in_ideal = true;
                break;
            }
        if (in_ideal)
            continue;
        add_term_d1(out, D1Mono(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(k_)), c);
    }
    return out;
}

UEnv::Elem UEnv::lift(const D1Elem& p) const
{
    Elem out;
    for (const auto& [mono, c] : p)
        out.emplace(lift_mono(mono), c);
    return out;
}

UEnv::D1Mono UEnv::reduce_mono(const Mono& mono) const
{
    for (std::size_t s = k_; s < n_; ++s)
        if (mono[s] != 0)
            throw std::invalid_argument("reduce_mono: monomial has subalgebra support");
    return D1Mono(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(k_));
}

UEnv::Mono UEnv::lift_mono(const D1Mono& p) const
{
    if (p.size() != k_)
        throw std::invalid_argument("lift_mono: wrong exponent count");
    Mono mono(n_, 0);
    std::copy(p.begin(), p.end(), mono.begin());
    return mono;
}

const UEnv::D1Elem& UEnv::act_d1_basis(std::size_t h_index, const D1Mono& p) const
{
    if (h_index >= m_)
        throw std::invalid_argument("act_d1_basis: index not in subalgebra");
    const auto key = std::make_pair(h_index, p);
    auto hit = act_memo_.find(key);
    if (hit != act_memo_.end())
        return hit->second;
    Elem x = generator_elem(k_ + h_index);
    Elem lifted = lift(D1Elem{{p, Rational(1)}});
    D1Elem result = reduce(multiply(x, lifted));
    return act_memo_.emplace(key, std::move(result)).first->second;
}

UEnv::D1Elem UEnv::act_d1(const Vec& X, const D1Elem& p) const
{
    if (X.size() != m_)
        throw std::invalid_argument("act_d1: X must have subalgebra coordinates");
    D1Elem out;
    for (std::size_t i = 0; i < m_; ++i) {
        if (X[i] == 0)
            continue;
        for (const auto& [mono, c] : p)
            for (const auto& [rm, rc] : act_d1_basis(i, mono))
                add_term_d1(out, rm, X[i] * c * rc);
    }
    return out;
}

const UEnv::D1Tensor2& UEnv::coproduct_d1_mono(const D1Mono& p) const
{
    auto hit = coproduct_memo_.find(p);
    if (hit != coproduct_memo_.end())
        return hit->second;
    // Binomial splitting of the complement exponents; this is exactly
    // "coproduct of the canonical lift, reduced on both legs" because
    // subwords of a complement word stay in the complement.
    D1Tensor2 out;
    std::vector<D1Mono> lefts{D1Mono(k_, 0)};
    std::vector<Integer> coeffs{Integer(1)};
    for (std::size_t s = 0; s < k_; ++s) {
        if (p[s] == 0)
            continue;
        std::vector<D1Mono> nl;
        std::vector<Integer> nc;
        for (std::size_t t = 0; t < lefts.size(); ++t)
            for (int b = 0; b <= p[s]; ++b) {
                D1Mono next = lefts[t];
                next[s] = b;
                nl.push_back(std::move(next));
                nc.push_back(coeffs[t] * binomial(p[s], b));
            }
        lefts = std::move(nl);
        coeffs = std::move(nc);
    }
    for (std::size_t t = 0; t < lefts.size(); ++t) {
        D1Mono right(k_, 0);
        for (std::size_t s = 0; s < k_; ++s)
            right[s] = p[s] - lefts[t][s];
        out.emplace_back(std::move(lefts[t]), std::move(right), Rational(coeffs[t]));
    }
    return coproduct_memo_.emplace(p, std::move(out)).first->second;
}

UEnv::D1Tensor2 UEnv::coproduct_d1(const D1Elem& p) const
{
    std::map<std::pair<D1Mono, D1Mono>, Rational> acc;
    for (const auto& [mono, c] : p)
        for (const auto& [a, b, t] : coproduct_d1_mono(mono)) {
            auto key = std::make_pair(a, b);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), c * t);
            else {
                it->second += c * t;
                if (it->second == 0)
                    acc.erase(it);
            }
        }
    D1Tensor2 out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc)
        out.emplace_back(key.first, key.second, c);
    return out;
}

Rational UEnv::counit_d1(const D1Elem& p) const
{
    auto it = p.find(D1Mono(k_, 0));
    return it == p.end() ? Rational(0) : it->second;
}

namespace {

void enumerate_weight(std::size_t k, std::size_t pos, int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out)
{
    if (pos + 1 == k) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate_weight(k, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<UEnv::D1Mono> UEnv::d1_basis_up_to_weight(int w) const
{
    std::vector<D1Mono> out;
    if (k_ == 0)
        throw std::invalid_argument("d1_basis_up_to_weight: complement is zero-dimensional");
    std::vector<int> cur(k_, 0);
    for (int t = 0; t <= w; ++t)
        enumerate_weight(k_, 0, t, cur, out);
    return out;
}

bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    const int wa = std::accumulate(a.begin(), a.end(), 0);
    const int wb = std::accumulate(b.begin(), b.end(), 0);
    if (wa != wb)
        return wa < wb;
    return b < a; // exponents descending inside a weight
}

std::string UEnv::print_terms(const std::vector<std::pair<Mono, Rational>>& terms) const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t s = 0; s < n_; ++s) {
            if (mono[s] == 0)
                continue;
            std::string f = pair_->basis_names()[original_of_storage(s)];
            if (mono[s] > 1)
                f += "^" + std::to_string(mono[s]);
            factors.push_back(f);
        }
        const bool is_unit_mono = factors.empty();
        if (mag != 1 || is_unit_mono) {
            os << rational_to_string(mag);
            if (!is_unit_mono)
                os << "\xc2\xb7"; // middle dot
        }
        for (std::size_t t = 0; t < factors.size(); ++t) {
            if (t)
                os << "\xc2\xb7";
            os << factors[t];
        }
    }
    return os.str();
}

std::string UEnv::print(const Elem& u) const
{
    std::vector<std::pair<Mono, Rational>> terms(u.begin(), u.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(b.first, a.first); });
    return print_terms(terms);
}

std::string UEnv::print_d1(const D1Elem& p) const
{
    Elem lifted;
    for (const auto& [mono, c] : p)
        lifted.emplace(lift_mono(mono), c);
    return print(lifted);
}

std::string UEnv::print_mono_d1(const D1Mono& p) const
{
    return print_d1(D1Elem{{p, Rational(1)}});
}

} // namespace dpoly
