#include "dpoly/dtensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dpoly {

void dt_add(DTensor& t, const TensorKey& key, const Rational& c)
{
    if (c == 0)
        return;
    auto it = t.terms.find(key);
    if (it == t.terms.end()) {
        t.terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        t.terms.erase(it);
}

DTensor dt_scale(const DTensor& t, const Rational& c)
{
    DTensor out{t.degree, t.leg_width, {}};
    if (c == 0)
        return out;
    for (const auto& [key, v] : t.terms)
        out.terms.emplace(key, v * c);
    return out;
}

DTensor dt_sum(const DTensor& a, const DTensor& b)
{
    if (a.degree != b.degree || a.leg_width != b.leg_width)
        throw std::invalid_argument("dt_sum: mixed degrees");
    DTensor out = a;
    for (const auto& [key, v] : b.terms)
        dt_add(out, key, v);
    return out;
}

bool dt_equal(const DTensor& a, const DTensor& b)
{
    return a.degree == b.degree && a.leg_width == b.leg_width && a.terms == b.terms;
}

int key_weight(const TensorKey& key)
{
    return std::accumulate(key.begin(), key.end(), 0);
}

int tensor_weight(const DTensor& t)
{
    int w = 0;
    for (const auto& [key, v] : t.terms)
        w = std::max(w, key_weight(key));
    return w;
}

DTensor unit_tensor(int leg_width, const Rational& r)
{
    DTensor out{0, leg_width, {}};
    if (r != 0)
        out.terms.emplace(TensorKey{}, r);
    return out;
}

DTensor d1_to_tensor(const UEnv& env, const UEnv::D1Elem& p)
{
    DTensor out{1, static_cast<int>(env.k()), {}};
    for (const auto& [mono, c] : p)
        out.terms.emplace(TensorKey(mono.begin(), mono.end()), c);
    return out;
}

DTensor mono_tensor(int leg_width, const TensorKey& key)
{
    if (leg_width <= 0 || key.size() % static_cast<std::size_t>(leg_width) != 0)
        throw std::invalid_argument("mono_tensor: key length not a multiple of leg width");
    DTensor out{static_cast<int>(key.size()) / leg_width, leg_width, {}};
    out.terms.emplace(key, Rational(1));
    return out;
}

DTensor cup(const DTensor& a, const DTensor& b)
{
    if (a.leg_width != b.leg_width)
        throw std::invalid_argument("cup: mixed leg widths");
    DTensor out{a.degree + b.degree, a.leg_width, {}};
    for (const auto& [ka, va] : a.terms)
        for (const auto& [kb, vb] : b.terms) {
            TensorKey key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            dt_add(out, key, va * vb);
        }
    return out;
}

DTensor differential(const UEnv& env, const DTensor& t)
{
    const int k = t.leg_width;
    const int n = t.degree;
    DTensor out{n + 1, k, {}};
    if (n == 0)
        return out; // the two outer insertions cancel on scalars

    for (const auto& [key, c] : t.terms) {
        TensorKey front(static_cast<std::size_t>(k), 0);
        front.insert(front.end(), key.begin(), key.end());
        dt_add(out, front, c);

        for (int i = 1; i <= n; ++i) {
            const auto leg_begin = key.begin() + static_cast<std::ptrdiff_t>((i - 1) * k);
            UEnv::D1Mono leg(leg_begin, leg_begin + k);
            const Rational sign = (i % 2 == 0) ? c : -c;
            for (const auto& [a, b, coeff] : env.coproduct_d1_mono(leg)) {
                TensorKey key2;
                key2.reserve(key.size() + static_cast<std::size_t>(k));
                key2.insert(key2.end(), key.begin(), leg_begin);
                key2.insert(key2.end(), a.begin(), a.end());
                key2.insert(key2.end(), b.begin(), b.end());
                key2.insert(key2.end(), leg_begin + k, key.end());
                dt_add(out, key2, sign * coeff);
            }
        }

        TensorKey back = key;
        back.insert(back.end(), static_cast<std::size_t>(k), 0);
        dt_add(out, back, (n + 1) % 2 == 0 ? c : -c);
    }
    return out;
}

namespace {

// Parity of the permutation that lists the positions in `mask` in
// increasing order followed by the rest: one inversion per (s in S,
// t not in S, t < s).
int unshuffle_sign(unsigned mask, int n)
{
    int inv = 0;
    for (int s = 0; s < n; ++s) {
        if (!(mask & (1u << s)))
            continue;
        for (int u = 0; u < s; ++u)
            if (!(mask & (1u << u)))
                ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

TensorSplitSum shuffle_coproduct(const DTensor& t)
{
    const int k = t.leg_width;
    const int n = t.degree;
    TensorSplitSum out;
    for (const auto& [key, c] : t.terms) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            TensorKey left, right;
            for (int s = 0; s < n; ++s) {
                const auto leg_begin = key.begin() + static_cast<std::ptrdiff_t>(s * k);
                auto& dst = (mask & (1u << s)) ? left : right;
                dst.insert(dst.end(), leg_begin, leg_begin + k);
            }
            const int sign = unshuffle_sign(mask, n);
            const Rational add = sign > 0 ? c : -c;
            auto keypair = std::make_pair(std::move(left), std::move(right));
            auto it = out.find(keypair);
            if (it == out.end())
                out.emplace(std::move(keypair), add);
            else {
                it->second += add;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

DTensor antipode(const DTensor& t, AntipodeConvention conv)
{
    const int k = t.leg_width;
    const int n = t.degree;
    int exponent = (n * (n - 1)) / 2;
    if (conv == AntipodeConvention::Standard)
        exponent += n;
    const bool negate = exponent % 2 != 0;

    DTensor out{n, k, {}};
    for (const auto& [key, c] : t.terms) {
        TensorKey rev;
        rev.reserve(key.size());
        for (int s = n; s-- > 0;) {
            const auto leg_begin = key.begin() + static_cast<std::ptrdiff_t>(s * k);
            rev.insert(rev.end(), leg_begin, leg_begin + k);
        }
        dt_add(out, rev, negate ? Rational(-c) : c);
    }
    return out;
}

Rational counit(const DTensor& t)
{
    const TensorKey zero(static_cast<std::size_t>(t.degree * t.leg_width), 0);
    auto it = t.terms.find(zero);
    return it == t.terms.end() ? Rational(0) : it->second;
}

Rational counit_chain(const DTensor& t)
{
    if (t.degree != 0)
        return Rational(0);
    return counit(t);
}

DTensor act_tensor(const UEnv& env, const Vec& X, const DTensor& t)
{
    const int k = t.leg_width;
    const int n = t.degree;
    DTensor out{n, k, {}};
    if (n == 0)
        return out; // zero anchor: no action on scalars
    for (const auto& [key, c] : t.terms)
        for (int i = 0; i < n; ++i) {
            const auto leg_begin = key.begin() + static_cast<std::ptrdiff_t>(i * k);
            UEnv::D1Mono leg(leg_begin, leg_begin + k);
            UEnv::D1Elem acted = env.act_d1(X, UEnv::D1Elem{{leg, Rational(1)}});
            for (const auto& [mono, coeff] : acted) {
                TensorKey key2;
                key2.reserve(key.size());
                key2.insert(key2.end(), key.begin(), leg_begin);
                key2.insert(key2.end(), mono.begin(), mono.end());
                key2.insert(key2.end(), leg_begin + k, key.end());
                dt_add(out, key2, c * coeff);
            }
        }
    return out;
}

std::vector<TensorKey> truncated_basis(const UEnv& env, const TruncationSpec& spec, int n)
{
    if (spec.max_weight < 1 || spec.max_degree < 1)
        throw std::invalid_argument("truncated_basis: weight and degree bounds must be >= 1");
    if (n < 0 || n > spec.max_degree + 1)
        throw std::invalid_argument("truncated_basis: degree outside truncation");
    const auto legs = env.d1_basis_up_to_weight(spec.max_weight);
    std::vector<TensorKey> out;
    TensorKey cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (const auto& leg : legs) {
            cur.insert(cur.end(), leg.begin(), leg.end());
            self(self, remaining - 1);
            cur.resize(cur.size() - leg.size());
        }
    };
    rec(rec, n);
    return out;
}

std::string print_tensor(const UEnv& env, const DTensor& t)
{
    if (t.terms.empty())
        return "0";
    const int k = t.leg_width;
    std::vector<std::pair<TensorKey, Rational>> terms(t.terms.begin(), t.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (key_weight(a.first) != key_weight(b.first))
            return key_weight(a.first) > key_weight(b.first);
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (t.degree == 0) {
            os << rational_to_string(mag);
            continue;
        }
        if (mag != 1)
            os << rational_to_string(mag) << "\xc2\xb7";
        for (int i = 0; i < t.degree; ++i) {
            if (i)
                os << "\xe2\x8a\x97"; // tensor sign
            UEnv::D1Mono leg(key.begin() + static_cast<std::ptrdiff_t>(i * k),
                             key.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
            os << env.print_mono_d1(leg);
        }
    }
    return os.str();
}

} // namespace dpoly
