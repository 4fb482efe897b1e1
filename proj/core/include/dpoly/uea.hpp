#pragma once

#include "dpoly/lie_pair.hpp"
#include "dpoly/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace dpoly {

// Enveloping-algebra context for one Lie pair.
//
// Generator order ("storage order"): complement generators first (original
// indices dim_h..dim_g-1 at positions 0..k-1), then subalgebra generators
// (original 0..dim_h-1 at positions k..k+m-1). A PBW monomial is the
// nondecreasing word in storage positions, kept as an exponent vector.
// With this order a normal monomial lies in the left ideal U(g)h exactly
// when some subalgebra exponent is nonzero, so the quotient projection is
// a coordinate restriction.
class UEnv {
public:
    using Mono = std::vector<int>;   // length n = dim_g, storage order
    using Elem = std::map<Mono, Rational>;
    using D1Mono = std::vector<int>; // length k, complement exponents only
    using D1Elem = std::map<D1Mono, Rational>;
    // Tensor-square summands (a, b, coeff); legs are normal monomials.
    using Tensor2 = std::vector<std::tuple<Mono, Mono, Rational>>;
    using D1Tensor2 = std::vector<std::tuple<D1Mono, D1Mono, Rational>>;

    explicit UEnv(const LiePair& pair);

    const LiePair& pair() const { return *pair_; }
    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t k() const { return k_; }

    std::size_t storage_of_original(std::size_t orig) const;
    std::size_t original_of_storage(std::size_t s) const;

    static int weight(const Mono& mono);
    static int weight_d1(const D1Elem& e);

    Mono one() const { return Mono(n_, 0); }
    Mono generator(std::size_t storage_pos) const;
    Elem generator_elem(std::size_t storage_pos) const;

    // Associative product in PBW normal form; straightening rewrites
    // xy = yx + [x,y] recursively with memoization on (monomial, generator).
    Elem multiply(const Elem& u, const Elem& v) const;

    // Coproduct with primitive generators, extended multiplicatively. On a
    // normal monomial every tensor term is a pair of complementary
    // subwords, which is the binomial formula on exponents.
    Tensor2 coproduct(const Elem& u) const;

    // Projection U(g) -> D1 = U(g)/U(g)h: drop monomials with subalgebra
    // exponents, keep the complement coordinates.
    D1Elem reduce(const Elem& u) const;
    // Canonical section of reduce (complement monomials re-read in U(g)).
    Elem lift(const D1Elem& p) const;
    D1Mono reduce_mono(const Mono& mono) const; // requires pure complement support
    Mono lift_mono(const D1Mono& p) const;

    // Flat action of h on D1: X . p = reduce(X * lift(p)). X is given in
    // h-coordinates (length dim_h).
    D1Elem act_d1(const Vec& X, const D1Elem& p) const;
    const D1Elem& act_d1_basis(std::size_t h_index, const D1Mono& p) const; // cached

    // Induced coproduct on D1; equals coproduct-of-lift reduced legwise,
    // and on the canonical basis it is binomial on exponents.
    D1Tensor2 coproduct_d1(const D1Elem& p) const;
    const D1Tensor2& coproduct_d1_mono(const D1Mono& p) const; // cached

    Rational counit_d1(const D1Elem& p) const;

    // Complement monomials of weight <= w in graded-lex order (weight
    // ascending, exponents lexicographically descending inside a weight);
    // size C(w + k, k).
    std::vector<D1Mono> d1_basis_up_to_weight(int w) const;

    std::string print(const Elem& u) const;
    std::string print_d1(const D1Elem& p) const;
    std::string print_mono_d1(const D1Mono& p) const;

private:
    Elem multiply_mono_gen(const Mono& mono, std::size_t gen) const;
    std::string print_terms(const std::vector<std::pair<Mono, Rational>>& terms) const;

    const LiePair* pair_;
    std::size_t n_, m_, k_;
    // Bracket table in storage coordinates: sc_[s][t] = [x_s, x_t].
    std::vector<std::vector<Vec>> sc_;

    mutable std::map<std::pair<Mono, std::size_t>, Elem> straighten_memo_;
    mutable std::map<std::pair<std::size_t, D1Mono>, D1Elem> act_memo_;
    mutable std::map<D1Mono, D1Tensor2> coproduct_memo_;
};

// Graded-lex order on exponent vectors: by total weight, then exponents
// lexicographically descending (earlier generators dominate).
bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b);

} // namespace dpoly
