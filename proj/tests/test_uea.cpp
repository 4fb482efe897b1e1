#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "dpoly/uea.hpp"

using namespace dpoly;
using namespace dpoly::testing;

namespace {

// storage positions for sl2/Borel: 0 = f (complement), 1 = h, 2 = e
constexpr std::size_t F = 0, H = 1, E = 2;

UEnv::Elem elem(const UEnv& env, std::initializer_list<std::pair<std::vector<std::size_t>, Rational>> terms)
{
    UEnv::Elem out;
    for (const auto& [word, c] : terms)
        out[mono_from_word(env, word)] += c;
    return out;
}

} // namespace

TEST_CASE("pinned straightening steps on sl2")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);

    // e*f = f e + h
    CHECK(env.multiply(env.generator_elem(E), env.generator_elem(F)) ==
          elem(env, {{{F, E}, 1}, {{H}, 1}}));
    // f*f = f^2
    CHECK(env.multiply(env.generator_elem(F), env.generator_elem(F)) == elem(env, {{{F, F}, 1}}));
    // h*f = f h - 2 f
    CHECK(env.multiply(env.generator_elem(H), env.generator_elem(F)) ==
          elem(env, {{{F, H}, 1}, {{F}, -2}}));
    // e*f^2 = f^2 e + 2 f h - 2 f
    UEnv::Elem ff = env.multiply(env.generator_elem(F), env.generator_elem(F));
    CHECK(env.multiply(env.generator_elem(E), ff) ==
          elem(env, {{{F, F, E}, 1}, {{F, H}, 2}, {{F}, -2}}));
}

TEST_CASE("straightening agrees with the word-rewriting oracle")
{
    for (const auto& name : corpus_names()) {
        LiePair pair = load_pair(name);
        UEnv env(pair);
        WordOracle oracle(env);

        // all words of length <= 3 over the storage alphabet, multiplied in
        // both engines
        std::vector<std::vector<std::size_t>> words{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& w : words)
                if (w.size() == static_cast<std::size_t>(len) - 1)
                    for (std::size_t s = 0; s < env.n(); ++s) {
                        auto w2 = w;
                        w2.push_back(s);
                        next.push_back(w2);
                    }
            for (const auto& w : next)
                words.push_back(w);
        }
        for (const auto& w : words) {
            if (w.size() < 2)
                continue;
            // split the word in half and multiply the normal monomials
            std::vector<std::size_t> a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2));
            std::vector<std::size_t> b(w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.end());
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            UEnv::Elem lhs = env.multiply(UEnv::Elem{{mono_from_word(env, a), 1}},
                                          UEnv::Elem{{mono_from_word(env, b), 1}});
            UEnv::Elem rhs = oracle.multiply_words(a, b);
            CHECK_MESSAGE(lhs == rhs, name);
        }
    }
}

TEST_CASE("PBW associativity on basis monomials of weight <= 3")
{
    for (const auto& name : std::vector<std::string>{"sl2_borel", "heisenberg_center"}) {
        LiePair pair = load_pair(name);
        UEnv env(pair);

        // basis monomials of weight <= 3 as exponent vectors over n gens
        std::vector<UEnv::Mono> basis;
        std::vector<int> cur(env.n(), 0);
        auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
            if (pos == env.n()) {
                basis.push_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[pos] = e;
                self(self, pos + 1, left - e);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, 3);

        // exhaustive pairwise + sampled triple associativity is quadratic;
        // keep the triple loop on weight <= 2 monomials
        std::vector<UEnv::Mono> small;
        for (const auto& m : basis)
            if (UEnv::weight(m) <= 2)
                small.push_back(m);
        for (const auto& a : small)
            for (const auto& b : small)
                for (const auto& c : small) {
                    UEnv::Elem ea{{a, 1}}, eb{{b, 1}}, ec{{c, 1}};
                    CHECK(env.multiply(env.multiply(ea, eb), ec) ==
                          env.multiply(ea, env.multiply(eb, ec)));
                }
    }
}

TEST_CASE("coproduct is an algebra morphism and cocommutative")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);

    std::vector<UEnv::Elem> gens{env.generator_elem(F), env.generator_elem(H), env.generator_elem(E),
                                 env.multiply(env.generator_elem(F), env.generator_elem(F)),
                                 env.multiply(env.generator_elem(E), env.generator_elem(F))};
    auto tensor_mul = [&](const UEnv::Tensor2& a, const UEnv::Tensor2& b) {
        std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational> acc;
        for (const auto& [a1, a2, ca] : a)
            for (const auto& [b1, b2, cb] : b) {
                UEnv::Elem left = env.multiply(UEnv::Elem{{a1, 1}}, UEnv::Elem{{b1, 1}});
                UEnv::Elem right = env.multiply(UEnv::Elem{{a2, 1}}, UEnv::Elem{{b2, 1}});
                for (const auto& [lm, lc] : left)
                    for (const auto& [rm, rc] : right) {
                        acc[{lm, rm}] += ca * cb * lc * rc;
                        if (acc[{lm, rm}] == 0)
                            acc.erase({lm, rm});
                    }
            }
        return acc;
    };
    auto as_map = [](const UEnv::Tensor2& t) {
        std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational> acc;
        for (const auto& [a, b, c] : t)
            acc[{a, b}] += c;
        return acc;
    };

    for (const auto& u : gens)
        for (const auto& v : gens) {
            auto lhs = as_map(env.coproduct(env.multiply(u, v)));
            auto rhs = tensor_mul(env.coproduct(u), env.coproduct(v));
            CHECK(lhs == rhs);
        }

    // cocommutativity: swapping legs fixes the coproduct
    for (const auto& u : gens) {
        auto direct = as_map(env.coproduct(u));
        std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational> swapped;
        for (const auto& [key, c] : direct)
            swapped[{key.second, key.first}] += c;
        CHECK(direct == swapped);
    }
}

TEST_CASE("pinned coproduct values")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);

    auto as_map = [](const UEnv::Tensor2& t) {
        std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational> acc;
        for (const auto& [a, b, c] : t)
            acc[{a, b}] += c;
        return acc;
    };
    const UEnv::Mono one = env.one();
    const UEnv::Mono f = env.generator(F);
    const UEnv::Mono f2 = mono_from_word(env, {F, F});
    const UEnv::Mono fe = mono_from_word(env, {F, E});
    const UEnv::Mono e = env.generator(E);

    auto df = as_map(env.coproduct(UEnv::Elem{{f, 1}}));
    CHECK(df == std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational>{{{f, one}, 1}, {{one, f}, 1}});

    auto df2 = as_map(env.coproduct(UEnv::Elem{{f2, 1}}));
    CHECK(df2 == std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational>{
                     {{f2, one}, 1}, {{f, f}, 2}, {{one, f2}, 1}});

    auto dfe = as_map(env.coproduct(UEnv::Elem{{fe, 1}}));
    CHECK(dfe == std::map<std::pair<UEnv::Mono, UEnv::Mono>, Rational>{
                     {{fe, one}, 1}, {{f, e}, 1}, {{e, f}, 1}, {{one, fe}, 1}});
}

TEST_CASE("reduce and the quotient basis")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);

    // reduce(f h) = 0, reduce(f) = fbar, reduce(h f) = -2 fbar
    CHECK(env.reduce(UEnv::Elem{{mono_from_word(env, {F, H}), 1}}).empty());
    UEnv::D1Mono fbar{1};
    CHECK(env.reduce(env.generator_elem(F)) == UEnv::D1Elem{{fbar, 1}});
    CHECK(env.reduce(env.multiply(env.generator_elem(H), env.generator_elem(F))) ==
          UEnv::D1Elem{{fbar, -2}});

    // graded-lex basis enumeration: 1, f, f^2 for k = 1, w = 2
    auto basis = env.d1_basis_up_to_weight(2);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == UEnv::D1Mono{0});
    CHECK(basis[1] == UEnv::D1Mono{1});
    CHECK(basis[2] == UEnv::D1Mono{2});

    LiePair heis = load_pair("heisenberg_center");
    UEnv env2(heis);
    auto basis2 = env2.d1_basis_up_to_weight(2);
    REQUIRE(basis2.size() == 6); // C(2+2, 2)
    CHECK(basis2[0] == UEnv::D1Mono{0, 0});
    CHECK(basis2[1] == UEnv::D1Mono{1, 0});
    CHECK(basis2[2] == UEnv::D1Mono{0, 1});
    CHECK(basis2[3] == UEnv::D1Mono{2, 0});
}

TEST_CASE("h-action on the quotient coalgebra with oracle cross-check")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);
    WordOracle oracle(env);

    Vec h{Rational(1), Rational(0)};
    Vec e{Rational(0), Rational(1)};
    UEnv::D1Mono fbar{1}, f2bar{2};

    CHECK(env.act_d1(h, UEnv::D1Elem{{fbar, 1}}) == UEnv::D1Elem{{fbar, -2}});
    CHECK(env.act_d1(h, UEnv::D1Elem{{f2bar, 1}}) == UEnv::D1Elem{{f2bar, -4}});
    CHECK(env.act_d1(e, UEnv::D1Elem{{f2bar, 1}}) == UEnv::D1Elem{{fbar, -2}});

    // oracle route: straighten the word and reduce
    UEnv::Elem hf2 = oracle.multiply_words({H}, {F, F});
    CHECK(env.reduce(hf2) == UEnv::D1Elem{{f2bar, -4}});
    UEnv::Elem ef2 = oracle.multiply_words({E}, {F, F});
    CHECK(env.reduce(ef2) == UEnv::D1Elem{{fbar, -2}});
}

TEST_CASE("action flatness and coproduct compatibility up to weight 4")
{
    for (const auto& name : corpus_names()) {
        LiePair pair = load_pair(name);
        UEnv env(pair);
        const std::size_t m = pair.dim_h();
        auto basis = env.d1_basis_up_to_weight(4);

        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                Vec X(m, Rational(0)), Y(m, Rational(0));
                X[x] = 1;
                Y[y] = 1;
                Vec XY(m, Rational(0));
                for (std::size_t z = 0; z < m; ++z)
                    XY[z] = pair.c(x, y, z);
                for (const auto& p : basis) {
                    UEnv::D1Elem pe{{p, 1}};
                    auto lhs = env.act_d1(X, env.act_d1(Y, pe));
                    for (const auto& [mono, c] : env.act_d1(Y, env.act_d1(X, pe))) {
                        lhs[mono] -= c;
                        if (lhs[mono] == 0)
                            lhs.erase(mono);
                    }
                    CHECK(lhs == env.act_d1(XY, pe));
                }
            }

        // nabla_X(Delta p) = Delta(nabla_X p), the legwise action on the left
        for (std::size_t x = 0; x < m; ++x) {
            Vec X(m, Rational(0));
            X[x] = 1;
            for (const auto& p : basis) {
                UEnv::D1Elem pe{{p, 1}};
                std::map<std::pair<UEnv::D1Mono, UEnv::D1Mono>, Rational> lhs, rhs;
                for (const auto& [a, b, c] : env.coproduct_d1(pe)) {
                    for (const auto& [am, ac] : env.act_d1(X, UEnv::D1Elem{{a, 1}})) {
                        lhs[{am, b}] += c * ac;
                        if (lhs[{am, b}] == 0)
                            lhs.erase({am, b});
                    }
                    for (const auto& [bm, bc] : env.act_d1(X, UEnv::D1Elem{{b, 1}})) {
                        lhs[{a, bm}] += c * bc;
                        if (lhs[{a, bm}] == 0)
                            lhs.erase({a, bm});
                    }
                }
                for (const auto& [a, b, c] : env.coproduct_d1(env.act_d1(X, pe)))
                    rhs[{a, b}] += c;
                CHECK_MESSAGE(lhs == rhs, name);

                // filtration: the action never raises weight
                CHECK(UEnv::weight_d1(env.act_d1(X, pe)) <= UEnv::weight(p));
            }
        }
    }
}

TEST_CASE("coproduct on the quotient: binomial route equals lift-then-reduce route")
{
    for (const auto& name : corpus_names()) {
        LiePair pair = load_pair(name);
        UEnv env(pair);
        for (const auto& p : env.d1_basis_up_to_weight(4)) {
            std::map<std::pair<UEnv::D1Mono, UEnv::D1Mono>, Rational> direct, routed;
            for (const auto& [a, b, c] : env.coproduct_d1_mono(p))
                direct[{a, b}] += c;
            for (const auto& [a, b, c] : env.coproduct(env.lift(UEnv::D1Elem{{p, 1}}))) {
                UEnv::D1Elem ra = env.reduce(UEnv::Elem{{a, 1}});
                UEnv::D1Elem rb = env.reduce(UEnv::Elem{{b, 1}});
                for (const auto& [am, ac] : ra)
                    for (const auto& [bm, bc] : rb) {
                        routed[{am, bm}] += c * ac * bc;
                        if (routed[{am, bm}] == 0)
                            routed.erase({am, bm});
                    }
            }
            CHECK_MESSAGE(direct == routed, name);
        }
    }
}

TEST_CASE("coassociativity and cocommutativity of the quotient coproduct up to weight 4")
{
    LiePair pair = load_pair("heisenberg_center");
    UEnv env(pair);
    using Pair = std::pair<UEnv::D1Mono, UEnv::D1Mono>;
    using Triple = std::tuple<UEnv::D1Mono, UEnv::D1Mono, UEnv::D1Mono>;
    for (const auto& p : env.d1_basis_up_to_weight(4)) {
        UEnv::D1Elem pe{{p, 1}};

        std::map<Pair, Rational> direct;
        for (const auto& [a, b, c] : env.coproduct_d1(pe))
            direct[{a, b}] += c;
        std::map<Pair, Rational> swapped;
        for (const auto& [key, c] : direct)
            swapped[{key.second, key.first}] += c;
        CHECK(direct == swapped);

        std::map<Triple, Rational> left, right;
        for (const auto& [a, b, c] : env.coproduct_d1(pe)) {
            for (const auto& [a1, a2, c2] : env.coproduct_d1(UEnv::D1Elem{{a, 1}}))
                left[{a1, a2, b}] += c * c2;
            for (const auto& [b1, b2, c2] : env.coproduct_d1(UEnv::D1Elem{{b, 1}}))
                right[{a, b1, b2}] += c * c2;
        }
        CHECK(left == right);

        // counit and weight bookkeeping
        CHECK(env.counit_d1(pe) == (UEnv::weight(p) == 0 ? 1 : 0));
        for (const auto& [a, b, c] : env.coproduct_d1(pe)) {
            CHECK(UEnv::weight(a) <= UEnv::weight(p));
            CHECK(UEnv::weight(b) <= UEnv::weight(p));
        }
    }
}

TEST_CASE("printing follows graded-lex with basis names")
{
    LiePair pair = load_pair("sl2_borel");
    UEnv env(pair);
    UEnv::Elem u;
    u[mono_from_word(env, {F, F, H})] = Rational(3, 2);
    u[mono_from_word(env, {F})] = 1;
    CHECK(env.print(u) == "3/2\xc2\xb7"
                          "f^2\xc2\xb7h + f");
    CHECK(env.print(UEnv::Elem{}) == "0");
    CHECK(env.print_d1(UEnv::D1Elem{{UEnv::D1Mono{0}, 3}}) == "3");

    UEnv::D1Elem p;
    p[UEnv::D1Mono{2}] = 1;
    p[UEnv::D1Mono{1}] = -1;
    CHECK(env.print_d1(p) == "f^2 - f");

    CHECK(env.counit_d1(UEnv::D1Elem{{UEnv::D1Mono{0}, 3}, {UEnv::D1Mono{1}, 5}}) == 3);
}
