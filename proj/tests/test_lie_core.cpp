#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "dpoly/lie_pair.hpp"

using namespace dpoly;
using namespace dpoly::testing;

TEST_CASE("corpus pairs validate")
{
    for (const auto& name : corpus_names()) {
        auto result = load_lie_pair_file(pair_path(name));
        CHECK_MESSAGE(result.ok(), name);
    }
}

TEST_CASE("jacobi-broken mutant is rejected naming the triple")
{
    auto result = load_lie_pair_file(pair_path("jacobi_broken"));
    REQUIRE(!result.ok());
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == Violation::Kind::Jacobi);
    CHECK(result.violations[0].indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("antisymmetry and closure violations are reported")
{
    // c[0][1] = e1 but c[1][0] = 0: antisymmetry broken
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, Vec(2, Rational(0))));
    c[0][1][0] = 1;
    auto result = LiePair::validate(2, 1, c);
    REQUIRE(!result.ok());
    CHECK(result.violations[0].kind == Violation::Kind::Antisymmetry);

    // [x1,x1] = 0, [x1,x2] = x2 with h = span{x1,x2}... closure violation needs
    // a bracket of subalgebra elements leaking outside; use dim 3, h = first 2.
    std::vector<std::vector<Vec>> c3(3, std::vector<Vec>(3, Vec(3, Rational(0))));
    c3[0][1][2] = 1; // [x1,x2] = x3, leaks
    c3[1][0][2] = -1;
    auto res3 = LiePair::validate(3, 2, c3);
    REQUIRE(!res3.ok());
    bool saw_closure = false;
    for (const auto& v : res3.violations)
        if (v.kind == Violation::Kind::SubalgebraClosure)
            saw_closure = true;
    CHECK(saw_closure);
}

TEST_CASE("sl2 bracket values")
{
    LiePair pair = load_pair("sl2_borel");
    // basis order (h, e, f)
    Vec h{Rational(1), Rational(0), Rational(0)};
    Vec e{Rational(0), Rational(1), Rational(0)};
    Vec f{Rational(0), Rational(0), Rational(1)};

    CHECK(pair.bracket(e, f) == h);
    Vec minus2f{Rational(0), Rational(0), Rational(-2)};
    CHECK(pair.bracket(h, f) == minus2f);
    CHECK(pair.bracket(e, e) == Vec(3, Rational(0)));
}

TEST_CASE("quotient action on sl2/Borel")
{
    LiePair pair = load_pair("sl2_borel");
    Vec h{Rational(1), Rational(0), Rational(0)};
    Vec e{Rational(0), Rational(1), Rational(0)};
    Vec fbar{Rational(1)};

    CHECK(pair.quotient_action(h, fbar) == Vec{Rational(-2)});
    CHECK(pair.quotient_action(e, fbar) == Vec{Rational(0)});

    Vec f{Rational(0), Rational(0), Rational(1)};
    CHECK_THROWS_AS((void)pair.quotient_action(f, fbar), std::invalid_argument);
}

TEST_CASE("quotient action is flat for every corpus pair")
{
    for (const auto& name : corpus_names()) {
        LiePair pair = load_pair(name);
        const std::size_t m = pair.dim_h();
        const std::size_t k = pair.dim_quotient();
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                DenseMatrix ax = pair.quotient_action_matrix(x);
                DenseMatrix ay = pair.quotient_action_matrix(y);
                DenseMatrix lhs = ax * ay - ay * ax;
                DenseMatrix rhs(k, k);
                for (std::size_t z = 0; z < m; ++z)
                    if (pair.c(x, y, z) != 0)
                        rhs = rhs + pair.quotient_action_matrix(z) * pair.c(x, y, z);
                CHECK_MESSAGE(lhs == rhs, name);
            }
    }
}

TEST_CASE("validation is idempotent")
{
    for (const auto& name : corpus_names()) {
        LiePair pair = load_pair(name);
        std::vector<std::vector<Vec>> table(pair.dim_g(), std::vector<Vec>(pair.dim_g(), Vec(pair.dim_g())));
        for (std::size_t i = 0; i < pair.dim_g(); ++i)
            for (std::size_t j = 0; j < pair.dim_g(); ++j)
                for (std::size_t l = 0; l < pair.dim_g(); ++l)
                    table[i][j][l] = pair.c(i, j, l);
        auto again = LiePair::validate(pair.dim_g(), pair.dim_h(), table, pair.basis_names());
        REQUIRE(again.ok());
        for (std::size_t i = 0; i < pair.dim_g(); ++i)
            for (std::size_t j = 0; j < pair.dim_g(); ++j)
                for (std::size_t l = 0; l < pair.dim_g(); ++l)
                    CHECK(again.pair->c(i, j, l) == pair.c(i, j, l));
    }
}

TEST_CASE("pair file format errors are usage errors")
{
    CHECK_THROWS_AS((void)parse_lie_pair_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_lie_pair_json(R"({"dim": 2})"), std::invalid_argument);
    // i >= j entries rejected
    CHECK_THROWS_AS((void)parse_lie_pair_json(R"({"dim": 2, "subalgebra_dim": 1,
        "brackets": [{"i": 1, "j": 0, "coeffs": ["0","0"]}]})"),
                    std::invalid_argument);
    // duplicate entry
    CHECK_THROWS_AS((void)parse_lie_pair_json(R"({"dim": 2, "subalgebra_dim": 1,
        "brackets": [{"i": 0, "j": 1, "coeffs": ["0","0"]},
                     {"i": 0, "j": 1, "coeffs": ["0","0"]}]})"),
                    std::invalid_argument);
    // malformed rational
    CHECK_THROWS_AS((void)parse_lie_pair_json(R"({"dim": 2, "subalgebra_dim": 1,
        "brackets": [{"i": 0, "j": 1, "coeffs": ["x","0"]}]})"),
                    std::invalid_argument);
}

TEST_CASE("rational wire format")
{
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(-4)) == "-4");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS((void)rational_from_string("1/0"), std::invalid_argument);
}
