#include "qlp/lp.hpp"
#include "support/generators.hpp"
#include "support/lp_oracle.hpp"

#include <doctest.h>

using namespace qlp;
using qlp::testing::Gen;
using qlp::testing::MinimalFaceOracle;

namespace {

LinearProgram make_lp(std::size_t vars, std::initializer_list<LinearRow> rows, std::initializer_list<std::size_t> nonneg)
{
    LinearProgram lp;
    lp.num_vars = vars;
    for (const auto& r : rows)
        lp.add_row(r.coeffs, r.relation, r.rhs);
    for (auto j : nonneg)
        lp.mark_nonneg(j);
    return lp;
}

} // namespace

TEST_CASE("solve_feasibility examples")
{
    SUBCASE("x >= 0, x = 1")
    {
        auto lp = make_lp(1, {{{1}, Relation::eq, 1}}, {0});
        auto cert = solve_feasibility(lp);
        REQUIRE(cert.feasible());
        CHECK(cert.values == std::vector<Rational>{1});
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("x >= 0, -x >= 1")
    {
        auto lp = make_lp(1, {{{-1}, Relation::ge, 1}}, {0});
        auto cert = solve_feasibility(lp);
        REQUIRE_FALSE(cert.feasible());
        CHECK(cert.values == std::vector<Rational>{1, 1});
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("x + y = 1, x - y = 3 forces y = -1")
    {
        auto lp = make_lp(2, {{{1, 1}, Relation::eq, 1}, {{1, -1}, Relation::eq, 3}}, {0, 1});
        auto cert = solve_feasibility(lp);
        CHECK_FALSE(cert.feasible());
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("free variables with an inconsistent equation pair")
    {
        auto lp = make_lp(2, {{{1, 1}, Relation::eq, 1}, {{2, 2}, Relation::eq, 3}}, {});
        auto cert = solve_feasibility(lp);
        CHECK_FALSE(cert.feasible());
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("free variable absent from all rows")
    {
        auto lp = make_lp(3, {{{1, 0, 1}, Relation::ge, 2}}, {0});
        auto cert = solve_feasibility(lp);
        REQUIRE(cert.feasible());
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("no rows")
    {
        auto lp = make_lp(2, {}, {0});
        CHECK(solve_feasibility(lp).feasible());
    }
}

TEST_CASE("verify_certificate rejects bad certificates")
{
    auto lp = make_lp(2, {{{1, 1}, Relation::eq, 1}, {{1, 0}, Relation::ge, Rational(1, 2)}}, {0, 1});
    Certificate good{Certificate::Kind::feasible, {Rational(1, 2), Rational(1, 2)}};
    CHECK(verify_certificate(lp, good));
    Certificate off{Certificate::Kind::feasible, {Rational(1, 2) - Rational(1, 1000000), Rational(1, 2)}};
    CHECK_FALSE(verify_certificate(lp, off));
    Certificate negative{Certificate::Kind::feasible, {Rational(3, 2), Rational(-1, 2)}};
    CHECK_FALSE(verify_certificate(lp, negative));
    CHECK_THROWS_AS(verify_certificate(lp, Certificate{Certificate::Kind::feasible, {1}}), std::invalid_argument);

    // -x >= 1 with x >= 0: (1, 1) is valid; a negative GE multiplier is not.
    auto bad = make_lp(1, {{{-1}, Relation::ge, 1}}, {0});
    CHECK(verify_certificate(bad, {Certificate::Kind::infeasible, {1, 1}}));
    CHECK_FALSE(verify_certificate(bad, {Certificate::Kind::infeasible, {-1, -1}}));
    CHECK_FALSE(verify_certificate(bad, {Certificate::Kind::infeasible, {1, 0}}));
    CHECK_FALSE(verify_certificate(bad, {Certificate::Kind::infeasible, {0, 0}}));
    CHECK_THROWS_AS(verify_certificate(bad, {Certificate::Kind::infeasible, {1}}), std::invalid_argument);
}

TEST_CASE("degenerate systems terminate")
{
    SUBCASE("many copies of one tight row")
    {
        LinearProgram lp;
        lp.num_vars = 4;
        for (int r = 0; r < 12; ++r)
            lp.add_row({1, -1, 1, -1}, Relation::ge, 0);
        lp.add_row({1, 1, 1, 1}, Relation::eq, 0);
        for (std::size_t j = 0; j < 4; ++j)
            lp.mark_nonneg(j);
        auto cert = solve_feasibility(lp);
        REQUIRE(cert.feasible());
        CHECK(verify_certificate(lp, cert));
    }
    SUBCASE("Beale-style data with all right-hand sides zero")
    {
        LinearProgram lp;
        lp.num_vars = 4;
        lp.add_row({Rational(-1, 4), 60, Rational(1, 25), -9}, Relation::ge, 0);
        lp.add_row({Rational(-1, 2), 90, Rational(1, 50), -3}, Relation::ge, 0);
        lp.add_row({0, 0, -1, 0}, Relation::ge, -1);
        lp.add_row({Rational(3, 4), -150, Rational(1, 2), -6}, Relation::ge, Rational(1, 20));
        for (std::size_t j = 0; j < 4; ++j)
            lp.mark_nonneg(j);
        auto cert = solve_feasibility(lp);
        CHECK(verify_certificate(lp, cert));
        CHECK(cert.feasible() == MinimalFaceOracle(lp).solve().has_value());
    }
}

TEST_CASE("solver is deterministic")
{
    Gen g(31);
    for (int t = 0; t < 20; ++t) {
        auto lp = g.small_lp();
        auto a = solve_feasibility(lp), b = solve_feasibility(lp);
        CHECK(a.kind == b.kind);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("random systems agree with the minimal-face oracle")
{
    Gen g(32);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 300; ++t) {
        auto lp = g.small_lp();
        auto cert = solve_feasibility(lp);
        CHECK(verify_certificate(lp, cert));
        auto oracle = MinimalFaceOracle(lp).solve();
        CHECK(cert.feasible() == oracle.has_value());
        (cert.feasible() ? feasible : infeasible)++;
    }
    // both outcomes must be exercised
    CHECK(feasible > 30);
    CHECK(infeasible > 30);
}

TEST_CASE("canonical text and hash")
{
    auto lp = make_lp(2, {{{1, Rational(2, 4)}, Relation::ge, 3}}, {1});
    CHECK(lp.canonical_text() == "qlp-lp 1\nvars 2\nnonneg 1\nge 1 1/2 : 3\n");
    CHECK(lp.hash().size() == 64);
    auto other = lp;
    other.rows[0].rhs = 4;
    CHECK(other.hash() != lp.hash());
}
