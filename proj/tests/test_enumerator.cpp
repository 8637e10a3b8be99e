#include "qlp/enumerator.hpp"
#include "qlp/errors.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace qlp;
using qlp::testing::Gen;

namespace {

HomPoly poly(std::initializer_list<Rational> c) { return HomPoly(std::vector<Rational>(c)); }

// Full Hilbert space on n qubits: A = 4^n x^n, B = 2^n (x+3y)^n.
std::pair<HomPoly, HomPoly> full_space(unsigned n)
{
    HomPoly A = HomPoly::monomial(n, 0, pow(Rational(4), n));
    return {A, dual_transform(A)};
}

// The enumerator exactly as printed, with K(K - 2^n) in the second term.
HomPoly printed_random_enumerator(unsigned n, const Rational& K)
{
    const Rational two_n = pow(Rational(2), n), four_n = two_n * two_n;
    HomPoly x_n = HomPoly::monomial(n, 0);
    HomPoly spread = dual_transform(HomPoly::monomial(n, 0, two_n));
    return K * (four_n * K - two_n) / (four_n - 1) * x_n + K * (K - two_n) / (four_n - 1) * spread;
}

} // namespace

TEST_CASE("dual_transform examples")
{
    CHECK(dual_transform(poly({4, 0})) == poly({2, 6}));
    // [[4,2,2]] enumerator; values cross-checked with an independent
    // Fraction-based expansion.
    CHECK(dual_transform(poly({16, 0, 0, 0, 48})) == poly({4, 0, 72, 96, 84}));
    Gen g(21);
    for (int t = 0; t < 20; ++t) {
        HomPoly p = g.poly(static_cast<unsigned>(g.uniform(0, 10)));
        CHECK(dual_transform(dual_transform(p)) == p);
    }
}

TEST_CASE("shadow_transform examples")
{
    CHECK(shadow_transform(poly({4, 0})) == poly({2, 6}));
    CHECK(shadow_transform(poly({1, 0})) == poly({Rational(1, 2), Rational(3, 2)}));
    CHECK(shadow_transform(poly({0, 1})) == poly({Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("average_subcode examples")
{
    auto [a_hat, b_hat] = average_subcode(poly({4, 0}), poly({2, 6}), 2, 1);
    CHECK(a_hat == poly({1, 1}));
    CHECK(b_hat == poly({1, 1}));

    Gen g(22);
    HomPoly A = g.poly(5), B = g.poly(5);
    auto same = average_subcode(A, B, Rational(7, 2), Rational(7, 2));
    CHECK(same.first == A);
    CHECK(same.second == B);
    auto zero = average_subcode(A, B, 3, 0);
    CHECK(zero.first.is_zero());
    CHECK(zero.second.is_zero());

    CHECK_THROWS_AS(average_subcode(A, B, 1, 1), domain_error);
    CHECK_THROWS_AS(average_subcode(A, B, 3, 4), domain_error);
}

TEST_CASE("average_subcode_shadow examples")
{
    // Both routes give 2y: parity formula on S = 2x + 6y, and the shadow of
    // the averaged enumerator x + y.
    CHECK(average_subcode_shadow(poly({2, 6}), 2, 1) == poly({0, 2}));
    CHECK(shadow_transform(poly({1, 1})) == poly({0, 2}));

    Gen g(23);
    HomPoly S = g.poly(4);
    CHECK(average_subcode_shadow(S, 5, 5) == S);
    CHECK_THROWS_AS(average_subcode_shadow(S, 1, 1), domain_error);

    // Each coefficient multiplies only its own parity part.
    auto [even, odd] = parity_split(S);
    HomPoly s_hat = average_subcode_shadow(S, 5, 2);
    auto [hat_even, hat_odd] = parity_split(s_hat);
    CHECK(hat_even == Rational(1, 5) * even);
    CHECK(hat_odd == Rational(1, 10) * odd);
}

TEST_CASE("cd_from_ab and ab_from_cd")
{
    EnumeratorCD cd = cd_from_ab(poly({4, 0}), poly({2, 6}), 2);
    CHECK(cd.C == poly({1, 1}));
    CHECK(cd.D == poly({1, -3}));
    CHECK(dual_transform(cd.C) == cd.C);
    CHECK(dual_transform(cd.D) == -cd.D);

    auto [A, B] = ab_from_cd(cd, 2);
    CHECK(A == poly({4, 0}));
    CHECK(B == poly({2, 6}));

    Gen g(24);
    HomPoly P = g.poly(3);
    CHECK(cd_from_ab(P, P, 5).D.is_zero());
    CHECK_THROWS_AS(cd_from_ab(P, P, 1), domain_error);

    // C = D: B - A/K vanishes, B = K C.
    auto [a_eq, b_eq] = ab_from_cd({P, P}, 3);
    CHECK(a_eq == 9 * P);
    CHECK(b_eq == 3 * P);
    // K = 1: A = B = C, D ignored.
    auto [a_one, b_one] = ab_from_cd({P, g.poly(3)}, 1);
    CHECK(a_one == P);
    CHECK(b_one == P);
    CHECK_THROWS_AS(ab_from_cd({P, P}, 0), domain_error);

    for (int t = 0; t < 30; ++t) {
        const unsigned n = static_cast<unsigned>(g.uniform(1, 8));
        HomPoly a = g.poly(n), b = g.poly(n);
        Rational K = g.dimension_above_one();
        auto [a2, b2] = ab_from_cd(cd_from_ab(a, b, K), K);
        CHECK(a2 == a);
        CHECK(b2 == b);
    }
}

TEST_CASE("random_code_enumerator")
{
    CHECK(random_code_enumerator(1, 2) == poly({4, 0}));
    CHECK(random_code_enumerator(1, 1) == poly({1, 1}));

    HomPoly r = random_code_enumerator(2, 2);
    CHECK(r[0] == 4);
    CHECK(is_nonnegative(r));
    auto [full_a, full_b] = full_space(2);
    CHECK(r == average_subcode(full_a, full_b, 4, 2).first);

    CHECK_THROWS_AS(random_code_enumerator(2, 5), domain_error);
    CHECK_THROWS_AS(random_code_enumerator(2, 0), domain_error);

    // The printed form fails nonnegativity already at n = 1, K = 1.
    HomPoly printed = printed_random_enumerator(1, 1);
    CHECK(printed == poly({Rational(1, 3), -1}));
    CHECK_FALSE(is_nonnegative(printed));
}

TEST_CASE("parity_split")
{
    auto [e1, o1] = parity_split(poly({2, 6}));
    CHECK(e1 == poly({0, 6}));
    CHECK(o1 == poly({2, 0}));
    auto [e2, o2] = parity_split(poly({1, 1, 1}));
    CHECK(e2 == poly({1, 0, 1}));
    CHECK(o2 == poly({0, 1, 0}));

    Gen g(25);
    for (int t = 0; t < 20; ++t) {
        HomPoly p = g.poly(static_cast<unsigned>(g.uniform(0, 9)));
        auto [even, odd] = parity_split(p);
        CHECK(even + odd == p);
        CHECK(reflect_x(even) == even);
        CHECK(reflect_x(odd) == -odd);
        for (unsigned i = 0; i <= p.degree(); ++i)
            CHECK((even[i] == 0 || odd[i] == 0));
    }
}

TEST_CASE("check_membership")
{
    SUBCASE("[[4,2,2]] passes as a pure ((4,4,2))")
    {
        auto report = check_membership(poly({16, 0, 0, 0, 48}), {4, 4, 2, true});
        CHECK(report.passed());
        CHECK(report.enumerator.B - Rational(1, 4) * report.enumerator.A == poly({0, 0, 72, 96, 72}));
    }
    SUBCASE("full space")
    {
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(check_membership(full_space(n).first, {n, pow(Rational(2), n), 1, true}).passed());
    }
    SUBCASE("wrong K fails the leading coefficient only")
    {
        auto report = check_membership(poly({4, 0}), {1, 3, 1, true});
        CHECK_FALSE(report.passed());
        CHECK_FALSE(report.checks[0].passed);
        CHECK(report.checks[0].constraint == Constraint::leading);
        CHECK(*report.checks[0].first_violation == 0);
    }
    SUBCASE("first violating index is reported")
    {
        // ((4,4,3)) demands B - A/K to vanish through y^2, but it is 72 there.
        auto report = check_membership(poly({16, 0, 0, 0, 48}), {4, 4, 3, false});
        CHECK_FALSE(report.passed());
        const auto& low = report.checks[1];
        CHECK(low.constraint == Constraint::low_weight);
        CHECK(*low.first_violation == 2);
    }
    CHECK_THROWS_AS(check_membership(poly({1, 0}), {2, 1, 1, false}), std::invalid_argument);
}

TEST_CASE("subcode averaging fixes C and D")
{
    Gen g(26);
    for (int t = 0; t < 40; ++t) {
        const unsigned n = static_cast<unsigned>(g.uniform(1, 8));
        HomPoly A = g.poly(n), B = dual_transform(A);
        Rational K = g.dimension_above_one();
        Rational fraction(g.uniform(1, 20), 20);
        fraction.canonicalize();
        Rational Kp = K * fraction;
        if (Kp <= 1)
            Kp = K;
        auto [a_hat, b_hat] = average_subcode(A, B, K, Kp);
        EnumeratorCD before = cd_from_ab(A, B, K), after = cd_from_ab(a_hat, b_hat, Kp);
        CHECK(before.C == after.C);
        CHECK(before.D == after.D);
        CHECK(dual_transform(a_hat) == b_hat);
        CHECK(average_subcode_shadow(shadow_transform(A), K, Kp) == shadow_transform(a_hat));
    }
}

TEST_CASE("C and D shadows are parity-pure")
{
    // A MacWilliams-fixed C satisfies C(shadow(x,y)) = C(shadow(-x,y)), so its
    // shadow is even in x; a negated D gives an odd shadow. The two shadow
    // terms therefore never share a coefficient.
    const LinearMap2 shadow_reflected{Rational(-1, 2), Rational(3, 2), Rational(1, 2), Rational(1, 2)};
    Gen g(27);
    for (int t = 0; t < 20; ++t) {
        const unsigned n = static_cast<unsigned>(g.uniform(1, 9));
        HomPoly P = g.poly(n);
        HomPoly C = P + dual_transform(P);
        HomPoly D = P - dual_transform(P);
        CHECK(shadow_transform(C) == substitute_linear(C, shadow_reflected));
        CHECK(shadow_transform(D) == -substitute_linear(D, shadow_reflected));
        CHECK(reflect_x(shadow_transform(C)) == shadow_transform(C));
        CHECK(reflect_x(shadow_transform(D)) == -shadow_transform(D));
    }
}

TEST_CASE("averaging a valid enumerator stays valid")
{
    // Direct use of the explicit [[4,2,2]] and five-qubit enumerators.
    struct Case {
        HomPoly A;
        CodeParams params;
    } cases[] = {
        {poly({16, 0, 0, 0, 48}), {4, 4, 2, true}},
        {poly({4, 0, 0, 0, 60, 0}), {5, 2, 3, true}},
    };
    for (const auto& c : cases) {
        REQUIRE(check_membership(c.A, c.params).passed());
        for (Rational Kp = 1; Kp < c.params.K; Kp += 1) {
            auto [a_hat, b_hat] = average_subcode(c.A, dual_transform(c.A), c.params.K, Kp);
            CodeParams sub = c.params;
            sub.K = Kp;
            CHECK(check_membership(a_hat, sub).passed());
        }
    }
}
