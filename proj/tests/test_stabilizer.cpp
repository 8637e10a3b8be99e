#include "qlp/bound.hpp"
#include "qlp/enumerator.hpp"
#include "qlp/errors.hpp"
#include "qlp/stabilizer.hpp"

#include <doctest.h>

using namespace qlp;

namespace {

HomPoly poly(std::initializer_list<Rational> c) { return HomPoly(std::vector<Rational>(c)); }

const char* five_qubit = "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n";

} // namespace

TEST_CASE("Pauli strings")
{
    CHECK(weight(PauliString::parse("IIXYI")) == 2);
    CHECK(weight(PauliString::parse("IIII")) == 0);
    CHECK(weight(PauliString::parse("YYYY")) == 4);
    CHECK(PauliString::parse("-XZ").phase == 2);
    CHECK(PauliString::parse("+iX").phase == 1);
    CHECK(PauliString::parse("-iX").str() == "-iX");
    CHECK_THROWS_AS(PauliString::parse("XQ"), parse_error);
    CHECK_THROWS_AS(PauliString::parse("-"), parse_error);
}

TEST_CASE("code file parsing")
{
    auto code = StabilizerCode::parse("# Bell pair\nXX\n\n  ZZ  # phase flip\n");
    CHECK(code.n == 2);
    CHECK(code.generators.size() == 2);
    CHECK_THROWS_AS(StabilizerCode::parse("XX\nZZZ\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("# nothing\n"), parse_error);
}

TEST_CASE("dense enumerators of small codes")
{
    SUBCASE("Bell pair")
    {
        auto e = enumerators_dense(StabilizerCode::parse("XX\nZZ\n"));
        CHECK(e.K == 1);
        CHECK(e.A == poly({1, 0, 3}));
        CHECK(e.B == poly({1, 0, 3}));
    }
    SUBCASE("[[4,2,2]]")
    {
        auto e = enumerators_dense(StabilizerCode::parse("XXXX\nZZZZ\n"));
        CHECK(e.K == 4);
        CHECK(e.A == poly({16, 0, 0, 0, 48}));
        CHECK(e.B == dual_transform(e.A));
    }
    SUBCASE("five-qubit code")
    {
        auto e = enumerators_dense(StabilizerCode::parse(five_qubit));
        CHECK(e.K == 2);
        CHECK(e.A == poly({4, 0, 0, 0, 60, 0}));
        CHECK(e.B == poly({2, 0, 0, 60, 30, 36}));
    }
    SUBCASE("sign of a generator does not change the enumerators")
    {
        auto e = enumerators_dense(StabilizerCode::parse("-XXXX\nZZZZ\n"));
        CHECK(e.A == poly({16, 0, 0, 0, 48}));
    }
    SUBCASE("dependent generators collapse to the same group")
    {
        auto e = enumerators_dense(StabilizerCode::parse("XXXX\nZZZZ\nYYYY\n"));
        CHECK(e.K == 4);
    }
}

TEST_CASE("oracle invariants on a few more codes")
{
    const char* codes[] = {
        "ZZI\nIZZ\n",                                       // bit-flip repetition
        "XXXXII\nZZZZII\nIIXXXX\nIIZZZZ\n",                 // two overlapping [[4,2,2]]
        "XXXX\n",                                           // one generator
        "ZZZZZZ\nXXXXXX\n",                                 // [[6,4,2]]
    };
    for (const char* text : codes) {
        auto code = StabilizerCode::parse(text);
        auto e = enumerators_dense(code);
        CHECK(dual_transform(e.A) == e.B);
        CHECK(is_nonnegative(shadow_transform(e.A)));
        CHECK(e.A[0] == e.K * e.K);
        CHECK(e.A.evaluate(1, 1) == pow(Rational(2), code.n) * e.K);
        CHECK(check_membership(e.A, {code.n, e.K, 1, false}).passed());
    }
}

TEST_CASE("invalid codes")
{
    CHECK_THROWS_AS(enumerators_dense(StabilizerCode::parse("XI\nZI\n")), invalid_code_error);
    CHECK_THROWS_AS(enumerators_dense(StabilizerCode::parse("XX\n-XX\n")), invalid_code_error);
    CHECK_THROWS_AS(enumerators_dense(StabilizerCode::parse("iXX\n")), invalid_code_error);
    CHECK_THROWS_AS(enumerators_dense(StabilizerCode::parse("XXXXXXX\n")), limit_error);
    CHECK_NOTHROW(enumerators_dense(StabilizerCode::parse("XXXXXXX\n"), 7));
}
