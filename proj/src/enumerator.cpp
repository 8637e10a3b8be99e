#include "qlp/enumerator.hpp"

#include "qlp/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace qlp {

void CodeParams::validate() const
{
    if (n < 1)
        throw domain_error("n must be at least 1");
    if (d < 1 || d > n)
        throw domain_error("minimum distance must satisfy 1 <= d <= n (got d=" + std::to_string(d) +
                           ", n=" + std::to_string(n) + ")");
    if (K < 1)
        throw domain_error("code dimension K must be at least 1 (got " + to_string(K) + ")");
}

HomPoly dual_transform(const HomPoly& A) { return substitute_linear(A, LinearMap2::macwilliams()); }

HomPoly shadow_transform(const HomPoly& A) { return substitute_linear(A, LinearMap2::shadow()); }

EnumeratorABS complete_enumerator(const HomPoly& A) { return {A, dual_transform(A), shadow_transform(A)}; }

namespace {

void require_subcode_range(const Rational& K, const Rational& Kp)
{
    if (K <= 1)
        throw domain_error("subcode averaging needs K > 1 (got K=" + to_string(K) + ")");
    if (Kp < 0 || Kp > K)
        throw domain_error("subcode dimension must satisfy 0 <= K' <= K (got K'=" + to_string(Kp) + ")");
}

} // namespace

std::pair<HomPoly, HomPoly> average_subcode(const HomPoly& A, const HomPoly& B, const Rational& K,
                                            const Rational& Kp)
{
    require_subcode_range(K, Kp);
    const Rational denom = K * K * K - K;
    const Rational same = Kp * (Kp * K - 1) / denom;
    const Rational cross = Kp * (K - Kp) / denom;
    return {same * A + cross * B, cross * A + same * B};
}

HomPoly average_subcode_shadow(const HomPoly& S, const Rational& K, const Rational& Kp)
{
    require_subcode_range(K, Kp);
    auto [even, odd] = parity_split(S);
    const Rational even_coeff = (Kp * Kp + Kp) / (K * K + K);
    const Rational odd_coeff = (Kp * Kp - Kp) / (K * K - K);
    return even_coeff * even + odd_coeff * odd;
}

EnumeratorCD cd_from_ab(const HomPoly& A, const HomPoly& B, const Rational& K)
{
    if (K <= 1)
        throw domain_error("the C/D enumerators are only defined for K > 1 (got K=" + to_string(K) + ")");
    return {Rational(1) / (K * K + K) * (A + B), Rational(1) / (K * K - K) * (A - B)};
}

std::pair<HomPoly, HomPoly> ab_from_cd(const EnumeratorCD& cd, const Rational& K)
{
    if (K <= 0)
        throw domain_error("K must be positive (got " + to_string(K) + ")");
    HomPoly A = K * K * cd.C - (K * K - K) / 2 * (cd.C - cd.D);
    HomPoly B = (K * K + K) * cd.C - A;
    return {std::move(A), std::move(B)};
}

HomPoly random_code_enumerator(unsigned n, const Rational& K)
{
    if (n < 1)
        throw domain_error("n must be at least 1");
    const Rational two_n = pow(Rational(2), n);
    const Rational four_n = two_n * two_n;
    if (K <= 0 || K > two_n)
        throw domain_error("K must lie in (0, 2^n] (got K=" + to_string(K) + ", n=" + std::to_string(n) + ")");
    const Rational identity_weight = K * (four_n * K - two_n) / (four_n - 1);
    const Rational spread_weight = K * (two_n - K) / (four_n - 1);
    // (x + 3y)^n is the MacWilliams image of 2^n x^n.
    HomPoly spread = dual_transform(HomPoly::monomial(n, 0, two_n));
    return identity_weight * HomPoly::monomial(n, 0) + spread_weight * spread;
}

std::pair<HomPoly, HomPoly> parity_split(const HomPoly& p)
{
    const unsigned n = p.degree();
    HomPoly even(n), odd(n);
    for (unsigned i = 0; i <= n; ++i)
        ((n - i) % 2 == 0 ? even : odd)[i] = p[i];
    return {even, odd};
}

const char* constraint_name(Constraint c)
{
    switch (c) {
    case Constraint::leading:
        return "A(1,0) = K^2";
    case Constraint::low_weight:
        return "B - A/K = O(y^d)";
    case Constraint::a_nonneg:
        return "A >= 0";
    case Constraint::b_minus_a:
        return "B - A/K >= 0";
    case Constraint::shadow_nonneg:
        return "S >= 0";
    case Constraint::purity:
        return "A = K^2 x^n + O(y^d)";
    }
    return "?";
}

bool MembershipReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string MembershipReport::summary() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "pass" : "FAIL") << "  " << constraint_name(c.constraint);
        if (c.first_violation)
            os << "  (first violation at y^" << *c.first_violation << ")";
        os << '\n';
    }
    return os.str();
}

MembershipReport check_membership(const HomPoly& A, const CodeParams& params)
{
    if (A.degree() != params.n)
        throw std::invalid_argument("enumerator degree " + std::to_string(A.degree()) +
                                    " does not match n=" + std::to_string(params.n));
    MembershipReport report{complete_enumerator(A), {}};
    const auto& B = report.enumerator.B;
    const auto& S = report.enumerator.S;
    const HomPoly excess = B - Rational(1) / params.K * A;
    const unsigned n = params.n;

    auto scan = [&](Constraint c, unsigned from, unsigned to, auto&& ok) {
        ConstraintCheck check{c, true, std::nullopt};
        for (unsigned j = from; j < to; ++j) {
            if (!ok(j)) {
                check.passed = false;
                check.first_violation = j;
                break;
            }
        }
        report.checks.push_back(check);
    };

    scan(Constraint::leading, 0, 1, [&](unsigned) { return A[0] == params.K * params.K; });
    scan(Constraint::low_weight, 0, params.d, [&](unsigned j) { return excess[j] == 0; });
    scan(Constraint::a_nonneg, 0, n + 1, [&](unsigned j) { return A[j] >= 0; });
    scan(Constraint::b_minus_a, 0, n + 1, [&](unsigned j) { return excess[j] >= 0; });
    scan(Constraint::shadow_nonneg, 0, n + 1, [&](unsigned j) { return S[j] >= 0; });
    if (params.pure)
        scan(Constraint::purity, 1, params.d, [&](unsigned j) { return A[j] == 0; });
    return report;
}

} // namespace qlp
