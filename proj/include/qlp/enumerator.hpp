#pragma once

#include "qlp/hompoly.hpp"
#include "qlp/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlp {

// Quantum code parameters ((n, K, d)). K is rational in the library; the CLI
// restricts it to integers.
struct CodeParams {
    unsigned n = 1;
    Rational K = 1;
    unsigned d = 1;
    bool pure = false;

    // Throws domain_error unless n >= 1, 1 <= d <= n and K >= 1.
    void validate() const;
};

struct EnumeratorABS {
    HomPoly A, B, S;
};

struct EnumeratorCD {
    HomPoly C, D;
};

// B(x,y) = A((x+3y)/2, (x-y)/2). Self-inverse.
HomPoly dual_transform(const HomPoly& A);

// S(x,y) = A((x+3y)/2, (y-x)/2).
HomPoly shadow_transform(const HomPoly& A);

EnumeratorABS complete_enumerator(const HomPoly& A);

// Expected enumerators of a uniformly random Kp-dimensional subcode of a
// K-dimensional code with enumerators (A, B):
//
//   A^ = Kp(Kp K - 1)/(K^3 - K) A + Kp(K - Kp)/(K^3 - K) B
//   B^ = Kp(K - Kp)/(K^3 - K) A + Kp(Kp K - 1)/(K^3 - K) B
//
// Requires K > 1 and 0 <= Kp <= K.
std::pair<HomPoly, HomPoly> average_subcode(const HomPoly& A, const HomPoly& B, const Rational& K,
                                            const Rational& Kp);

// Shadow of the averaged subcode, computed from S alone through its parity
// parts:
//   S^ = (Kp^2+Kp)/(K^2+K) even(S) + (Kp^2-Kp)/(K^2-K) odd(S)
HomPoly average_subcode_shadow(const HomPoly& S, const Rational& K, const Rational& Kp);

// C = (A+B)/(K^2+K), D = (A-B)/(K^2-K). Requires K > 1.
EnumeratorCD cd_from_ab(const HomPoly& A, const HomPoly& B, const Rational& K);

// Inverse of cd_from_ab: A = K^2 C - (K^2-K)/2 (C-D), B = (K^2+K) C - A.
// Defined for every K > 0; at K = 1 it returns A = B = C.
std::pair<HomPoly, HomPoly> ab_from_cd(const EnumeratorCD& cd, const Rational& K);

// Average weight enumerator of a random ((n, K)) code:
//   K(4^n K - 2^n)/(4^n - 1) x^n + K(2^n - K)/(4^n - 1) (x+3y)^n
// Requires 0 < K <= 2^n.
HomPoly random_code_enumerator(unsigned n, const Rational& K);

// (even, odd) parts under x -> -x. The two parts have disjoint support.
std::pair<HomPoly, HomPoly> parity_split(const HomPoly& p);

// Which of the quantum LP constraints an explicit enumerator violates.
enum class Constraint {
    leading,       // A(1,0) = K^2
    low_weight,    // B - A/K vanishes below y^d
    a_nonneg,      // A >= 0
    b_minus_a,     // B - A/K >= 0
    shadow_nonneg, // S >= 0
    purity,        // A vanishes for 1 <= j < d (pure codes only)
};

const char* constraint_name(Constraint c);

struct ConstraintCheck {
    Constraint constraint;
    bool passed = true;
    // First coefficient index at which the constraint fails.
    std::optional<unsigned> first_violation;
};

struct MembershipReport {
    EnumeratorABS enumerator;
    std::vector<ConstraintCheck> checks;

    bool passed() const;
    std::string summary() const;
};

// Requires degree(A) == params.n (std::invalid_argument otherwise).
MembershipReport check_membership(const HomPoly& A, const CodeParams& params);

} // namespace qlp
