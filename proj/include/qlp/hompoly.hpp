#pragma once

#include "qlp/rational.hpp"

#include <span>
#include <vector>

namespace qlp {

/*
 * Homogeneous bivariate polynomial of fixed degree n,
 *
 *     p(x, y) = sum_{i=0}^{n} coeffs[i] x^(n-i) y^i,
 *
 * so coeffs[i] is indexed by the y-degree (the Pauli weight when p is a
 * weight enumerator). The coefficient vector always has n+1 entries.
 */
class HomPoly {
  public:
    // Zero polynomial of the given degree.
    explicit HomPoly(unsigned degree = 0);
    explicit HomPoly(std::vector<Rational> coeffs);

    // x^(n-i) y^i
    static HomPoly monomial(unsigned degree, unsigned i, const Rational& coeff = 1);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& operator[](unsigned i) const { return coeffs_.at(i); }
    Rational& operator[](unsigned i) { return coeffs_.at(i); }

    Rational evaluate(const Rational& x, const Rational& y) const;
    bool is_zero() const;

    friend bool operator==(const HomPoly&, const HomPoly&) = default;

  private:
    std::vector<Rational> coeffs_;
};

// Substitution x -> a x + b y, y -> c x + d y. Singular maps are allowed.
struct LinearMap2 {
    Rational a, b, c, d;

    // x -> (x+3y)/2, y -> (x-y)/2; squares to the identity.
    static LinearMap2 macwilliams();
    // x -> (x+3y)/2, y -> (y-x)/2
    static LinearMap2 shadow();
};

HomPoly substitute_linear(const HomPoly& p, const LinearMap2& m);

// Matrix T of substitute_linear restricted to degree n: the coefficient
// vector of substitute_linear(p, m) is T * p.coeffs(). Row j, column i.
std::vector<std::vector<Rational>> substitution_matrix(unsigned degree, const LinearMap2& m);

// Throws std::invalid_argument on degree mismatch.
HomPoly add(const HomPoly& p, const HomPoly& q);
HomPoly subtract(const HomPoly& p, const HomPoly& q);
HomPoly scale(const HomPoly& p, const Rational& c);

HomPoly operator+(const HomPoly& p, const HomPoly& q);
HomPoly operator-(const HomPoly& p, const HomPoly& q);
HomPoly operator-(const HomPoly& p);
HomPoly operator*(const Rational& c, const HomPoly& p);

// p(-x, y)
HomPoly reflect_x(const HomPoly& p);

bool is_nonnegative(const HomPoly& p);

} // namespace qlp
