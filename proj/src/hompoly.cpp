#include "qlp/hompoly.hpp"

#include <stdexcept>
#include <string>

namespace qlp {

namespace {

// Coefficients of (u x + v y)^k, indexed by the power of y.
std::vector<Rational> binomial_power(const Rational& u, const Rational& v, unsigned k)
{
    std::vector<Rational> out(k + 1);
    Integer binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
        out[j] = Rational(binom) * pow(u, k - j) * pow(v, j);
        binom = binom * (k - j) / (j + 1);
    }
    return out;
}

void require_same_degree(const HomPoly& p, const HomPoly& q)
{
    if (p.degree() != q.degree())
        throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()));
}

} // namespace

HomPoly::HomPoly(unsigned degree) : coeffs_(degree + 1) {}

HomPoly::HomPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("homogeneous polynomial needs at least one coefficient");
}

HomPoly HomPoly::monomial(unsigned degree, unsigned i, const Rational& coeff)
{
    HomPoly p(degree);
    p[i] = coeff;
    return p;
}

Rational HomPoly::evaluate(const Rational& x, const Rational& y) const
{
    Rational sum = 0;
    const unsigned n = degree();
    for (unsigned i = 0; i <= n; ++i)
        if (coeffs_[i] != 0)
            sum += coeffs_[i] * pow(x, n - i) * pow(y, i);
    return sum;
}

bool HomPoly::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

LinearMap2 LinearMap2::macwilliams()
{
    return {Rational(1, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)};
}

LinearMap2 LinearMap2::shadow()
{
    return {Rational(1, 2), Rational(3, 2), Rational(-1, 2), Rational(1, 2)};
}

HomPoly substitute_linear(const HomPoly& p, const LinearMap2& m)
{
    const unsigned n = p.degree();
    HomPoly out(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (p[i] == 0)
            continue;
        auto xs = binomial_power(m.a, m.b, n - i);
        auto ys = binomial_power(m.c, m.d, i);
        for (unsigned s = 0; s < xs.size(); ++s) {
            if (xs[s] == 0)
                continue;
            Rational lhs = p[i] * xs[s];
            for (unsigned t = 0; t < ys.size(); ++t)
                out[s + t] += lhs * ys[t];
        }
    }
    return out;
}

std::vector<std::vector<Rational>> substitution_matrix(unsigned degree, const LinearMap2& m)
{
    std::vector<std::vector<Rational>> t(degree + 1, std::vector<Rational>(degree + 1));
    for (unsigned i = 0; i <= degree; ++i) {
        HomPoly image = substitute_linear(HomPoly::monomial(degree, i), m);
        for (unsigned j = 0; j <= degree; ++j)
            t[j][i] = image[j];
    }
    return t;
}

HomPoly add(const HomPoly& p, const HomPoly& q)
{
    require_same_degree(p, q);
    HomPoly out = p;
    for (unsigned i = 0; i <= p.degree(); ++i)
        out[i] += q[i];
    return out;
}

HomPoly subtract(const HomPoly& p, const HomPoly& q)
{
    require_same_degree(p, q);
    HomPoly out = p;
    for (unsigned i = 0; i <= p.degree(); ++i)
        out[i] -= q[i];
    return out;
}

HomPoly scale(const HomPoly& p, const Rational& c)
{
    HomPoly out = p;
    for (unsigned i = 0; i <= p.degree(); ++i)
        out[i] *= c;
    return out;
}

HomPoly operator+(const HomPoly& p, const HomPoly& q) { return add(p, q); }
HomPoly operator-(const HomPoly& p, const HomPoly& q) { return subtract(p, q); }
HomPoly operator-(const HomPoly& p) { return scale(p, -1); }
HomPoly operator*(const Rational& c, const HomPoly& p) { return scale(p, c); }

HomPoly reflect_x(const HomPoly& p)
{
    HomPoly out = p;
    const unsigned n = p.degree();
    for (unsigned i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1)
            out[i] = -out[i];
    return out;
}

bool is_nonnegative(const HomPoly& p)
{
    for (const auto& c : p.coeffs())
        if (c < 0)
            return false;
    return true;
}

} // namespace qlp
