#include "qlp/rational.hpp"

#include "qlp/errors.hpp"

#include <cctype>

namespace qlp {

namespace {

bool valid_integer_literal(std::string_view s, bool allow_sign)
{
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false))
        throw parse_error("malformed rational literal '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw parse_error("zero denominator in rational literal '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(num, den); // already coprime
}

} // namespace qlp
