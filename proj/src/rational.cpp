#include "z2rep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace z2rep {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer to_integer(std::string_view s)
{
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto numerator = text.substr(0, slash);
    if (!is_integer_literal(numerator))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");

    Rational value;
    if (slash == std::string_view::npos) {
        value = Rational(to_integer(numerator));
    } else {
        const auto denominator = text.substr(slash + 1);
        if (!is_integer_literal(denominator) || denominator.front() == '-' || denominator.front() == '+')
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        const Integer q = to_integer(denominator);
        if (q == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(to_integer(numerator), q);
        value.canonicalize();
    }
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(result);
}

Rational power(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

}  // namespace z2rep
