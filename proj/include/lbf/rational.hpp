#pragma once

// Exact arithmetic shared by every module: arbitrary precision integers and
// rationals, plus the `b/d` text form used on the command line and in files.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lbf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline Rational make_rational(const BigInt & num, const BigInt & den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

/// Lowest-terms text form. Integers are written without a denominator.
inline std::string to_string(const Rational & r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses `b/d` or `b`. Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace lbf
