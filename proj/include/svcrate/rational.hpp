#ifndef SVCRATE_RATIONAL_HPP
#define SVCRATE_RATIONAL_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace svcrate {

// GMP keeps mpq values canonical: gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/** Smallest integer >= r. */
inline Integer ceil_of(const Rational& r)
{
    Integer n = numerator_of(r), d = denominator_of(r);
    Integer q = n / d;   // truncates toward zero
    if (q * d != n && n > 0) q += 1;
    return q;
}

/** `p/q`, or just `p` when the denominator is one. */
inline std::string to_string(const Rational& r)
{
    return r.str();
}

/** Accepts `p`, `-p`, `p/q`; the result is reduced. */
inline Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_int(num, true)) throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
    Integer d = 1;
    if (slash != std::string_view::npos)
    {
        std::string_view den = text.substr(slash + 1);
        if (!valid_int(den, false)) throw ParseError("malformed rational '" + std::string(text) + "'");
        d = Integer(std::string(den));
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

inline Rational sum_of(const RationalVector& v)
{
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("dot of rational vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}   // namespace svcrate

#endif
