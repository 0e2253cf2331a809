#pragma once

/* Exact integer arithmetic used throughout the library.  Ball counts,
 * distortion values and partition numbers overflow 64 bits quickly, so
 * every tabulated quantity is an arbitrary-precision integer.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace growthlab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt parse_bigint(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("parse_bigint: empty string");
    return BigInt(s);
}

/* floor(sqrt(x)) for x >= 0 */
inline BigInt isqrt(const BigInt& x)
{
    if (x < 0)
        throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

inline std::int64_t isqrt64(std::int64_t x)
{
    if (x < 0)
        throw std::domain_error("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

/* ceil(p / q) for q > 0 */
inline BigInt ceil_div(const BigInt& p, const BigInt& q)
{
    if (q <= 0)
        throw std::domain_error("ceil_div: non-positive divisor");
    BigInt d = p / q;
    if (p % q != 0 && p > 0)
        ++d;
    return d;
}

/* floor(p / q) for q > 0, valid for negative p as well */
inline BigInt floor_div(const BigInt& p, const BigInt& q)
{
    if (q <= 0)
        throw std::domain_error("floor_div: non-positive divisor");
    BigInt d = p / q;
    if (p % q != 0 && p < 0)
        --d;
    return d;
}

/* natural log of a positive big integer, stable for values far beyond
 * the range of double */
inline double log_big(const BigInt& x)
{
    if (x <= 0)
        throw std::domain_error("log_big of non-positive value");
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 62)
        return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 52;
    const double mant = BigInt(x >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * std::log(2.0);
}

inline BigInt pow_big(const BigInt& base, std::uint64_t e)
{
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::int64_t to_i64_checked(const BigInt& x, const char* what)
{
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return x.convert_to<std::int64_t>();
}

/* Exact non-negative rational, used for small-cancellation ratios and
 * escape bounds.  Kept reduced; comparisons cross-multiply. */
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d))
    {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    double to_double() const
    {
        return (num == 0) ? 0.0
                          : std::exp(log_big(num < 0 ? BigInt(-num) : num) - log_big(den)) *
                                (num < 0 ? -1.0 : 1.0);
    }

    std::string str() const { return num.str() + "/" + den.str(); }
};

} // namespace growthlab
