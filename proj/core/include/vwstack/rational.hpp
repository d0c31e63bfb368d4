#ifndef VWSTACK_RATIONAL_HPP
#define VWSTACK_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace vwstack {

// Expression templates are disabled so that `auto` always yields a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q" in lowest terms, or just "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Generalized binomial C(a, k) = a (a-1) ... (a-k+1) / k! for any integer a.
Rational generalized_binomial(std::int64_t a, std::int64_t k);

BigInt factorial(std::int64_t n);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// r^e for any integer e (r must be nonzero when e < 0).
Rational pow(const Rational& r, std::int64_t e);
BigInt pow(const BigInt& b, std::uint64_t e);

std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

} // namespace vwstack

#endif
