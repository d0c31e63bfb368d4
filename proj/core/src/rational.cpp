#include "vwstack/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace vwstack {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
    const BigInt den = denominator_of(r);
    if (den == 1) {
        return numerator_of(r).str();
    }
    return numerator_of(r).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        pos = 1;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("empty integer literal");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("invalid integer literal: " + std::string(text));
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational literal");
    }
    return Rational(num, den);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    return Rational(BigInt(num), BigInt(den));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rational generalized_binomial(std::int64_t a, std::int64_t k) {
    if (k < 0) {
        return Rational(0);
    }
    BigInt num = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= a - i;
    }
    return Rational(num, factorial(k));
}

BigInt factorial(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) {
        return std::nullopt;
    }
    const BigInt num = numerator_of(r);
    const BigInt den = denominator_of(r);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        return std::nullopt;
    }
    return Rational(sn, sd);
}

Rational pow(const Rational& r, std::int64_t e) {
    if (e < 0) {
        if (r == 0) {
            throw std::domain_error("zero to a negative power");
        }
        return pow(Rational(1) / r, -e);
    }
    Rational base = r;
    Rational result = 1;
    auto n = static_cast<std::uint64_t>(e);
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

BigInt pow(const BigInt& b, std::uint64_t e) {
    return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

} // namespace vwstack
