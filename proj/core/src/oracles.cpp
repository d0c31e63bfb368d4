#include "vwstack/oracles.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

namespace vwstack::oracle {

namespace {

using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::int64_t positive_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Form reduce(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t delta) {
    for (;;) {
        if (std::llabs(b) > a) {
            // Translate x -> x + ky so that b lands in (-a, a].
            std::int64_t nb = positive_mod(b, 2 * a);
            if (nb > a) {
                nb -= 2 * a;
            }
            b = nb;
            c = (b * b + delta) / (4 * a);
        } else if (a > c) {
            // (x, y) -> (-y, x).
            std::swap(a, c);
            b = -b;
        } else {
            break;
        }
    }
    if (b < 0 && (-b == a || a == c)) {
        b = -b;
    }
    return {a, b, c};
}

std::int64_t automorphism_count(const Form& f) {
    const auto [a, b, c] = f;
    std::int64_t count = 0;
    for (std::int64_t p = -1; p <= 1; ++p) {
        for (std::int64_t q = -1; q <= 1; ++q) {
            for (std::int64_t r = -1; r <= 1; ++r) {
                for (std::int64_t s = -1; s <= 1; ++s) {
                    if (p * s - q * r != 1) {
                        continue;
                    }
                    const std::int64_t na = a * p * p + b * p * r + c * r * r;
                    const std::int64_t nb = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s;
                    const std::int64_t nc = a * q * q + b * q * s + c * s * s;
                    if (na == a && nb == b && nc == c) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

} // namespace

std::vector<BigInt> partition_numbers(std::int64_t order) {
    if (order < 0) {
        throw std::invalid_argument("partition_numbers: order must be nonnegative");
    }
    std::vector<BigInt> p(static_cast<std::size_t>(order) + 1, BigInt(0));
    p[0] = 1;
    for (std::int64_t n = 1; n <= order; ++n) {
        BigInt total = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                total += sign * p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

std::vector<BigInt> colored_partitions(std::int64_t chi, std::int64_t order) {
    if (order < 0) {
        throw std::invalid_argument("colored_partitions: order must be nonnegative");
    }
    std::vector<BigInt> sigma1(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (std::int64_t d = 1; d <= order; ++d) {
        for (std::int64_t m = d; m <= order; m += d) {
            sigma1[static_cast<std::size_t>(m)] += d;
        }
    }
    std::vector<BigInt> a(static_cast<std::size_t>(order) + 1, BigInt(0));
    a[0] = 1;
    for (std::int64_t m = 1; m <= order; ++m) {
        BigInt acc = 0;
        for (std::int64_t k = 1; k <= m; ++k) {
            acc += sigma1[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(m - k)];
        }
        a[static_cast<std::size_t>(m)] = chi * acc / m;
    }
    return a;
}

Rational hurwitz_nonreduced(std::int64_t delta) {
    if (delta <= 0) {
        throw std::invalid_argument("hurwitz_nonreduced: delta must be positive");
    }
    std::set<Form> classes;
    for (std::int64_t a = 1; a <= delta; ++a) {
        for (std::int64_t c = 1; c <= delta; ++c) {
            const std::int64_t b2 = 4 * a * c - delta;
            if (b2 < 0) {
                continue;
            }
            std::int64_t b = 0;
            while (b * b < b2) {
                ++b;
            }
            if (b * b != b2) {
                continue;
            }
            classes.insert(reduce(a, b, c, delta));
            classes.insert(reduce(a, -b, c, delta));
        }
    }
    Rational total = 0;
    for (const auto& f : classes) {
        total += Rational(BigInt(2), BigInt(automorphism_count(f)));
    }
    return total;
}

std::vector<Rational> theta1_cosine(std::int64_t order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    out[0] = 1;
    for (std::int64_t k = 1; k * k <= order; ++k) {
        out[static_cast<std::size_t>(k * k)] += (k % 3 == 0) ? 2 : -1;
    }
    return out;
}

std::int64_t r2(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t x = -n; x <= n; ++x) {
        for (std::int64_t y = -n; y <= n; ++y) {
            if (x * x + y * y == n) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

QSeries random_series(std::mt19937_64& rng, std::int64_t unit_den, std::int64_t lo,
                      std::int64_t len, bool nonzero_leading) {
    QSeries s(unit_den, lo, lo + len);
    for (std::int64_t e = lo; e <= lo + len; ++e) {
        std::int64_t c = uniform(rng, -5, 5);
        if (e == lo && nonzero_leading && c == 0) {
            c = 1;
        }
        if (c != 0) {
            s.set_coefficient(e, Rational(c));
        }
    }
    return s;
}

} // namespace vwstack::oracle
