#include <gtest/gtest.h>

#include <random>

#include "vwstack/errors.hpp"
#include "vwstack/oracles.hpp"
#include "vwstack/qseries.hpp"

namespace vwstack {
namespace {

constexpr int kCases = 200;
constexpr std::uint64_t kSeed = 12345;

Rational r(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

TEST(QSeries, WindowSemantics) {
    QSeries s = QSeries::polynomial({1, 2, 3}, 4);
    EXPECT_EQ(s.coefficient(-5), 0);
    EXPECT_EQ(s.coefficient(4), 0);
    EXPECT_THROW((void)s.coefficient(5), OutOfWindow);
    EXPECT_THROW(s.set_coefficient(5, r(1)), OutOfWindow);
    EXPECT_FALSE(s.is_exact());
    EXPECT_TRUE(QSeries::polynomial({1, 2}).is_exact());
}

TEST(QSeries, DefaultIsExactZero) {
    const QSeries z;
    EXPECT_TRUE(z.is_exact());
    EXPECT_TRUE(z.terms().empty());
    EXPECT_FALSE(z.valuation().has_value());
}

TEST(QSeries, ProductWindowFollowsValuations) {
    // (1 + q + O(q^3)) (q^2 + O(q^4)) is known through q^3 only.
    const QSeries f = QSeries::polynomial({1, 1}, 2);
    const QSeries g = QSeries::monomial(r(1), 2, 1, 3);
    const QSeries p = f * g;
    EXPECT_EQ(p.hi(), 3);
    EXPECT_EQ(p.coefficient(2), 1);
    EXPECT_EQ(p.coefficient(3), 1);
    EXPECT_THROW((void)p.coefficient(4), OutOfWindow);
}

TEST(QSeries, SumWindowIsTheSmaller) {
    const QSeries f = QSeries::polynomial({1, 1}, 2);
    const QSeries g = QSeries::polynomial({0, 0, 0, 5}, 7);
    EXPECT_EQ((f + g).hi(), 2);
    EXPECT_EQ((f + QSeries::polynomial({1})).hi(), 2);
}

TEST(QSeries, PuiseuxLattices) {
    const QSeries a = QSeries::monomial(r(2), 1, 2);  // 2 q^{1/2}
    const QSeries b = QSeries::monomial(r(3), 1, 3);  // 3 q^{1/3}
    const QSeries p = a * b;
    EXPECT_EQ(p.unit_den(), 6);
    EXPECT_EQ(p.coefficient_at(r(5, 6)), 6);
    EXPECT_EQ(p.coefficient_at(r(1, 2)), 0);
    const QSeries s = a + b;
    EXPECT_EQ(s.coefficient_at(r(1, 2)), 2);
    EXPECT_EQ(s.coefficient_at(r(1, 3)), 3);
}

TEST(QSeries, NormalizedFindsCoarsestLattice) {
    const QSeries s = QSeries::monomial(r(1), 12, 24, 48);
    const QSeries n = s.normalized();
    EXPECT_EQ(n.unit_den(), 2);
    EXPECT_EQ(n.hi(), 4);
    EXPECT_EQ(s, n);
}

TEST(QSeries, InvertGeometric) {
    const QSeries inv = invert(QSeries::polynomial({1, -1}, 10));
    ASSERT_EQ(inv.hi(), 10);
    for (std::int64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(inv.coefficient(n), 1);
    }
}

TEST(QSeries, InvertExactInputUsesDefaultOrder) {
    const QSeries inv = invert(QSeries::polynomial({1, -1}));
    EXPECT_EQ(inv.hi(), QSeries::kDefaultOrder);
}

TEST(QSeries, InvertMonomialIsExact) {
    const QSeries inv = invert(QSeries::monomial(r(4), 3, 2));
    EXPECT_TRUE(inv.is_exact());
    EXPECT_EQ(inv.coefficient_at(r(-3, 2)), r(1, 4));
}

TEST(QSeries, InvertLaurent) {
    // 1/(q^-1 + 1) = q - q^2 + q^3 - ...
    QSeries f(1, -1, 5);
    f.set_coefficient(-1, r(1));
    f.set_coefficient(0, r(1));
    const QSeries inv = invert(f);
    EXPECT_EQ(inv.coefficient(1), 1);
    EXPECT_EQ(inv.coefficient(2), -1);
    EXPECT_EQ(inv.hi(), 7);
}

TEST(QSeries, InvertRejectsZero) {
    EXPECT_THROW(invert(QSeries(1, 0, 5)), ZeroLeadingCoefficient);
    EXPECT_THROW(invert(QSeries()), ZeroLeadingCoefficient);
}

TEST(QSeries, SqrtCatalan) {
    // sqrt(1 - 4q) = 1 - 2 Σ C_{n-1} q^n.
    const QSeries s = sqrt(QSeries::polynomial({1, -4}, 6));
    const std::int64_t expected[] = {1, -2, -2, -4, -10, -28, -84};
    for (std::int64_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(s.coefficient(n), expected[n]) << n;
    }
}

TEST(QSeries, SqrtErrors) {
    EXPECT_THROW(sqrt(QSeries::polynomial({2, 1}, 4)), NotASquare);
    EXPECT_THROW(sqrt(QSeries::monomial(r(1), 1, 1, 4)), NotASquare);
    EXPECT_THROW(sqrt(QSeries::polynomial({-1, 1}, 4)), NotASquare);
    EXPECT_THROW(sqrt(QSeries(1, 0, 4)), NotASquare);
    EXPECT_TRUE(sqrt(QSeries()).terms().empty());
}

TEST(QSeries, SqrtOfPuiseuxMonomial) {
    const QSeries s = sqrt(QSeries::monomial(r(9, 4), 2, 2));
    EXPECT_TRUE(s.is_exact());
    EXPECT_EQ(s.coefficient_at(r(1, 2)), r(3, 2));
}

TEST(QSeries, ExpAndLogKnownSeries) {
    const QSeries e = exp_series(QSeries::monomial(r(1), 1, 1, 8));
    for (std::int64_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(e.coefficient(n), Rational(1) / Rational(factorial(n)));
    }
    const QSeries l = log_series(QSeries::polynomial({1, 1}, 8));
    for (std::int64_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(l.coefficient(n), r(n % 2 == 1 ? 1 : -1, n));
    }
}

TEST(QSeries, ExpLogDomains) {
    EXPECT_THROW(exp_series(QSeries::polynomial({1, 1}, 4)), BadValuation);
    EXPECT_THROW(log_series(QSeries::polynomial({2, 1}, 4)), BadValuation);
    EXPECT_THROW(log_series(QSeries::monomial(r(1), -1, 1, 4) + QSeries::constant(r(1), 4)),
                 BadValuation);
    EXPECT_EQ(exp_series(QSeries()), QSeries::constant(r(1)));
}

TEST(QSeries, ComposeGeometricWithDoubling) {
    // 1/(1-x) at x = 2q gives Σ 2^n q^n.
    const QSeries geometric = invert(QSeries::polynomial({1, -1}, 6));
    const QSeries c = compose(geometric, QSeries::monomial(r(2), 1, 1));
    ASSERT_EQ(c.hi(), 6);
    for (std::int64_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(c.coefficient(n), pow(Rational(2), n));
    }
}

TEST(QSeries, ComposeTailUsesInnerValuation) {
    // f known through x^3, g = q^2: f(g) known through q^7.
    const QSeries c = compose(QSeries::polynomial({1, 1, 1, 1}, 3), QSeries::monomial(r(1), 2, 1));
    EXPECT_EQ(c.hi(), 7);
}

TEST(QSeries, ComposeRequiresPositiveValuation) {
    EXPECT_THROW(compose(QSeries::polynomial({1, 1}), QSeries::polynomial({1, 1})), BadValuation);
    EXPECT_THROW(compose(QSeries::monomial(r(1), 1, 2), QSeries::monomial(r(1), 1, 1)),
                 BadValuation);
}

TEST(QSeries, IntPowMatchesRepeatedProduct) {
    const QSeries f = QSeries::polynomial({1, 2, -1}, 9);
    QSeries acc = QSeries::constant(r(1));
    for (int n = 1; n <= 6; ++n) {
        acc = acc * f;
        EXPECT_EQ(int_pow(f, n), acc);
    }
    EXPECT_TRUE(agree_on_common_window(int_pow(f, -3) * int_pow(f, 3), QSeries::constant(r(1))));
}

TEST(QSeries, DerivativeOfPuiseux) {
    const QSeries d = derivative(QSeries::monomial(r(1), 3, 2));
    EXPECT_EQ(d.coefficient_at(r(1, 2)), r(3, 2));
    const QSeries dc = derivative(QSeries::constant(r(7), 5));
    EXPECT_TRUE(dc.terms().empty());
    EXPECT_EQ(dc.hi(), 4);
}

TEST(QSeries, Alternated) {
    const QSeries a = QSeries::polynomial({1, 2, 3}).alternated();
    EXPECT_EQ(a.coefficient(1), -2);
    EXPECT_EQ(a.coefficient(2), 3);
    EXPECT_THROW(QSeries::monomial(r(1), 1, 2).alternated(), std::invalid_argument);
}

TEST(QSeries, EqualityIgnoresLatticeAndFloor) {
    QSeries a(4, -8, 8);
    a.set_coefficient(4, r(1));
    const QSeries b = QSeries::monomial(r(1), 1, 1, 2);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == QSeries::monomial(r(1), 1, 1, 3));
}

// Randomized properties, seeded for reproducibility.

class QSeriesProperty : public ::testing::Test {
protected:
    std::mt19937_64 rng{kSeed};

    QSeries any(bool nonzero_leading = true) {
        const std::int64_t d = oracle::uniform(rng, 1, 3);
        return oracle::random_series(rng, d, oracle::uniform(rng, -3, 3),
                                     oracle::uniform(rng, 1, 8), nonzero_leading);
    }
};

TEST_F(QSeriesProperty, RingLaws) {
    for (int i = 0; i < kCases; ++i) {
        const QSeries f = any(), g = any(), h = any();
        ASSERT_EQ(f + g, g + f);
        ASSERT_EQ(f * g, g * f);
        ASSERT_EQ((f * g) * h, f * (g * h));
        ASSERT_EQ((f + g) + h, f + (g + h));
        ASSERT_TRUE(agree_on_common_window(f * (g + h), f * g + f * h));
        ASSERT_TRUE((f - f).terms().empty());
        ASSERT_EQ(f * QSeries::constant(r(1)), f);
    }
}

TEST_F(QSeriesProperty, InvertRoundTrip) {
    for (int i = 0; i < kCases; ++i) {
        const QSeries f = any();
        const QSeries p = f * invert(f);
        ASSERT_EQ(p.hi(), f.hi() - f.lo());
        ASSERT_EQ(p.truncated(p.hi()), QSeries::monomial(r(1), 0, p.unit_den(), p.hi()));
    }
}

TEST_F(QSeriesProperty, SqrtRoundTrip) {
    for (int i = 0; i < kCases; ++i) {
        QSeries g = any();
        if (g.terms().begin()->second < 0) {
            g = -g;
        }
        const QSeries s = sqrt(g * g);
        ASSERT_TRUE(agree_on_common_window(s, g));
        ASSERT_TRUE(agree_on_common_window(s * s, g * g));
    }
}

TEST_F(QSeriesProperty, ExpLogRoundTrip) {
    for (int i = 0; i < kCases; ++i) {
        const std::int64_t d = oracle::uniform(rng, 1, 2);
        const QSeries f = oracle::random_series(rng, d, oracle::uniform(rng, 1, 3),
                                                oracle::uniform(rng, 1, 8), true);
        ASSERT_TRUE(agree_on_common_window(log_series(exp_series(f)), f));
        const QSeries one_plus = QSeries::constant(r(1)) + f;
        ASSERT_TRUE(agree_on_common_window(exp_series(log_series(one_plus)), one_plus));
        // exp turns sums into products.
        const QSeries g = oracle::random_series(rng, d, 1, oracle::uniform(rng, 1, 8), true);
        ASSERT_TRUE(agree_on_common_window(exp_series(f + g), exp_series(f) * exp_series(g)));
    }
}

TEST_F(QSeriesProperty, Leibniz) {
    for (int i = 0; i < kCases; ++i) {
        const QSeries f = any(false), g = any(false);
        ASSERT_TRUE(agree_on_common_window(derivative(f * g), derivative(f) * g + f * derivative(g)));
    }
}

TEST_F(QSeriesProperty, ComposeIsRingHomomorphism) {
    for (int i = 0; i < kCases; ++i) {
        const QSeries f = oracle::random_series(rng, 1, 0, oracle::uniform(rng, 1, 6), false);
        const QSeries h = oracle::random_series(rng, 1, 0, oracle::uniform(rng, 1, 6), false);
        const QSeries g = oracle::random_series(rng, 1, 1, oracle::uniform(rng, 1, 6), true);
        ASSERT_TRUE(agree_on_common_window(compose(f * h, g), compose(f, g) * compose(h, g)));
        ASSERT_TRUE(agree_on_common_window(compose(f + h, g), compose(f, g) + compose(h, g)));
    }
}

} // namespace
} // namespace vwstack
