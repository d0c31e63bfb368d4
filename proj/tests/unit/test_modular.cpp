#include <gtest/gtest.h>

#include <random>

#include "vwstack/errors.hpp"
#include "vwstack/modular.hpp"
#include "vwstack/oracles.hpp"

namespace vwstack {
namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

TEST(Eta, InversePowerIsPartitionNumbers) {
    const QSeries s = eta_product_pow(-1, 100);
    const std::vector<BigInt> p = oracle::partition_numbers(100);
    ASSERT_EQ(s.hi(), 100);
    for (std::int64_t n = 0; n <= 100; ++n) {
        ASSERT_EQ(s.coefficient(n), Rational(p[static_cast<std::size_t>(n)])) << n;
    }
    EXPECT_EQ(p[100].str(), "190569292");
}

TEST(Eta, SmallPowers) {
    EXPECT_EQ(eta_product_pow(-4, 6).coefficient(2), 14);
    const QSeries one = eta_product_pow(0, 5);
    EXPECT_EQ(one, QSeries::constant(r(1), 5));
    // Pentagonal numbers 0, 1, 2, 5, 7, 12, 15 with signs + - - + + - -.
    const QSeries e = eta_product_pow(1, 15);
    const std::int64_t expected[] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
    for (std::int64_t n = 0; n <= 15; ++n) {
        EXPECT_EQ(e.coefficient(n), expected[n]) << n;
    }
}

TEST(Eta, TrackedOffset) {
    const QSeries e = eta_product_pow(-4, 6, true);
    EXPECT_EQ(e.unit_den(), 24);
    EXPECT_EQ(e.valuation(), -4);
    EXPECT_EQ(e.coefficient_at(r(-1, 6)), 1);
    EXPECT_EQ(e.coefficient_at(r(11, 6)), 14);
}

TEST(Theta3, Coefficients) {
    const QSeries t = theta3(10);
    EXPECT_EQ(t.coefficient(0), 1);
    EXPECT_EQ(t.coefficient(3), 0);
    EXPECT_EQ(t.coefficient(4), 2);
    EXPECT_EQ(t.coefficient(9), 2);
    EXPECT_EQ(t.hi(), 10);
}

TEST(Theta3, SquareCountsTwoSquares) {
    const QSeries sq = theta3(50) * theta3(50);
    for (std::int64_t n = 0; n <= 50; ++n) {
        EXPECT_EQ(sq.coefficient(n), oracle::r2(n)) << n;
    }
}

TEST(EtaTheta, IdentityHolds) {
    EXPECT_TRUE(eta_theta_identity_check(30));
    EXPECT_TRUE(eta_theta_identity_check(0));
    EXPECT_TRUE(eta_theta_identity_check(60));
}

TEST(EtaTheta, DetectsPerturbation) {
    const QSeries good = QSeries::monomial(r(1), 4, 24) * eta_product_pow(-4, 20, true);
    QSeries bad = good;
    bad.add_to_coefficient(24 * 7, r(1));
    EXPECT_FALSE(eta_theta_identity_holds(bad, 20));
    QSeries off_lattice = good;
    off_lattice.add_to_coefficient(5, r(1));  // a stray q^{5/24}
    EXPECT_FALSE(eta_theta_identity_holds(off_lattice, 20));
    EXPECT_FALSE(eta_theta_identity_holds(good.truncated(24 * 10), 20));
}

TEST(Hurwitz, KnownValues) {
    const std::pair<std::int64_t, Rational> table[] = {
        {3, r(1, 3)}, {4, r(1, 2)}, {7, r(1)},  {8, r(1)},  {11, r(1)},
        {12, r(4, 3)}, {15, r(2)},  {16, r(3, 2)}, {20, r(2)}, {23, r(3)}};
    for (const auto& [d, h] : table) {
        EXPECT_EQ(hurwitz_H(d), h) << d;
    }
    EXPECT_EQ(hurwitz_H(1), 0);
    EXPECT_EQ(hurwitz_H(2), 0);
}

TEST(Hurwitz, ReducedForms) {
    EXPECT_EQ(reduced_forms(3), (std::vector<QuadFormTriple>{{1, 1, 1}}));
    EXPECT_EQ(reduced_forms(4), (std::vector<QuadFormTriple>{{1, 0, 1}}));
    for (const auto& f : reduced_forms(84)) {
        EXPECT_EQ(f.discriminant(), -84);
        EXPECT_LE(std::abs(f.b), f.a);
        EXPECT_LE(f.a, f.c);
    }
}

TEST(Hurwitz, InvalidDiscriminant) {
    EXPECT_THROW(hurwitz_H(0), InvalidDiscriminant);
    EXPECT_THROW(hurwitz_H(-3), InvalidDiscriminant);
}

TEST(Hurwitz, MatchesNonReducedOracle) {
    for (std::int64_t d = 1; d <= 60; ++d) {
        EXPECT_EQ(hurwitz_H(d), oracle::hurwitz_nonreduced(d)) << d;
    }
}

TEST(Hurwitz, VanishesOffResidues) {
    for (std::int64_t d = 1; d <= 200; ++d) {
        if (d % 4 == 1 || d % 4 == 2) {
            EXPECT_EQ(hurwitz_H(d), 0) << d;
        }
    }
}

TEST(Sigma0, DivisorCounts) {
    EXPECT_EQ(sigma0(1), 1);
    EXPECT_EQ(sigma0(6), 4);
    EXPECT_EQ(sigma0(12), 6);
    EXPECT_EQ(sigma0(49), 3);
    EXPECT_THROW(sigma0(0), std::invalid_argument);
}

TEST(Lattice, Admissibility) {
    EXPECT_TRUE(admissible(1, {1, 2, 2}));
    EXPECT_FALSE(admissible(0, {1, 2, 2}));   // parity of c1 + Σw
    EXPECT_FALSE(admissible(1, {2, 1, 2}));   // w2 odd
    EXPECT_FALSE(admissible(0, {1, 2, 3}));   // degenerate triangle
    EXPECT_FALSE(admissible(1, {0, 2, 3}));
    EXPECT_EQ(lattice_exponent(1, {1, 2, 2}, LatticeExponent::kDisplay), -6);
    EXPECT_EQ(lattice_exponent(1, {1, 2, 2}, LatticeExponent::kStrictPairs), r(-3, 2));
}

TEST(Lattice, LiteralEqualsSimplified) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const LatticeTriple w{oracle::uniform(rng, 1, 30), oracle::uniform(rng, 1, 30),
                              oracle::uniform(rng, 1, 30)};
        const std::int64_t c1 = oracle::uniform(rng, -5, 5);
        for (auto reading : {LatticeExponent::kDisplay, LatticeExponent::kStrictPairs}) {
            ASSERT_EQ(lattice_exponent_literal(c1, w, reading), lattice_exponent(c1, w, reading));
        }
    }
}

TEST(Lattice, ShellAndTripleLoopAgree) {
    for (std::int64_t c1 = -2; c1 <= 3; ++c1) {
        for (std::int64_t emin : {-8, -20}) {
            for (auto reading : {LatticeExponent::kDisplay, LatticeExponent::kStrictPairs}) {
                EXPECT_EQ(lattice_sum_C(c1, r(emin), reading),
                          lattice_sum_C_bruteforce(c1, r(emin), reading))
                    << c1 << " " << emin;
            }
        }
    }
}

TEST(Lattice, DisplayReadingLivesOnShells) {
    const QSeries s = lattice_sum_C(1, r(-20));
    for (const auto& [e, c] : s.terms()) {
        // (1 - s²)/4 with s odd.
        const std::int64_t s2 = 1 - e;
        std::int64_t root = 0;
        while (root * root < s2) {
            ++root;
        }
        EXPECT_EQ(root * root, s2);
        EXPECT_EQ(root % 2, 1);
    }
    EXPECT_EQ(s.coefficient_at(r(-6)), lattice_sum_C_bruteforce(1, r(-20)).coefficient_at(r(-6)));
}

TEST(Lattice, EmptyAboveMaximalExponent) {
    EXPECT_TRUE(lattice_sum_C(1, r(1, 2)).terms().empty());
    EXPECT_TRUE(lattice_sum_C(0, r(1)).terms().empty());
}

TEST(HurwitzSeries, OddAndEvenTerms) {
    const QSeries odd = hurwitz_series(1, r(-20));
    EXPECT_EQ(odd.unit_den(), 4);
    EXPECT_EQ(odd.coefficient_at(r(-7, 4)), 2);
    EXPECT_EQ(odd.coefficient_at(r(-15, 4)), 2 * hurwitz_H(15));
    const QSeries even = hurwitz_series(0, r(-20));
    EXPECT_EQ(even.coefficient_at(r(-1)), 0);
    EXPECT_EQ(even.coefficient_at(r(-3)), hurwitz_H(12) + 2 * hurwitz_H(3) - r(1));
    EXPECT_EQ(even.coefficient_at(r(-4)),
              hurwitz_H(16) + 2 * hurwitz_H(4) - r(3, 2) - Rational(sigma0(1)));
    EXPECT_TRUE(hurwitz_series(0, r(1, 2)).terms().empty());
}

TEST(P112, LowestTermsMatchLatticeSum) {
    const QSeries lattice = lattice_sum_C(1, r(-12));
    const QSeries rhs = p112_rhs(1, r(-12), 6);
    EXPECT_EQ(rhs.unit_den(), 12);
    const std::int64_t v = *lattice.valuation();
    EXPECT_EQ(rhs.coefficient_at(Rational(BigInt(v), BigInt(4))),
              lattice.coefficient(v));
}

TEST(P112, StableUnderLargerOrder) {
    const QSeries small = p112_rhs(0, r(-10), 4);
    const QSeries large = p112_rhs(0, r(-10), 9);
    EXPECT_TRUE(agree_on_common_window(small, large));
    EXPECT_GT(large.hi(), small.hi());
}

TEST(P112, WindowErrors) {
    EXPECT_THROW(p112_rhs(1, r(-10), -1), WindowInconsistent);
    EXPECT_THROW(p112_rhs(1, r(1), 5), WindowInconsistent);
}

TEST(P112, ReconciliationFindsStrictPairReading) {
    for (std::int64_t c1 = 0; c1 <= 3; ++c1) {
        const P112Reconciliation rec = reconcile_p112(c1, r(-20));
        ASSERT_EQ(rec.matches.size(), 1u) << rec.report;
        EXPECT_EQ(rec.matches[0].reading, LatticeExponent::kStrictPairs);
        EXPECT_EQ(rec.matches[0].offset, r(-c1 * c1, 4));
        EXPECT_GT(rec.matches[0].compared, 5);
    }
}

} // namespace
} // namespace vwstack
