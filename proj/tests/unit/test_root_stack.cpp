#include <gtest/gtest.h>

#include "vwstack/errors.hpp"
#include "vwstack/root_stack.hpp"

namespace vwstack {
namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

QSeries from_list(std::initializer_list<Rational> values) {
    QSeries s(1, 0, static_cast<std::int64_t>(values.size()) - 1);
    std::int64_t n = 0;
    for (const auto& v : values) {
        s.set_coefficient(n++, v);
    }
    return s;
}

TEST(RootStack, DirectSeriesGenusSix) {
    const QSeries direct = monopole_series_direct({6, 6, 1, {}});
    EXPECT_EQ(direct, from_list({r(-1, 2048), r(-5, 1024), r(-5, 2048), r(-5, 256), r(15, 1024),
                                 r(117, 512), r(-3305, 1024)}));
}

TEST(RootStack, ClosedFormUnnormalizedGenusSix) {
    EXPECT_EQ(closed_form(6, 6, {}), from_list({r(1, 32), r(-5, 16), r(5, 32), r(-5, 4),
                                                r(-15, 16), r(117, 8), r(3305, 16)}));
}

TEST(RootStack, ConstantTermIsPowerOfMinusTwo) {
    // Only the (ω-2)^{1-2g} factor survives at n = 0.
    for (std::int64_t g = 2; g <= 8; ++g) {
        EXPECT_EQ(monopole_series_direct({g, 0, 1, {}}).coefficient(0), pow(Rational(-2), 1 - 2 * g));
    }
}

TEST(RootStack, NormalizationProbe) {
    for (std::int64_t g = 2; g <= 8; ++g) {
        const NormalizationRecord rec = sign_normalization_probe(g);
        EXPECT_EQ(rec.global_constant, -pow(Rational(2), -g)) << g;
        EXPECT_EQ(rec.per_n_sign, PerNSign::kAlternating) << g;
        EXPECT_EQ(monopole_series_direct({g, 14, 1, {}}), closed_form(g, 14, rec)) << g;
    }
    EXPECT_EQ(describe(sign_normalization_probe(6)),
              "global_constant = -1/64, per_n_sign = (-1)^n");
}

TEST(RootStack, LocalizationIntegrandReducesToMonopoleIntegrand) {
    for (std::int64_t g = 2; g <= 6; ++g) {
        const QSeries loc = localization_series({g, 9, 1, {}});
        const QSeries direct = monopole_series_direct({g, 9, 1, {}});
        EXPECT_EQ(loc, direct.alternated().scaled(pow(Rational(-2), 2 * g - 1))) << g;
    }
}

TEST(RootStack, ThreeRoutesAgree) {
    for (std::int64_t g = 2; g <= 7; ++g) {
        const std::int64_t n = 10;
        const QSeries direct = monopole_series_direct({g, n, 1, {}});
        EXPECT_EQ(direct, bi_diagonal(bivariate_rational(g, n, n))) << g;
        EXPECT_EQ(direct, diagonal_via_residue(g, n)) << g;
    }
}

TEST(RootStack, GerbeOrderDoesNotMatter) {
    const QSeries base = monopole_series_direct({4, 7, 1, {}});
    for (std::int64_t r = 2; r <= 4; ++r) {
        EXPECT_EQ(monopole_series_direct({4, 7, r, {}}), base);
        EXPECT_EQ(localization_series({4, 7, r, {}}), localization_series({4, 7, 1, {}}));
    }
}

TEST(RootStack, ResidueRoots) {
    const ResidueRoots roots = residue_roots(10);
    EXPECT_EQ(roots.x0.valuation(), 1);
    EXPECT_EQ(roots.x0.coefficient(1), -2);
    const QSeries one = QSeries::constant(Rational(1), 10);
    EXPECT_EQ(roots.x0 + roots.x1, one);
    // (1+q) x0 x1 = -2q.
    EXPECT_EQ(QSeries::polynomial({1, 1}, 10) * roots.x0 * roots.x1,
              QSeries::monomial(Rational(-2), 1, 1, 10));
    EXPECT_EQ(roots.x0 - roots.x1, -roots.discriminant_root);
}

TEST(RootStack, ValidatesInputs) {
    EXPECT_THROW(monopole_series_direct({1, 4, 1, {}}), std::invalid_argument);
    EXPECT_THROW(monopole_series_direct({6, -1, 1, {}}), std::invalid_argument);
    EXPECT_THROW(monopole_series_direct({6, 4, 0, {}}), std::invalid_argument);
    EXPECT_THROW(monopole_integrand(-1, 2), std::invalid_argument);
    EXPECT_THROW(residue_roots(-1), std::invalid_argument);
}

TEST(RootStack, ClosedFormSignConvention) {
    const NormalizationRecord constant{r(3), PerNSign::kConstant};
    const NormalizationRecord alternating{r(3), PerNSign::kAlternating};
    const QSeries base = closed_form(3, 6, {});
    EXPECT_EQ(closed_form(3, 6, constant), base.scaled(r(3)));
    EXPECT_EQ(closed_form(3, 6, alternating), base.scaled(r(3)).alternated());
}

} // namespace
} // namespace vwstack
