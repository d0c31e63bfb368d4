#include <gtest/gtest.h>

#include <random>

#include "vwstack/chern_geom.hpp"
#include "vwstack/errors.hpp"
#include "vwstack/oracles.hpp"

namespace vwstack {
namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

TEST(Quintic, Invariants) {
    EXPECT_EQ(quintic_invariants(5, 55), (QuinticInvariants{6, 4, 10}));
    EXPECT_EQ(quintic_invariants(9, 27), (QuinticInvariants{10, 2, 12}));
    EXPECT_EQ(quintic_invariants(0, 24), (QuinticInvariants{1, 1, 2}));
    EXPECT_THROW(quintic_invariants(1, 1), NotIntegral);
    EXPECT_THROW(quintic_invariants(5, 54), NotIntegral);
}

TEST(IntersectionForm, Validation) {
    EXPECT_THROW(IntersectionForm({{r(1), r(2)}, {r(3), r(1)}}), std::invalid_argument);
    EXPECT_THROW(IntersectionForm({{r(1), r(2)}}), std::invalid_argument);
    const IntersectionForm h({{r(0), r(1)}, {r(1), r(0)}});
    EXPECT_EQ(h.dot({r(1), r(1)}, {r(1), r(1)}), 2);
    EXPECT_THROW(h.dot({r(1)}, {r(1), r(1)}), std::invalid_argument);
}

TEST(Twist, Examples) {
    // O ⊕ O twisted by a (-1)-curve class on a form with E² = -1.
    const IntersectionForm form({{r(-1)}});
    const Rank2ChernPair trivial{{r(0)}, r(0)};
    EXPECT_EQ(twist_chern_rank2(trivial, {r(1)}, form), (Rank2ChernPair{{r(2)}, r(-1)}));
    const Rank2ChernPair e{{r(1)}, r(3)};
    EXPECT_EQ(twist_chern_rank2(e, {r(2)}, form), (Rank2ChernPair{{r(5)}, r(3 - 2 - 4)}));
}

TEST(Twist, IsAGroupAction) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Rational a(oracle::uniform(rng, -4, 4)), b(oracle::uniform(rng, -4, 4)),
            c(oracle::uniform(rng, -4, 4));
        const IntersectionForm form({{a, b}, {b, c}});
        const Rank2ChernPair e{{Rational(oracle::uniform(rng, -3, 3)), Rational(oracle::uniform(rng, -3, 3))},
                               Rational(oracle::uniform(rng, -9, 9))};
        const DivisorClass l{Rational(oracle::uniform(rng, -3, 3)), Rational(oracle::uniform(rng, -3, 3))};
        const DivisorClass m{Rational(oracle::uniform(rng, -3, 3)), Rational(oracle::uniform(rng, -3, 3))};
        EXPECT_EQ(twist_chern_rank2(twist_chern_rank2(e, l, form), Rational(-1) * l, form), e);
        EXPECT_EQ(twist_chern_rank2(twist_chern_rank2(e, l, form), m, form),
                  twist_chern_rank2(e, l + m, form));
        // Discriminant 4c2 - c1² is twist invariant.
        const Rank2ChernPair t = twist_chern_rank2(e, l, form);
        EXPECT_EQ(4 * t.c2 - form.dot(t.c1, t.c1), 4 * e.c2 - form.dot(e.c1, e.c1));
    }
}

TEST(Cohomology, InverseIsInverse) {
    const IntersectionForm form({{r(2), r(1)}, {r(1), r(-3)}});
    const SurfaceCohomologyClass a{r(3), {r(1), r(-2)}, r(7, 2)};
    const SurfaceCohomologyClass one = multiply(a, inverse(a, form), form);
    EXPECT_EQ(one.deg0, 1);
    EXPECT_EQ(one.deg2, (DivisorClass{r(0), r(0)}));
    EXPECT_EQ(one.deg4, 0);
    EXPECT_THROW(inverse(SurfaceCohomologyClass{r(0), {r(1), r(0)}, r(0)}, form),
                 ZeroLeadingCoefficient);
}

TEST(Vertical, ClosedPolynomial) {
    EXPECT_EQ(vertical_degree2_integral({0, 0, 5, 56, 5, 2}), r(73, 2));
    EXPECT_EQ(vertical_degree2_integral({}), 0);
    EXPECT_EQ(vertical_degree2_integral({0, 0, 1, 0, 0, 1}), -2);
}

TEST(Vertical, ClosedPolynomialIsLinear) {
    // Finite differences in each input at dim 0.
    const SurfaceChernData base{3, 11, 4, 20, 6, 0};
    const Rational v = vertical_degree2_integral(base);
    SurfaceChernData d = base;
    ++d.res_c2;
    EXPECT_EQ(vertical_degree2_integral(d) - v, 1);
    d = base;
    ++d.mixed;
    EXPECT_EQ(vertical_degree2_integral(d) - v, 14);
    d = base;
    ++d.res_c1_sq;
    EXPECT_EQ(vertical_degree2_integral(d) - v, 4);
    d = base;
    ++d.c1_sq;
    ++d.c2_top;
    EXPECT_EQ(vertical_degree2_integral(d), v);
}

TEST(Vertical, RatioExpansion) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        SurfaceChernData d;
        d.c1_sq = oracle::uniform(rng, -10, 10);
        d.res_c1_sq = oracle::uniform(rng, -10, 10);
        d.res_c2 = oracle::uniform(rng, -60, 60);
        d.mixed = oracle::uniform(rng, -10, 10);
        d.dim_param = oracle::uniform(rng, -3, 3);
        EXPECT_EQ(vertical_degree2_via_ratio(d),
                  pow(r(-2), -d.dim_param) * Rational(d.res_c2 + 6 * d.mixed));
    }
    EXPECT_EQ(vertical_degree2_via_ratio({0, 0, 5, 56, 5, 2}), r(43, 2));
    EXPECT_FALSE(vertical_degree2_routes_agree({0, 0, 5, 56, 5, 2}));
    EXPECT_TRUE(vertical_degree2_routes_agree({}));
}

TEST(Vertical, AdePointContribution) { EXPECT_EQ(ade_point_contribution(), 1); }

} // namespace
} // namespace vwstack
