#include <gtest/gtest.h>

#include <random>

#include "vwstack/coeff_table.hpp"
#include "vwstack/oracles.hpp"

namespace vwstack {
namespace {

TEST(CoeffTable, JsonRoundTripRandom) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const QSeries s = oracle::random_series(rng, oracle::uniform(rng, 1, 24),
                                                oracle::uniform(rng, -10, 10),
                                                oracle::uniform(rng, 0, 12), false)
                              .scaled(make_rational(oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 9)));
        const CoeffTable t = to_table(s);
        const CoeffTable back = table_from_json(to_json(t));
        ASSERT_EQ(back.unit_den, t.unit_den);
        ASSERT_EQ(back.hi, t.hi);
        ASSERT_EQ(back.coeffs, t.coeffs);
        ASSERT_EQ(from_table(back), s);
    }
}

TEST(CoeffTable, ExactSeriesHasNullHi) {
    const QSeries s = QSeries::polynomial({1, 0, -3});
    const std::string json = to_json(to_table(s), -1);
    EXPECT_EQ(json,
              R"({"unit_den":1,"lo":0,"hi":null,"coeffs":[{"exp":0,"num":"1","den":"1"},)"
              R"({"exp":2,"num":"-3","den":"1"}]})");
    EXPECT_FALSE(table_from_json(json).hi.has_value());
}

TEST(CoeffTable, BigIntegersAreStrings) {
    const QSeries s = QSeries::monomial(Rational(pow(BigInt(10), 40)) / 7, 0, 1, 0);
    const std::string json = to_json(to_table(s), -1);
    EXPECT_NE(json.find("\"10000000000000000000000000000000000000000\""), std::string::npos);
    EXPECT_EQ(from_table(table_from_json(json)), s);
}

TEST(CoeffTable, CsvAndText) {
    QSeries s(4, -7, 1);
    s.set_coefficient(-7, make_rational(2, 1));
    s.set_coefficient(1, make_rational(-1, 3));
    const CoeffTable t = to_table(s);
    EXPECT_EQ(to_csv(t), "exp,exponent,num,den\n-7,-7/4,2,1\n1,1/4,-1,3\n");
    EXPECT_EQ(to_text(t), "q^(-7/4)  2\nq^(1/4)  -1/3\n+ O(q^(1/2))\n");
}

TEST(CoeffTable, RejectsBadInput) {
    EXPECT_ANY_THROW(table_from_json("{\"unit_den\":0,\"coeffs\":[]}"));
    EXPECT_ANY_THROW(table_from_json("not json"));
    EXPECT_ANY_THROW(table_from_json(
        R"({"unit_den":1,"coeffs":[{"exp":0,"num":"1","den":"0"}]})"));
}

TEST(CoeffTable, OutputIsDeterministic) {
    const QSeries s = QSeries::polynomial({3, 1, 4, 1, 5}, 6);
    EXPECT_EQ(to_json(to_table(s)), to_json(to_table(s)));
    EXPECT_EQ(to_json(to_table(s)), to_json(to_table(from_table(to_table(s)))));
}

} // namespace
} // namespace vwstack
