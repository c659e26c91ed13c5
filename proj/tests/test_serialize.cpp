#include "pcorr/classify.hpp"
#include "pcorr/matrix_io.hpp"
#include "pcorr/serialize.hpp"

#include <gtest/gtest.h>

using namespace pcorr;

TEST(Serialize, BigIntRoundTrip) {
  for (const char* s : {"0", "-17", "9223372036854775807", "-9223372036854775808",
                        "123456789012345678901234567890", "-99999999999999999999999"}) {
    const BigInt x(s);
    EXPECT_EQ(bigint_from_json(to_json(x)), x) << s;
  }
  EXPECT_TRUE(to_json(BigInt(5)).is_number_integer());
  EXPECT_TRUE(to_json(BigInt("123456789012345678901234567890")).is_string());
}

TEST(Serialize, ScalarsAndRationals) {
  EXPECT_EQ(to_json(Valuation::infinity()), "inf");
  EXPECT_EQ(to_json(Valuation(3)), 3);
  EXPECT_EQ(to_json(BigRat(4, 3)), "4/3");
  EXPECT_EQ(to_json(BigRat(2)), "2/1");
}

TEST(Serialize, MatrixRoundTripsThroughParser) {
  const IntMatrix a{{1, -2, 3}, {0, 0, 0}, {7, 8, -9}};
  EXPECT_EQ(parse_matrix(to_json(a).dump()), a);
}

TEST(Serialize, Report) {
  const IntMatrix a{{3, -1, 3}, {9, -10, 0}, {3, 0, 3}};
  const auto j = to_json(analyze(a, Prime(3)));
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["p_characterized"], true);
  EXPECT_EQ(j["p_correspondent"], true);
  EXPECT_EQ(j["charpoly"], Json::parse("[1, 4, -51, -27]"));
}
