#include "pcorr/charpoly.hpp"
#include "pcorr/newton.hpp"
#include "pcorr/smith.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace pcorr;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const IntMatrix kExample2{{37, 192, 180, 369},
                          {55, 268, 198, 531},
                          {163, 758, 442, 1539},
                          {198, 908, 486, 1858}};
const IntMatrix kExample3{{-20, -2, 81, -388},
                          {18, -6, -84, 375},
                          {7, 34, 3, 41},
                          {13004, -11695, -64944, 289315}};

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly({{3, -1, 3}, {9, -10, 0}, {3, 0, 3}}).coeffs, ints({4, -51, -27}));
  EXPECT_EQ(char_poly(kExample2).coeffs, ints({-2605, 39504, 40952, 16}));
  EXPECT_EQ(char_poly(kExample3).coeffs, ints({-289292, 5442003, -29624166, 81}));
  EXPECT_EQ(char_poly({{5}}).coeffs, ints({-5}));
  EXPECT_EQ(char_poly({{0, 1}, {0, 0}}).coeffs, ints({0, 0}));
}

TEST(CharPoly, TraceAndDeterminant) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto a = fixtures::random_matrix(rng, n, -100, 100);
    const auto f = char_poly(a);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += a(i, i);
    EXPECT_EQ(f.f(1), -tr);
    EXPECT_EQ(f.f(n), n % 2 ? BigInt(-det(a)) : det(a));
  }
}

TEST(CharPoly, MatchesMinorOracle) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int t = 0; t < 1000; ++t) {
    const auto a = fixtures::random_matrix(rng, dim(rng), -100, 100);
    ASSERT_EQ(char_poly(a), char_poly_minor_oracle(a)) << to_string(a);
  }
  EXPECT_THROW(char_poly_minor_oracle(IntMatrix(6)), UnsupportedSize);
}

TEST(CharPoly, BoundsFromDeterminantalDivisors) {
  // f_i = 0 beyond the rank and v_p(f_i) >= v_p(Delta_i) up to it
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 3;
    auto a = fixtures::random_matrix(rng, n, -6, 6);
    if (t % 2) {
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 2 * a(0, j);
    }
    const auto s = smith_form(a);
    const auto f = char_poly(a);
    for (std::size_t i = s.rank() + 1; i <= n; ++i) EXPECT_EQ(f.f(i), 0);
    for (std::size_t i = 1; i <= s.rank(); ++i) {
      for (unsigned long pv : {2ul, 3ul}) {
        EXPECT_GE(val_p(f.f(i), Prime(pv)), val_p(s.dets[i - 1], Prime(pv)));
      }
    }
  }
}

TEST(CharPoly, CompanionRoundTrip) {
  const CharPoly f{ints({3, 0, -7, 12})};
  EXPECT_EQ(char_poly(companion(f)), f);
}

TEST(Newton, Example3Polygon) {
  const auto np = newton_polygon(char_poly(kExample3), Prime(3));
  const std::vector<NewtonPoint> vertices{{0, 0}, {1, 0}, {3, 2}, {4, 4}};
  EXPECT_EQ(np.vertices, vertices);
  const std::vector<NewtonSegment> segs{{BigRat(0), 1}, {BigRat(1), 2}, {BigRat(2), 1}};
  EXPECT_EQ(np.segments, segs);
}

TEST(Newton, Example2Polygon) {
  const auto np = newton_polygon(char_poly(kExample2), Prime(2));
  const std::vector<NewtonSegment> segs{{BigRat(0), 1}, {BigRat(4, 3), 3}};
  EXPECT_EQ(np.segments, segs);
  const auto ev = eigenvalue_valuations(kExample2, Prime(2));
  EXPECT_EQ(ev.values, (std::vector<BigRat>{0, BigRat(4, 3), BigRat(4, 3), BigRat(4, 3)}));
  EXPECT_EQ(ev.zero_count, 0u);
}

TEST(Newton, ZeroEigenvalues) {
  // x^3 - 4x^2: eigenvalues 0, 0, 4
  const auto ev = eigenvalue_valuations(CharPoly{ints({-4, 0, 0})}, Prime(2));
  EXPECT_EQ(ev.values, (std::vector<BigRat>{2}));
  EXPECT_EQ(ev.zero_count, 2u);
  EXPECT_THROW(newton_polygon(CharPoly{ints({0, 0})}, Prime(2)), EmptyPolygon);
  const auto nil = eigenvalue_valuations(IntMatrix{{0, 1}, {0, 0}}, Prime(2));
  EXPECT_TRUE(nil.values.empty());
  EXPECT_EQ(nil.zero_count, 2u);
}

TEST(Newton, HullProperties) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> c(-2000, 2000);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    CharPoly f{std::vector<BigInt>(n)};
    for (auto& x : f.coeffs) x = c(rng);
    if (f.last_nonzero() == 0) continue;
    const Prime p(t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 5));
    const auto np = newton_polygon(f, p);
    // slopes strictly increase, lengths cover [0, r'], sum of slope*length
    // is the height of the last vertex
    BigRat height = 0;
    std::int64_t width = 0;
    for (std::size_t k = 0; k < np.segments.size(); ++k) {
      if (k) EXPECT_LT(np.segments[k - 1].slope, np.segments[k].slope);
      height += np.segments[k].slope * np.segments[k].length;
      width += np.segments[k].length;
    }
    EXPECT_EQ(width, static_cast<std::int64_t>(f.last_nonzero()));
    EXPECT_EQ(height, BigRat(np.vertices.back().y));
    // every point lies on or above the hull
    for (const auto& pt : np.points) {
      for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k];
        const auto& b = np.vertices[k + 1];
        if (pt.x < a.x || pt.x > b.x) continue;
        // (b - a) x (pt - a) >= 0
        EXPECT_GE((b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x), 0);
      }
    }
    const auto ev = eigenvalue_valuations(f, p);
    EXPECT_EQ(ev.values.size() + ev.zero_count, n);
    EXPECT_TRUE(std::is_sorted(ev.values.begin(), ev.values.end()));
  }
}
