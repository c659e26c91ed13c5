#include "pcorr/density.hpp"
#include "pcorr/serialize.hpp"

#include <gtest/gtest.h>

using namespace pcorr;

namespace {

std::uint64_t sum_sizes(const std::map<std::vector<std::int64_t>, PartitionStats>& parts) {
  std::uint64_t s = 0;
  for (const auto& [key, stats] : parts) s += stats.size;
  return s;
}

}  // namespace

TEST(RenderPercent, HalfUp) {
  EXPECT_EQ(render_percent(BigRat(9, 16)), "56.25");
  EXPECT_EQ(render_percent(BigRat(1, 3)), "33.33");
  EXPECT_EQ(render_percent(BigRat(2, 3)), "66.67");
  EXPECT_EQ(render_percent(BigRat(1, 8)), "12.50");
  EXPECT_EQ(render_percent(BigRat(1, 80000)), "0.00");
  EXPECT_EQ(render_percent(BigRat(1, 20000)), "0.01");  // exactly half rounds up
  EXPECT_EQ(render_percent(BigRat(1)), "100.00");
  EXPECT_EQ(render_percent(BigRat(0)), "0.00");
}

TEST(Density, BinaryTwoByTwo) {
  const auto row = enumerate_density(Prime(2), 1, 2);
  EXPECT_EQ(row.total, 16u);
  EXPECT_EQ(row.char_count, 9u);
  EXPECT_EQ(row.corr_count, 13u);
  EXPECT_EQ(row.det_filtered, 6u);
  ASSERT_EQ(row.partitions.size(), 1u);
  EXPECT_EQ(row.partitions.begin()->second, (PartitionStats{6, 2}));
  ASSERT_TRUE(row.min_char_fraction);
  EXPECT_EQ(*row.min_char_fraction, BigRat(1, 3));
}

TEST(Density, DetFilteredConvention) {
  const auto row = enumerate_density(Prime(2), 1, 2, {Convention::DetFiltered, 1, kDefaultBudget});
  EXPECT_EQ(row.total, 6u);
  EXPECT_EQ(render_percent(row.char_fraction), "33.33");
  EXPECT_EQ(parse_convention("det-filtered"), Convention::DetFiltered);
  EXPECT_THROW(parse_convention("most"), std::invalid_argument);
}

TEST(Density, SmallCells) {
  const auto r = enumerate_density(Prime(3), 1, 2);
  EXPECT_EQ(render_percent(r.char_fraction), "67.90");
  EXPECT_EQ(render_percent(r.corr_fraction), "90.12");
  EXPECT_EQ(render_percent(*r.min_char_fraction), "62.50");
  const auto one = enumerate_density(Prime(5), 1, 1);
  EXPECT_EQ(one.char_count, 5u);  // every 1x1 matrix is p-characterized
}

TEST(Density, PartitionsCoverTheirMatrices) {
  for (auto [p, m, n] : {std::tuple{2ul, 2u, 2u}, std::tuple{3ul, 1u, 2u}, std::tuple{2ul, 1u, 3u}}) {
    const auto row = enumerate_density(Prime(p), m, n);
    EXPECT_EQ(sum_sizes(row.partitions), row.det_filtered);
    EXPECT_EQ(sum_sizes(row.profile_classes), row.enumerated);
    for (const auto& [key, stats] : row.partitions) {
      EXPECT_EQ(key.size(), n);
      EXPECT_LT(std::accumulate(key.begin(), key.end(), std::int64_t{0}), static_cast<std::int64_t>(m));
      EXPECT_LE(stats.char_count, stats.size);
    }
    EXPECT_LE(row.char_count, row.corr_count);
  }
}

TEST(Density, ThreadCountDoesNotChangeCounts) {
  const auto a = enumerate_density(Prime(2), 2, 2, {Convention::All, 1, kDefaultBudget});
  for (unsigned threads : {2u, 3u, 7u}) {
    const auto b = enumerate_density(Prime(2), 2, 2, {Convention::All, threads, kDefaultBudget});
    EXPECT_EQ(a.char_count, b.char_count);
    EXPECT_EQ(a.corr_count, b.corr_count);
    EXPECT_EQ(a.partitions, b.partitions);
    EXPECT_EQ(a.profile_classes, b.profile_classes);
  }
}

TEST(Density, BudgetExceeded) {
  EXPECT_THROW(enumerate_density(Prime(2), 9, 3), BudgetExceeded);
  EXPECT_THROW(enumerate_density(Prime(2), 1, 2, {Convention::All, 1, BigInt(15)}), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_density(Prime(2), 1, 2, {Convention::All, 1, BigInt(16)}));
}

TEST(Density, CsvRow) {
  const auto row = enumerate_density(Prime(2), 1, 2);
  EXPECT_EQ(density_csv_header(), "p,m,n,pct_char,pct_corr,min_pct_char,total,char_count,corr_count");
  EXPECT_EQ(density_csv_row(row), "2,1,2,56.25,81.25,33.33,16,9,13");
}

TEST(GlCount, Examples) {
  const auto a = gl_count(Prime(2), 1, 2);
  EXPECT_EQ(a.gl_order, 6);
  EXPECT_EQ(a.ratio, BigRat(8, 3));
  EXPECT_TRUE(a.below_four);
  ASSERT_TRUE(a.exhaustive);
  EXPECT_EQ(*a.exhaustive, 6);
  EXPECT_EQ(gl_count(Prime(3), 1, 2).gl_order, 48);
  const auto c = gl_count(Prime(2), 2, 2);
  EXPECT_EQ(c.gl_order, 96);
  ASSERT_TRUE(c.exhaustive);
  EXPECT_EQ(*c.exhaustive, 96);
  EXPECT_FALSE(gl_count(Prime(11), 3, 4).exhaustive);
}

TEST(Orbit, Examples) {
  const auto a = orbit_stabilizer_check(Prime(2), 1, {0, 0});
  EXPECT_EQ(a.orbit_size, 6u);
  EXPECT_EQ(a.min_pairs, 6u);
  EXPECT_TRUE(a.passed());
  const auto b = orbit_stabilizer_check(Prime(3), 1, {0, 0});
  EXPECT_EQ(b.min_pairs, 48u);
  EXPECT_TRUE(b.passed());
  EXPECT_THROW(orbit_stabilizer_check(Prime(2), 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(orbit_stabilizer_check(Prime(2), 2, {0, 1}, BigInt(1000)), BudgetExceeded);
}

TEST(Proot, Examples) {
  const auto a = proot_count_check(Polynomial(1).add_term(1, {1}), Prime(3), 2);
  EXPECT_EQ(a.roots, 2u);
  EXPECT_EQ(a.bound, 2);
  EXPECT_TRUE(a.holds);
  const auto b = proot_count_check(Polynomial(2).add_term(1, {1, 1}).add_term(-1, {0, 0}), Prime(5), 1);
  EXPECT_EQ(b.roots, 4u);
  EXPECT_EQ(b.bound, 10);
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(proot_count_check(Polynomial(1).add_term(3, {1}), Prime(3), 1), std::invalid_argument);
}

TEST(Polynomial, Evaluation) {
  Polynomial g(2);
  g.add_term(2, {2, 0}).add_term(-1, {0, 1}).add_term(5, {0, 0});
  EXPECT_EQ(g.total_degree(), 2u);
  const std::uint64_t pt[] = {3, 4};
  EXPECT_EQ(g.evaluate_mod(pt, Prime(7)), (2 * 9 - 4 + 5) % 7);
  EXPECT_FALSE(g.vanishes_mod(Prime(7)));
  EXPECT_TRUE(Polynomial(1).add_term(7, {3}).vanishes_mod(Prime(7)));
}
