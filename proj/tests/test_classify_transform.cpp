#include "pcorr/classify.hpp"
#include "pcorr/matrix_io.hpp"
#include "pcorr/transform.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace pcorr;

namespace {

using Profile = std::vector<std::int64_t>;

IntMatrix example(const char* name) { return read_matrix(fixtures::data_path(name)); }

}  // namespace

TEST(Classify, Example1) {
  const auto rep = analyze(example("example1.txt"), Prime(3));
  EXPECT_EQ(rep.invariant_factors, (std::vector<BigInt>{1, 3, 9}));
  EXPECT_EQ(rep.eig_vals.values, (std::vector<BigRat>{0, 1, 2}));
  EXPECT_TRUE(rep.p_characterized);
  EXPECT_TRUE(rep.p_correspondent);
  EXPECT_FALSE(rep.degenerate);
}

TEST(Classify, Example2) {
  const auto rep = analyze(example("example2.txt"), Prime(2));
  EXPECT_EQ(rep.profile.e, (Profile{0, 1, 1, 2}));
  EXPECT_EQ(rep.eig_vals.values, (std::vector<BigRat>{0, BigRat(4, 3), BigRat(4, 3), BigRat(4, 3)}));
  EXPECT_FALSE(rep.p_characterized);
  EXPECT_FALSE(rep.p_correspondent);
}

TEST(Classify, Example3) {
  const auto rep = analyze(example("example3.txt"), Prime(3));
  EXPECT_TRUE(rep.p_correspondent);
  EXPECT_FALSE(rep.p_characterized);
  ASSERT_TRUE(rep.polygon);
  const std::vector<NewtonPoint> vertices{{0, 0}, {1, 0}, {3, 2}, {4, 4}};
  EXPECT_EQ(rep.polygon->vertices, vertices);
}

TEST(Classify, SevenAdic) {
  const auto rep = analyze(example("sevenadic.txt"), Prime(7));
  EXPECT_EQ(rep.profile.e, (Profile{0, 1, 1, 2}));
  EXPECT_EQ(rep.eig_vals.values, (std::vector<BigRat>{1, 1, 1, 1}));
  EXPECT_FALSE(rep.p_correspondent);
}

TEST(Classify, DegenerateAndZero) {
  const auto nil = analyze({{0, 1}, {0, 0}}, Prime(2));
  EXPECT_EQ(nil.rank, 1u);
  EXPECT_TRUE(nil.degenerate);
  EXPECT_FALSE(nil.p_correspondent);
  EXPECT_FALSE(nil.p_characterized);
  EXPECT_FALSE(nil.polygon);

  const auto zero = analyze(IntMatrix(3), Prime(5));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_TRUE(zero.p_characterized);
  EXPECT_TRUE(zero.p_correspondent);
  EXPECT_FALSE(zero.degenerate);
}

TEST(Classify, SingularButNotDegenerate) {
  // rank 1 with eigenvalues 0 and 4
  const auto r1 = analyze({{2, 2}, {2, 2}}, Prime(2));
  EXPECT_EQ(r1.rank, 1u);
  EXPECT_FALSE(r1.degenerate);
  EXPECT_EQ(r1.eig_vals.values, (std::vector<BigRat>{2}));
  EXPECT_EQ(r1.profile.e, (Profile{1}));
  EXPECT_FALSE(r1.p_correspondent);
}

TEST(Classify, VerdictsCarryEvidence) {
  const auto v = is_p_correspondent(example("example1.txt"), Prime(3));
  EXPECT_TRUE(v);
  EXPECT_EQ(v.evidence.rank, 3u);
  EXPECT_FALSE(is_p_characterized(example("example3.txt"), Prime(3)));
}

TEST(Classify, DiagonalMatricesAreCorrespondent) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int t = 0; t < 300; ++t) {
    std::vector<BigInt> diag(1 + t % 5);
    for (auto& x : diag) x = d(rng);
    for (unsigned long pv : {2ul, 3ul, 5ul}) {
      EXPECT_TRUE(analyze(IntMatrix::diagonal(diag), Prime(pv)).p_correspondent);
    }
  }
}

TEST(Classify, CharacterizedImpliesCorrespondent) {
  // analyze() throws logic_error if this ever fails; count both outcomes
  std::mt19937_64 rng(31337);
  int characterized = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto a = fixtures::random_matrix(rng, 1 + t % 4, -30, 30);
    const auto rep = analyze(a, Prime(2 + t % 2));
    if (rep.p_characterized) {
      ++characterized;
      EXPECT_TRUE(rep.p_correspondent);
    }
  }
  EXPECT_GT(characterized, 100);
}

TEST(Classify, ProfileInvariantUnderUnimodularEquivalence) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto a = fixtures::random_matrix(rng, n, -40, 40);
    const auto b = fixtures::random_unimodular(rng, n) * a * fixtures::random_unimodular(rng, n);
    EXPECT_EQ(analyze(a, Prime(2)).profile, analyze(b, Prime(2)).profile);
  }
}

TEST(Transform, SevenAdicPrintedPair) {
  const auto a = example("sevenadic.txt");
  const auto u = fixtures::seven_adic_u();
  const auto v = fixtures::seven_adic_v();
  EXPECT_EQ(det_mod(u, Prime(7)), 6u);
  EXPECT_EQ(det_mod(v, Prime(7)), 6u);
  const IntMatrix expected{{-87785, 89700, -758134, -4630434},
                           {-4089, 2813, -35060, -213813},
                           {-12105, 11261, -104336, -636989},
                           {-17618, 12965, -151217, -922413}};
  EXPECT_EQ(u * a * v, expected);
  const auto rep = analyze(expected, Prime(7));
  EXPECT_EQ(rep.invariant_factors, (std::vector<BigInt>{1, 7, 7, BigInt(1024 * 49 * 17)}));
  EXPECT_EQ(rep.profile.e, (Profile{0, 1, 1, 2}));
  EXPECT_EQ(rep.eig_vals.values, (std::vector<BigRat>{0, 1, 1, 2}));
  EXPECT_TRUE(rep.p_correspondent);

  std::optional<ClassificationReport> last;
  const auto hit = try_candidate(a, Prime(7), u, v, 63, &last);
  ASSERT_TRUE(last);
  EXPECT_TRUE(last->p_correspondent);
  EXPECT_EQ(hit.has_value(), last->p_characterized);
}

TEST(Transform, RejectsSingularCandidate) {
  const auto a = example("example1.txt");
  const IntMatrix u{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  EXPECT_FALSE(try_candidate(a, Prime(3), u, IntMatrix::identity(3), 3));
}

TEST(Transform, SmithEquivalent) {
  for (const char* name : {"example1.txt", "example2.txt", "example3.txt", "sevenadic.txt"}) {
    const auto a = example(name);
    const auto se = smith_equivalent(a);
    EXPECT_EQ(se.left * a * se.right, se.smith);
    EXPECT_EQ(abs(det(se.left)), 1);
    EXPECT_EQ(abs(det(se.right)), 1);
    for (unsigned long pv : {2ul, 3ul, 7ul}) {
      EXPECT_TRUE(analyze(se.smith, Prime(pv)).p_correspondent);
    }
  }
}

TEST(Transform, SampleIsDeterministicAndValid) {
  const auto a = example("sevenadic.txt");
  const auto s1 = sample_correspondent(a, Prime(7), 7, kDefaultMaxAttempts, 42);
  const auto s2 = sample_correspondent(a, Prime(7), 7, kDefaultMaxAttempts, 42);
  EXPECT_EQ(s1.left, s2.left);
  EXPECT_EQ(s1.right, s2.right);
  EXPECT_EQ(s1.attempts, s2.attempts);
  EXPECT_EQ(s1.result, s1.left * a * s1.right);
  EXPECT_NE(det_mod(s1.left, Prime(7)), 0u);
  EXPECT_NE(det_mod(s1.right, Prime(7)), 0u);
  EXPECT_TRUE(s1.report.p_characterized);
  EXPECT_TRUE(s1.report.p_correspondent);
  EXPECT_EQ(s1.report.profile, local_profile(a, Prime(7)));
  for (const auto& e : s1.left.entries()) EXPECT_LT(e, 7);
}

TEST(Transform, BoundMustBeMultipleOfP) {
  const auto a = example("example1.txt");
  EXPECT_THROW(sample_correspondent(a, Prime(3), 4, 10, 1), std::invalid_argument);
  EXPECT_THROW(sample_correspondent(a, Prime(3), 0, 10, 1), std::invalid_argument);
}

TEST(Transform, ExhaustionReportsLastCandidate) {
  // a single attempt at p = 2 fails for some seed; the error keeps its report
  const IntMatrix a{{0, 1}, {0, 0}};
  int exhausted = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    try {
      sample_correspondent(a, Prime(2), 2, 1, seed);
    } catch (const AttemptsExhausted& e) {
      ++exhausted;
      EXPECT_EQ(e.attempts(), 1u);
      if (e.last_report()) EXPECT_FALSE(e.last_report()->p_characterized);
    }
  }
  EXPECT_GT(exhausted, 0);
}

TEST(RemStability, TwoByTwoExample) {
  const auto rep = verify_rem_stability({{9, 2}, {32, 4}}, Prime(2), 3);
  EXPECT_EQ(rep.reduced, (IntMatrix{{1, 2}, {0, 4}}));
  EXPECT_TRUE(rep.a_characterized);
  EXPECT_TRUE(rep.reduced_characterized);
  EXPECT_TRUE(rep.passed());
}

TEST(RemStability, Examples) {
  EXPECT_TRUE(verify_rem_stability(example("example3.txt"), Prime(3), 5).passed());
  EXPECT_TRUE(verify_rem_stability(IntMatrix::identity(3), Prime(5), 1).passed());
  EXPECT_THROW(verify_rem_stability(example("example1.txt"), Prime(3), 3), PreconditionViolated);
  EXPECT_THROW(verify_rem_stability({{1, 1}, {1, 1}}, Prime(3), 3), PreconditionViolated);
}

TEST(RemStability, RandomNonsingular) {
  std::mt19937_64 rng(2024);
  int done = 0;
  for (int t = 0; done < 300; ++t) {
    const auto a = fixtures::random_matrix(rng, 1 + t % 4, -50, 50);
    const BigInt d = det(a);
    if (d == 0) continue;
    const Prime p(t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 5));
    const auto m = static_cast<unsigned long>(val_p_finite(d, p) + 1);
    EXPECT_TRUE(verify_rem_stability(a, p, m).passed()) << to_string(a);
    ++done;
  }
}
