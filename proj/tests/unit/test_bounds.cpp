#include "stabent/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stabent/codes.hpp"
#include "stabent/errors.hpp"
#include "stabent/measurement.hpp"

namespace stabent {
namespace {

using testing::entropy_profile;
using testing::load_fixture;
using testing::random_code;
using testing::stabilizer_vector;

std::vector<std::size_t> mask_subset(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t q = 0; q < n; ++q) {
    if ((mask >> q) & 1U) s.push_back(q);
  }
  return s;
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound_nonz(load_fixture("steane.txt")), 3U);
  EXPECT_EQ(upper_bound_nonz(gottesman(4)), 5U);
  EXPECT_EQ(upper_bound_nonz(parse_code("ZII\nIZI\nIIZ\n")), 0U);
  EXPECT_EQ(upper_bound_nonz(load_fixture("code_8_1_3.txt")), 7U);
}

TEST(GammaSet, CssIsZero) {
  const auto g = gamma_set(standard_form(load_fixture("steane.txt")));
  EXPECT_EQ(g.r, 3U);
  EXPECT_EQ(g.gamma, F2Matrix(3, 3));
}

TEST(GammaSet, GottesmanIsZero) {
  for (std::size_t m : {3, 4, 5}) {
    const auto g = gamma_set(standard_form(gottesman(m)));
    EXPECT_EQ(g.r, m + 1);
    EXPECT_EQ(g.gamma, F2Matrix(m + 1, m + 1)) << "m=" << m;
  }
}

TEST(GammaSet, SingleY) {
  const auto g = gamma_set(standard_form(parse_code("Y\n")));
  EXPECT_EQ(g.gamma, F2Matrix::from_strings({"1"}));
  EXPECT_EQ(g.gamma1, F2Matrix::from_strings({"0"}));
}

TEST(GammaSet, RandomCodesSymmetricWithClearDiagonal) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gamma_set(standard_form(random_code(2 + trial % 8, trial % 2, rng)));
    ASSERT_TRUE(g.gamma.is_symmetric());
    for (std::size_t i = 0; i < g.r; ++i) ASSERT_FALSE(g.gamma1.get(i, i));
  }
}

TEST(Bipartition, DualContainingPivotSubset) {
  const StabilizerCode steane = load_fixture("steane.txt");
  const BipartitionScorer scorer(steane);
  const auto rep = scorer.score(scorer.pivot_subset());
  EXPECT_EQ(rep.method, BipartitionMethod::PaperQRank);
  EXPECT_EQ(rep.rank, 3U);
  EXPECT_EQ(rep.m, 3U);
}

TEST(Bipartition, ToricTwoBestSubset) {
  const auto result = lower_bound(toric(2));
  EXPECT_EQ(result.value, 3U);
  EXPECT_EQ(result.witness.rank, 3U);
}

TEST(Bipartition, SingleQubitOnEntangledCode) {
  const StabilizerCode code = load_fixture("code_5_1_3.txt");
  const auto sf = standard_form(code);
  for (std::size_t q = 0; q < 5; ++q) {
    const std::vector<std::size_t> subset{q};
    const auto rep = bipartition_rank(sf, subset);
    EXPECT_EQ(rep.rank, 1U);
    EXPECT_NE(rep.method, BipartitionMethod::Skipped);
  }
}

TEST(Bipartition, DegenerateCuts) {
  const BipartitionScorer scorer(load_fixture("bell.txt"));
  EXPECT_EQ(scorer.score(std::vector<std::size_t>{}).rank, 0U);
  EXPECT_EQ(scorer.score(std::vector<std::size_t>{0, 1}).rank, 0U);
}

TEST(Bipartition, QRankMatchesDenseEntropy) {
  std::mt19937_64 rng(42);
  std::size_t q_scored = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const StabilizerCode code = random_code(n, trial % 3 == 0 ? 0 : 1, rng);
    const auto entropies = entropy_profile(stabilizer_vector(codeword_stabilizer(code)), n);
    const BipartitionScorer scorer(code, {.use_oracle = false});
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const auto rep = scorer.score(mask_subset(mask, n));
      if (rep.method != BipartitionMethod::PaperQRank) continue;
      ++q_scored;
      ASSERT_NEAR(static_cast<double>(rep.rank), entropies[mask], 1e-9) << format_code(code) << " mask " << mask;
      ASSERT_LE(rep.rank, std::min(rep.m, n - rep.m));
    }
  }
  EXPECT_GT(q_scored, 100U);
}

TEST(Bipartition, OracleFallbackMatchesEntropy) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const StabilizerCode code = random_code(n, 1, rng);
    const auto entropies = entropy_profile(stabilizer_vector(codeword_stabilizer(code)), n);
    const BipartitionScorer scorer(code);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const auto rep = scorer.score(mask_subset(mask, n));
      ASSERT_NE(rep.method, BipartitionMethod::Skipped);
      ASSERT_NEAR(static_cast<double>(rep.rank), entropies[mask], 1e-9);
    }
  }
}

TEST(LowerBound, PaperExamples) {
  EXPECT_EQ(lower_bound(gottesman(3)).value, 4U);
  EXPECT_EQ(lower_bound(load_fixture("code_8_1_3.txt")).value, 4U);
}

TEST(LowerBound, ToricThreeWitnessAndExhaustive) {
  const StabilizerCode code = toric(3);
  const auto witness = lower_bound(code, {.strategy = LowerBoundStrategy::Witness});
  EXPECT_EQ(witness.value, 7U);
  // Searching every cut finds a better one than the identity-block side.
  const auto exhaustive = lower_bound(code);
  EXPECT_EQ(exhaustive.value, 8U);
  // Independent check of the winning cut through the stabilizer rank formula.
  const auto state = CodewordStabilizerState::from_code(code);
  EXPECT_EQ(cut_entropy(state, exhaustive.witness.subset), 8U);
  EXPECT_EQ(cut_entropy(state, witness.witness.subset), 7U);
}

TEST(LowerBound, StrategiesAreOrdered) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const StabilizerCode code = random_code(n, trial % 2, rng);
    const auto exhaustive = lower_bound(code, {.threads = 1});
    const auto greedy = lower_bound(code, {.strategy = LowerBoundStrategy::Greedy});
    const auto random =
        lower_bound(code, {.strategy = LowerBoundStrategy::Random, .samples = 50, .seed = 7});
    const auto witness = lower_bound(code, {.strategy = LowerBoundStrategy::Witness});
    ASSERT_GE(exhaustive.value, greedy.value);
    ASSERT_GE(greedy.value, witness.value);
    ASSERT_GE(exhaustive.value, random.value);
    ASSERT_LE(exhaustive.value, n / 2);
    ASSERT_EQ(exhaustive.witness.rank, exhaustive.value);
  }
}

TEST(LowerBound, ExhaustiveIsDeterministicAcrossThreads) {
  const StabilizerCode code = load_fixture("code_8_1_3.txt");
  const auto one = lower_bound(code, {.threads = 1});
  const auto four = lower_bound(code, {.threads = 4});
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(one.witness.subset, four.witness.subset);
}

TEST(LowerBound, RandomIsSeeded) {
  const StabilizerCode code = toric(3);
  const LowerBoundOptions opts{.strategy = LowerBoundStrategy::Random, .samples = 200, .seed = 99};
  const auto a = lower_bound(code, opts);
  const auto b = lower_bound(code, opts);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness.subset, b.witness.subset);
}

TEST(LowerBound, ExhaustiveRefusesLargeCodes) {
  const StabilizerCode code = gottesman(5);
  EXPECT_THROW(lower_bound(code), ResourceLimitError);
}

TEST(Bounds, LowerNeverExceedsUpper) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const StabilizerCode code = random_code(n, trial % std::min<std::size_t>(3, n), rng);
    const auto lower = lower_bound(code, {.scorer = {.use_oracle = false}, .threads = 1});
    ASSERT_LE(lower.value, upper_bound_nonz(code)) << format_code(code);
  }
}

TEST(Bounds, DualContainingCssBoundsMeet) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const std::size_t l = 1 + trial % (n / 2);
    const CssSpec spec = testing::random_dual_containing_spec(n, l, rng);
    const StabilizerCode code = css(spec);
    const double expected = family_expected(family::DualCss{code.n, code.k}).value;
    EXPECT_EQ(static_cast<double>(upper_bound_nonz(code)), expected);
    EXPECT_EQ(static_cast<double>(lower_bound(code).value), expected);
  }
}

TEST(Family, ClosedForms) {
  EXPECT_EQ(family_expected(family::DualCss{7, 1}).value, 3.0);
  EXPECT_EQ(family_expected(family::Gottesman{3}).value, 4.0);
  EXPECT_EQ(family_expected(family::Gottesman{5}).value, 6.0);
  EXPECT_EQ(family_expected(family::EightM{16}).value, 5.0);
  const auto pasted = family_expected(family::Pasted{13});
  EXPECT_EQ(pasted.value, 4.0);
  ASSERT_TRUE(pasted.alternate);
  EXPECT_EQ(*pasted.alternate, 5.0);
  EXPECT_THROW(family_expected(family::Gottesman{2}), std::invalid_argument);
  EXPECT_THROW(family_expected(family::EightM{12}), std::invalid_argument);
  EXPECT_THROW(family_expected(family::Pasted{14}), std::invalid_argument);
  EXPECT_THROW(family_expected(family::DualCss{7, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace stabent
