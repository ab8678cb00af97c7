#include "stabent/iteration.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "stabent/bounds.hpp"
#include "stabent/errors.hpp"

namespace stabent {
namespace {

using testing::load_fixture;
using testing::random_code;

ProductStateParams random_params(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ProductStateParams p;
  for (std::size_t j = 0; j < n; ++j) {
    p.x.emplace_back(g(rng), g(rng));
    p.y.emplace_back(g(rng), g(rng));
  }
  p.normalize();
  return p;
}

TEST(Overlap, BellExamples) {
  const StabilizerCode bell = load_fixture("bell.txt");
  const Amplitude f = overlap_f(bell, ProductStateParams::basis_state(BitVec(2)));
  EXPECT_NEAR(std::abs(f - Amplitude(1.0 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(overlap_f(bell, ProductStateParams::basis_state(BitVec::from_string("10")))), 0.0, 1e-15);
}

TEST(Overlap, ZeroOutsideSupport) {
  const StabilizerCode code = load_fixture("code_5_1_3.txt");
  const DenseState psi = build_codeword(code);
  for (std::uint64_t b = 0; b < 32; ++b) {
    const Amplitude f = overlap_f(code, ProductStateParams::basis_state(BitVec::from_u64(b, 5)));
    EXPECT_NEAR(std::abs(f), std::abs(psi.amplitudes[b]), 1e-15);
  }
}

TEST(Overlap, MatchesDenseInnerProduct) {
  std::mt19937_64 rng(81);
  std::vector<StabilizerCode> codes{load_fixture("code_5_1_3.txt"), load_fixture("code_8_1_3.txt"),
                                    load_fixture("steane.txt")};
  for (int i = 0; i < 20; ++i) codes.push_back(random_code(2 + i % 8, i % 2, rng));
  for (const auto& code : codes) {
    const DenseState psi = build_codeword(code);
    for (int trial = 0; trial < 10; ++trial) {
      const ProductStateParams params = random_params(code.n, rng);
      const Amplitude dense = inner_product(psi, product_state_vector(params));
      ASSERT_NEAR(std::abs(overlap_f(code, params) - dense), 0.0, 1e-12) << format_code(code);
    }
  }
}

TEST(Overlap, AgreesWithTheExpansionAsWritten) {
  std::mt19937_64 rng(82);
  std::size_t checked = 0;
  for (int i = 0; i < 60; ++i) {
    const StabilizerCode code = standard_form(random_code(2 + i % 8, i % 3, rng)).code;
    if (base_state(code).any()) continue;
    ++checked;
    for (int trial = 0; trial < 5; ++trial) {
      const ProductStateParams params = random_params(code.n, rng);
      ASSERT_NEAR(std::abs(overlap_f(code, params) - testing::paper_overlap_f(code, params)), 0.0, 1e-12)
          << format_code(code);
    }
  }
  EXPECT_GT(checked, 10U);
}

TEST(Overlap, LinearInEachQubit) {
  std::mt19937_64 rng(83);
  const StabilizerCode code = load_fixture("code_8_1_3.txt");
  const OverlapExpansion expansion(code);
  EXPECT_EQ(expansion.r(), 7U);
  EXPECT_EQ(expansion.size(), 128U);
  const ProductStateParams params = random_params(8, rng);
  const Amplitude f = expansion.overlap(params);
  const auto grads = expansion.gradients(params);
  for (std::size_t j = 0; j < 8; ++j) {
    const Amplitude rebuilt = params.x[j] * grads[j].first + params.y[j] * grads[j].second;
    EXPECT_NEAR(std::abs(rebuilt - f), 0.0, 1e-13);
  }
}

TEST(Overlap, GradientsWithExactZeros) {
  const StabilizerCode code = load_fixture("steane.txt");
  const OverlapExpansion expansion(code);
  ProductStateParams params = ProductStateParams::basis_state(BitVec(7));
  params.x[2] = 0.0;
  params.y[2] = 1.0;
  params.x[5] = 0.0;
  params.y[5] = 1.0;
  const Amplitude f = expansion.overlap(params);
  const auto grads = expansion.gradients(params);
  for (std::size_t j = 0; j < 7; ++j) {
    EXPECT_NEAR(std::abs(params.x[j] * grads[j].first + params.y[j] * grads[j].second - f), 0.0, 1e-14);
    ProductStateParams flip = params;
    flip.x[j] = 1.0;
    flip.y[j] = 0.0;
    EXPECT_NEAR(std::abs(expansion.overlap(flip) - grads[j].first), 0.0, 1e-14);
  }
}

TEST(Overlap, GeometricBoundNeverBelowLowerBound) {
  std::mt19937_64 rng(84);
  for (int i = 0; i < 20; ++i) {
    const StabilizerCode code = random_code(2 + i % 8, i % 2, rng);
    const double el = static_cast<double>(lower_bound(code, {.threads = 1}).value);
    for (int trial = 0; trial < 50; ++trial) {
      const double f2 = std::norm(overlap_f(code, random_params(code.n, rng)));
      ASSERT_GE(-std::log2(f2), el - 1e-9);
    }
  }
}

TEST(Overlap, RankLimit) {
  EXPECT_THROW(OverlapExpansion(load_fixture("code_8_1_3.txt"), 6), ResourceLimitError);
}

TEST(Iterate, TableValues) {
  const auto five = iterate_closest_product(load_fixture("code_5_1_3.txt"));
  EXPECT_NEAR(five.E_estimate, 2.9275, 5e-3);
  EXPECT_TRUE(five.monotone);

  const auto steane = iterate_closest_product(load_fixture("steane.txt"));
  EXPECT_NEAR(steane.E_estimate, 3.0, 1e-6);
  EXPECT_TRUE(steane.converged);
}

TEST(Iterate, BellAgainstGrid) {
  const StabilizerCode bell = load_fixture("bell.txt");
  const auto result = iterate_closest_product(bell);
  EXPECT_NEAR(result.E_estimate, 1.0, 1e-9);
  // Brute force over a grid of product states.
  double best = 0.0;
  const int steps = 24;
  for (int a = 0; a <= steps; ++a) {
    for (int b = 0; b <= steps; ++b) {
      for (int c = 0; c < steps; ++c) {
        const double t0 = std::numbers::pi * a / steps;
        const double t1 = std::numbers::pi * b / steps;
        const double ph = 2 * std::numbers::pi * c / steps;
        ProductStateParams p{{std::cos(t0 / 2), std::cos(t1 / 2)},
                             {std::sin(t0 / 2), std::polar(std::sin(t1 / 2), ph)}};
        best = std::max(best, std::norm(overlap_f(bell, p)));
      }
    }
  }
  EXPECT_NEAR(-std::log2(best), result.E_estimate, 1e-9);
  EXPECT_LE(best, result.overlap + 1e-12);
}

TEST(Iterate, FixedPointsAreStationary) {
  std::mt19937_64 rng(85);
  for (int i = 0; i < 15; ++i) {
    const StabilizerCode code = random_code(2 + i % 7, i % 2, rng);
    const auto result = iterate_closest_product(code, {.starts = 8, .seed = 3});
    ASSERT_TRUE(result.monotone);
    ASSERT_LT(result.params.normalization_error(), 1e-12);
    if (result.converged) {
      ASSERT_LT(stationarity_residual(OverlapExpansion(code), result.params), 1e-6);
    }
    ASSERT_GE(result.E_estimate, static_cast<double>(lower_bound(code, {.threads = 1}).value) - 1e-9);
    ASSERT_LE(result.E_estimate, static_cast<double>(upper_bound_nonz(code)) + 1e-9);
  }
}

TEST(Iterate, DeterministicUnderSeedAndThreads) {
  const StabilizerCode code = load_fixture("code_5_1_3.txt");
  const auto a = iterate_closest_product(code, {.starts = 16, .seed = 11});
  const auto b = iterate_closest_product(code, {.starts = 16, .seed = 11, .threads = 4});
  EXPECT_EQ(a.E_estimate, b.E_estimate);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Iterate, AnchorsAreTriedFirst) {
  const StabilizerCode code = load_fixture("bell.txt");
  const double h = 1.0 / std::sqrt(2.0);
  const ProductStateParams plus{{h, h}, {h, h}};
  const auto result = iterate_closest_product(code, {.starts = 3, .anchors = {plus}});
  EXPECT_EQ(result.starts_used, 3U);
  EXPECT_NEAR(result.E_estimate, 1.0, 1e-9);
}

TEST(Iterate, RejectsZeroStarts) {
  EXPECT_THROW(iterate_closest_product(load_fixture("bell.txt"), {.starts = 0}), std::invalid_argument);
}

}  // namespace
}  // namespace stabent
