#include "stabent/measurement.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stabent/bounds.hpp"
#include "stabent/codes.hpp"

namespace stabent {
namespace {

using testing::load_fixture;
using testing::Matrix;
using testing::pauli_matrix;
using testing::random_code;
using testing::stabilizer_vector;
using testing::Vector;

PauliOperator single(std::size_t n, std::size_t q, PauliBasis b) {
  return PauliOperator::single(n, q, static_cast<char>(b));
}

bool group_contains(const std::vector<PauliOperator>& gens, const PauliOperator& p) {
  std::vector<BitVec> rows;
  for (const auto& g : gens) rows.push_back(g.symplectic());
  const std::size_t before = rank(F2Matrix::from_rows(rows, 2 * p.num_qubits()));
  rows.push_back(p.symplectic());
  return rank(F2Matrix::from_rows(rows, 2 * p.num_qubits())) == before;
}

// Every leaf of the measurement tree is a product state.
bool disentangles(const CodewordStabilizerState& state, std::span<const Measurement> seq) {
  if (seq.empty()) return is_product(state);
  for (const auto& branch : measure(state, seq.front().qubit, seq.front().basis)) {
    if (!disentangles(branch.state, seq.subspan(1))) return false;
  }
  return true;
}

TEST(Measure, StabilizedQubitGivesOneBranch) {
  const StabilizerCode code = parse_code("XXI\nZZI\nIIZ\n");
  const auto branches = measure(CodewordStabilizerState::from_code(code), 2, PauliBasis::Z);
  ASSERT_EQ(branches.size(), 1U);
  EXPECT_EQ(branches[0].outcome, 1);
  EXPECT_EQ(branches[0].probability, 1.0);
}

TEST(Measure, NegatedStabilizerGivesMinusOne) {
  const auto branches = measure(CodewordStabilizerState::from_code(parse_code("-Z\n")), 0, PauliBasis::Z);
  ASSERT_EQ(branches.size(), 1U);
  EXPECT_EQ(branches[0].outcome, -1);
}

TEST(Measure, OutOfRange) {
  EXPECT_THROW(measure(CodewordStabilizerState::from_code(parse_code("XX\nZZ\n")), 2, PauliBasis::X),
               std::out_of_range);
}

TEST(Measure, AgreesWithDenseProjection) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> basis_pick(0, 2);
  const PauliBasis bases[] = {PauliBasis::X, PauliBasis::Y, PauliBasis::Z};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const StabilizerCode code = random_code(n, trial % 2 == 0 ? 0 : std::min<std::size_t>(1, n - 1), rng);
    const auto state = CodewordStabilizerState::from_code(code);
    const Vector psi = stabilizer_vector(state.full_gens);
    const std::size_t q = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const PauliBasis b = bases[basis_pick(rng)];
    const PauliOperator p = single(n, q, b);

    const auto branches = measure(state, q, b);
    ASSERT_TRUE(branches.size() == 1 || branches.size() == 2);
    ASSERT_EQ(branches.size() == 1, group_contains(state.full_gens, p));
    double total = 0.0;
    const Matrix id = Matrix::Identity(psi.size(), psi.size());
    for (const auto& branch : branches) {
      total += branch.probability;
      ASSERT_TRUE(validate_code(StabilizerCode::from_generators(branch.state.full_gens)).ok());
      ASSERT_EQ(branch.state.full_gens.size(), n);
      const Vector projected = 0.5 * (id + static_cast<double>(branch.outcome) * pauli_matrix(p)) * psi;
      ASSERT_NEAR(projected.squaredNorm(), branch.probability, 1e-12);
      const Vector expected = stabilizer_vector(branch.state.full_gens);
      ASSERT_NEAR(std::abs(expected.dot(projected.normalized())), 1.0, 1e-9);
    }
    ASSERT_NEAR(total, 1.0, 1e-15);
  }
}

TEST(IsProduct, Examples) {
  EXPECT_TRUE(is_product(CodewordStabilizerState::from_code(parse_code("ZII\nIZI\nIIZ\n"))));
  EXPECT_FALSE(is_product(CodewordStabilizerState::from_code(parse_code("XXI\nZZI\nIIZ\n"))));
  EXPECT_TRUE(is_product(CodewordStabilizerState::from_code(parse_code("XZ\nZX\n"))) == false);
  EXPECT_TRUE(is_product(CodewordStabilizerState::from_code(parse_code("YI\nIX\n"))));
}

TEST(IsProduct, ProductParams) {
  const auto params = product_state_params(CodewordStabilizerState::from_code(parse_code("-Z\n")));
  EXPECT_NEAR(std::abs(params.x[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(params.y[0]), 1.0, 1e-15);
  EXPECT_THROW(product_state_params(CodewordStabilizerState::from_code(parse_code("XX\nZZ\n"))),
               std::invalid_argument);
}

TEST(CutEntropy, MatchesDenseEntropy) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const StabilizerCode code = random_code(n, 1, rng);
    const auto state = CodewordStabilizerState::from_code(code);
    const auto profile = testing::entropy_profile(stabilizer_vector(state.full_gens), n);
    for (std::uint64_t mask = 1; mask < profile.size(); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t q = 0; q < n; ++q) {
        if ((mask >> q) & 1U) subset.push_back(q);
      }
      ASSERT_NEAR(static_cast<double>(cut_entropy(state, subset)), profile[mask], 1e-9);
    }
  }
}

TEST(Measure, EightOneThreeResidualIsGraphStateTimesZero) {
  const StabilizerCode code = load_fixture("code_8_1_3.txt");
  auto state = CodewordStabilizerState::from_code(code);
  for (std::size_t q : {0, 4, 6}) {
    const auto branches = measure(state, q, PauliBasis::Z);
    ASSERT_EQ(branches.size(), 2U);
    state = branches.front().state;
  }
  const std::vector<std::size_t> rest{1, 2, 3, 5, 7};
  EXPECT_TRUE(is_qubit_product(state, 0));
  EXPECT_TRUE(is_qubit_product(state, 4));
  EXPECT_TRUE(is_qubit_product(state, 6));
  EXPECT_TRUE(is_qubit_product(state, 7));

  // The four entangled qubits carry the entanglement profile of |G_4>.
  const auto g4 = CodewordStabilizerState::from_code(load_fixture("graph_g4.txt"));
  const std::vector<std::size_t> four{1, 2, 3, 5};
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    std::vector<std::size_t> in_residual;
    std::vector<std::size_t> in_g4;
    for (std::size_t v = 0; v < 4; ++v) {
      if ((mask >> v) & 1U) {
        in_residual.push_back(four[v]);
        in_g4.push_back(v);
      }
    }
    EXPECT_EQ(cut_entropy(state, in_residual), cut_entropy(g4, in_g4)) << "mask " << mask;
  }
}

TEST(Persistency, PaperExamples) {
  const auto code813 = persistency(load_fixture("code_8_1_3.txt"));
  EXPECT_EQ(code813.count, 5U);
  EXPECT_TRUE(code813.minimal);
  EXPECT_TRUE(disentangles(CodewordStabilizerState::from_code(load_fixture("code_8_1_3.txt")), code813.sequence));

  const auto g4 = persistency(load_fixture("graph_g4.txt"));
  EXPECT_EQ(g4.count, 2U);
  EXPECT_TRUE(g4.minimal);
}

TEST(Persistency, SmallCases) {
  EXPECT_EQ(persistency(parse_code("ZII\nIZI\nIIZ\n")).count, 0U);
  EXPECT_EQ(persistency(load_fixture("bell.txt")).count, 1U);
  EXPECT_EQ(persistency(load_fixture("steane.txt")).count, 3U);
}

TEST(Persistency, BudgetExhaustedIsFlagged) {
  const auto result = persistency(load_fixture("code_8_1_3.txt"), {.budget = 2});
  EXPECT_FALSE(result.minimal);
  EXPECT_GE(result.count, 5U);
}

TEST(Persistency, BoundsAndSequencesOnRandomCodes) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const StabilizerCode code = random_code(n, trial % 2, rng);
    const auto result = persistency(code);
    const auto lower = lower_bound(code, {.threads = 1});
    ASSERT_GE(result.count, lower.value) << format_code(code);
    ASSERT_LE(result.count, upper_bound_nonz(code));
    ASSERT_EQ(result.sequence.size(), result.count);
    ASSERT_TRUE(disentangles(CodewordStabilizerState::from_code(code), result.sequence)) << format_code(code);
  }
}

TEST(LeafProductState, OverlapMatchesDense) {
  const StabilizerCode code = load_fixture("code_8_1_3.txt");
  const auto result = persistency(code);
  const auto leaf = leaf_product_state(code, result.sequence);
  EXPECT_TRUE(is_product(leaf.state));
  EXPECT_NEAR(leaf.overlap_probability, std::pow(2.0, -5.0), 1e-15);
  const DenseState psi = build_codeword(code);
  const DenseState phi = product_state_vector(leaf.params);
  EXPECT_NEAR(std::norm(inner_product(psi, phi)), leaf.overlap_probability, 1e-12);
}

}  // namespace
}  // namespace stabent
