#include "stabent/code.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stabent/errors.hpp"

namespace stabent {
namespace {

using testing::load_fixture;
using testing::Matrix;
using testing::pauli_matrix;
using testing::random_code;

Matrix projector(const std::vector<PauliOperator>& gens) {
  const std::size_t dim = std::size_t{1} << gens.front().num_qubits();
  Matrix p = Matrix::Identity(dim, dim);
  for (const auto& g : gens) p = p * (Matrix::Identity(dim, dim) + pauli_matrix(g)) * 0.5;
  return p;
}

bool in_span(const std::vector<PauliOperator>& group, const PauliOperator& p) {
  std::vector<BitVec> rows;
  for (const auto& g : group) rows.push_back(g.symplectic());
  const std::size_t before = rank(F2Matrix::from_rows(rows, 2 * p.num_qubits()));
  rows.push_back(p.symplectic());
  return rank(F2Matrix::from_rows(rows, 2 * p.num_qubits())) == before;
}

TEST(Validate, EightOneThreeTableIsValid) {
  const StabilizerCode code = load_fixture("code_8_1_3.txt");
  EXPECT_EQ(code.n, 8U);
  EXPECT_EQ(code.k, 1U);
  EXPECT_TRUE(validate_code(code).ok());
}

TEST(Validate, RejectsAnticommutingAndDependent) {
  const auto anti = validate_code(StabilizerCode::from_generators({parse_pauli("XX"), parse_pauli("ZI")}));
  EXPECT_FALSE(anti.commuting);
  EXPECT_FALSE(anti.ok());
  ASSERT_FALSE(anti.failures.empty());
  EXPECT_NE(anti.failures.front().find("anticommute"), std::string::npos);

  const auto dep = validate_code(StabilizerCode::from_generators({parse_pauli("XX"), parse_pauli("XX")}));
  EXPECT_FALSE(dep.independent);
  EXPECT_THROW(require_valid(StabilizerCode::from_generators({parse_pauli("XX"), parse_pauli("XX")})),
               ValidationError);
}

TEST(Validate, RejectsNonHermitianAndRagged) {
  StabilizerCode bad = StabilizerCode::from_generators({parse_pauli("XZ")});
  bad.generators[0] = PauliOperator(bad.generators[0].x(), bad.generators[0].z(), 1);
  EXPECT_FALSE(validate_code(bad).hermitian);

  StabilizerCode ragged = StabilizerCode::from_generators({parse_pauli("XX")});
  ragged.generators.push_back(parse_pauli("ZZZ"));
  EXPECT_FALSE(validate_code(ragged).sizes_consistent);
}

TEST(Parse, LetterFormat) {
  const StabilizerCode bell = parse_code("XX\nZZ\n");
  EXPECT_EQ(bell.n, 2U);
  EXPECT_EQ(bell.k, 0U);
  const StabilizerCode commented = parse_code("# Bell\n\n  xx  # first\n-zz\n");
  EXPECT_EQ(commented.generators[1].sign(), -1);
  EXPECT_THROW(parse_code("XX\nXZ\n"), ValidationError);
  EXPECT_THROW(parse_code(""), ParseError);
  try {
    parse_code("XX\nZZZ\n");
    FAIL() << "ragged rows accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  try {
    parse_code("XX\nZ?\n");
    FAIL() << "bad letter accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 2U);
  }
}

TEST(Parse, FormatRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const StabilizerCode code = random_code(2 + trial % 9, trial % 3, rng);
    const StabilizerCode back = parse_code(format_code(code, "random"));
    EXPECT_EQ(back.generators, code.generators);
  }
}

TEST(StandardForm, AlreadyStandardIsUnchanged) {
  const StabilizerCode code = parse_code("XIX\nIXX\nZZZ\n");
  const auto sf = standard_form(code);
  EXPECT_EQ(sf.r, 2U);
  EXPECT_EQ(sf.qubit_perm, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(sf.code.generators, code.generators);
}

TEST(StandardForm, CssWithIdentityBlock) {
  const StabilizerCode steane = load_fixture("steane.txt");
  const auto sf = standard_form(steane);
  EXPECT_EQ(sf.r, 3U);
  const F2Matrix a = sf.code.x_part();
  for (std::size_t i = 0; i < sf.r; ++i) {
    for (std::size_t j = 0; j < sf.r; ++j) EXPECT_EQ(a.get(i, j), i == j);
  }
  for (std::size_t i = sf.r; i < a.rows(); ++i) EXPECT_TRUE(a.row(i).none());
}

TEST(StandardForm, RandomCodesShapeAndRank) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const StabilizerCode code = random_code(n, trial % 3 == 0 ? 0 : 1, rng);
    const auto sf = standard_form(code);
    ASSERT_EQ(sf.r, testing::naive_rank(testing::to_ints(code.x_part())));
    const F2Matrix a = sf.code.x_part();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < sf.r; ++j) ASSERT_EQ(a.get(i, j), i == j && i < sf.r);
      if (i >= sf.r) ASSERT_TRUE(a.row(i).none());
    }
    ASSERT_TRUE(validate_code(sf.code).ok());
  }
}

TEST(StandardForm, PreservesStabilizedSubspace) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const StabilizerCode code = random_code(n, trial % 2, rng);
    const auto sf = standard_form(code);
    const Matrix original = projector(code.generators);
    const Matrix transformed = projector(sf.generators_in_original_labels());
    ASSERT_LT((original - transformed).norm(), 1e-9) << format_code(code);
  }
}

TEST(ZTypeCount, Examples) {
  EXPECT_EQ(z_type_count(load_fixture("steane.txt")), 3U);
  EXPECT_EQ(z_type_count(load_fixture("code_5_1_3.txt")), 0U);
  EXPECT_EQ(z_type_count(parse_code("XX\nZZ\n")), 1U);
}

TEST(ZTypeCount, InvariantUnderRowOperations) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    StabilizerCode code = random_code(3 + trial % 6, trial % 2, rng);
    const std::size_t before = z_type_count(code);
    std::uniform_int_distribution<std::size_t> pick(0, code.generator_count() - 1);
    for (int step = 0; step < 20; ++step) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      if (i != j) code.generators[i] *= code.generators[j];
    }
    ASSERT_TRUE(validate_code(code).ok());
    ASSERT_EQ(z_type_count(code), before);
  }
}

TEST(Logicals, EmptyForStabilizerStates) { EXPECT_TRUE(complete_logicals(parse_code("XX\nZZ\n")).empty()); }

void expect_good_logicals(const StabilizerCode& code) {
  const auto logicals = complete_logicals(code);
  ASSERT_EQ(logicals.size(), code.k);
  std::vector<PauliOperator> group = code.generators;
  for (const auto& l : logicals) {
    EXPECT_TRUE(l.is_z_type());
    for (const auto& g : code.generators) EXPECT_TRUE(commutes(l, g));
    EXPECT_FALSE(in_span(group, l));
    group.push_back(l);
  }
  EXPECT_TRUE(validate_code(StabilizerCode::from_generators(group)).ok());
}

TEST(Logicals, FiveQubitCode) {
  const StabilizerCode code = load_fixture("code_5_1_3.txt");
  expect_good_logicals(code);
  // Brute force: exactly one Z-type operator up to the group commutes with every generator.
  std::size_t commuting = 0;
  for (std::uint64_t z = 1; z < 32; ++z) {
    const PauliOperator p(BitVec(5), BitVec::from_u64(z, 5));
    bool ok = true;
    for (const auto& g : code.generators) ok = ok && commutes(p, g);
    commuting += ok ? 1 : 0;
  }
  EXPECT_EQ(commuting, 1U);
}

TEST(Logicals, SteaneAllZWorks) {
  const StabilizerCode code = load_fixture("steane.txt");
  expect_good_logicals(code);
  const PauliOperator all_z = parse_pauli("ZZZZZZZ");
  for (const auto& g : code.generators) EXPECT_TRUE(commutes(all_z, g));
  EXPECT_FALSE(in_span(code.generators, all_z));
}

TEST(Logicals, RandomCodes) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 9;
    expect_good_logicals(random_code(n, trial % n, rng));
  }
}

TEST(BaseState, SignCorrection) {
  EXPECT_EQ(base_state(parse_code("-Z\n")).to_string(), "1");
  EXPECT_EQ(base_state(parse_code("XX\nZZ\n")).to_string(), "00");
  const BitVec s = base_state(parse_code("-ZZI\nIZZ\n"));
  EXPECT_EQ(s.get(0) ^ s.get(1), true);
  EXPECT_EQ(s.get(1) ^ s.get(2), false);
}

TEST(CodewordStabilizer, LogicalsStabilizeBaseState) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const StabilizerCode code = random_code(2 + trial % 5, 1 + trial % 2, rng);
    const auto full = codeword_stabilizer(code);
    ASSERT_EQ(full.size(), code.n);
    const DenseState psi = build_codeword(code);
    for (const auto& g : full) {
      const DenseState gpsi = apply_pauli(g, psi);
      ASSERT_NEAR(std::abs(inner_product(psi, gpsi) - Amplitude(1.0)), 0.0, 1e-12) << format_pauli(g);
    }
  }
}

}  // namespace
}  // namespace stabent
