#pragma once

// Closed-form entanglement bounds for stabilizer codewords.
//
// Upper bound: the minimal number of non-Z-type generators, rank(A).
// Lower bound: the largest bipartite entanglement of the codeword. For a side
// S of m qubits that can occupy the identity block of the standard form, the
// entropy across the cut equals rank Q with Q = (Gamma3 | D') an m x (n-m)
// matrix built from Gamma1 = A B^T (diagonal cleared) and the D block.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "stabent/code.hpp"
#include "stabent/f2.hpp"

namespace stabent {

struct GammaSet {
  F2Matrix gamma;   ///< A B^T over the r non-Z-type rows
  F2Matrix gamma1;  ///< gamma with its diagonal cleared
  std::size_t r = 0;
};

enum class BipartitionMethod { PaperQRank, OracleEntropy, Skipped };
std::string_view to_string(BipartitionMethod method);

struct BipartitionReport {
  std::vector<std::size_t> subset;  ///< side A, original qubit labels, ascending
  std::size_t m = 0;
  F2Matrix Q;                       ///< only for PaperQRank
  std::size_t rank = 0;
  BipartitionMethod method = BipartitionMethod::Skipped;
  bool used_complement = false;     ///< Q was built with the complement in the identity block
};

/// rank(A): the minimal number of non-Z-type generators. Validates the code.
std::size_t upper_bound_nonz(const StabilizerCode& code);

/// Throws std::logic_error if gamma is not symmetric.
GammaSet gamma_set(const StandardFormResult& std_form);

struct ScorerOptions {
  /// Score cuts that neither side can align by the entropy of the full
  /// codeword stabilizer, rank(T restricted to the side) - m; otherwise skip them.
  bool use_oracle = true;
};

/// Scores bipartitions of one code. Holds the non-Z-type rows and the codeword
/// stabilizer used for cuts that neither side can align.
class BipartitionScorer {
 public:
  explicit BipartitionScorer(const StabilizerCode& code, ScorerOptions options = {});

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t r() const noexcept { return rows_.rows(); }

  BipartitionReport score(std::span<const std::size_t> subset) const;

  /// Q for `side` when its columns of A are independent; nullopt otherwise.
  std::optional<F2Matrix> q_matrix(std::span<const std::size_t> side) const;

  /// Pivot qubits of the standard form; aligned by construction, Q reduces to D.
  const std::vector<std::size_t>& pivot_subset() const noexcept { return pivots_; }

 private:
  std::size_t oracle_entropy(std::span<const std::size_t> side) const;

  std::size_t n_;
  F2Matrix rows_;  ///< r x 2n, (A | B) of the non-Z-type rows
  std::vector<std::size_t> pivots_;
  ScorerOptions options_;
  F2Matrix tableau_;  ///< n x 2n, codeword stabilizer (X | Z)
};

/// Bipartite rank for `subset` (original qubit labels).
BipartitionReport bipartition_rank(const StandardFormResult& std_form, std::span<const std::size_t> subset,
                                   ScorerOptions options = {});

enum class LowerBoundStrategy { Exhaustive, Random, Greedy, Witness };
std::string_view to_string(LowerBoundStrategy strategy);

struct LowerBoundOptions {
  LowerBoundStrategy strategy = LowerBoundStrategy::Exhaustive;
  std::size_t samples = 10000;  ///< Random
  std::uint64_t seed = 0;       ///< Random
  std::size_t exhaustive_limit = 24;
  bool allow_over_limit = false;
  ScorerOptions scorer;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

struct LowerBoundResult {
  std::size_t value = 0;
  BipartitionReport witness;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  ///< cuts neither Q nor the oracle could score
  LowerBoundStrategy strategy = LowerBoundStrategy::Exhaustive;
};

/// Exhaustive is exact for the bipartite bound and refuses n above
/// exhaustive_limit unless allow_over_limit. Random samples cuts and then runs
/// greedy ascent from the best sample. Greedy starts from the pivot subset.
/// Witness scores only the pivot subset.
LowerBoundResult lower_bound(const StabilizerCode& code, const LowerBoundOptions& options = {});

/// Greedy ascent from `start`: move single qubits across the cut (lowest index
/// first) while the rank improves.
LowerBoundResult greedy_ascent(const BipartitionScorer& scorer, std::vector<std::size_t> start);

namespace family {
struct DualCss {
  std::size_t n;
  std::size_t k;
};
struct Gottesman {
  std::size_t m;
};
struct EightM {
  std::size_t n;
};
struct Pasted {
  std::size_t n;
};
}  // namespace family

using CodeFamily = std::variant<family::DualCss, family::Gottesman, family::EightM, family::Pasted>;

struct FamilyExpectation {
  double value = 0.0;
  /// Second candidate where the closed forms disagree (pasted codes).
  std::optional<double> alternate;
};

/// Closed-form entanglement of a code family; intended as a test expectation.
/// Throws std::invalid_argument outside the family's parameter range.
FamilyExpectation family_expected(const CodeFamily& family);

}  // namespace stabent
