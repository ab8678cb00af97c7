#pragma once

// Single-qubit Pauli measurements on the codeword |0> and the persistency
// search: the fewest single-qubit measurements, applied identically on every
// branch, after which each branch is a product state.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stabent/code.hpp"
#include "stabent/dense.hpp"
#include "stabent/pauli.hpp"

namespace stabent {

/// n independent commuting signed generators of a pure stabilizer state.
struct CodewordStabilizerState {
  std::size_t n = 0;
  std::vector<PauliOperator> full_gens;

  /// The basis codeword of `code`: its generators followed by the logical Z operators.
  static CodewordStabilizerState from_code(const StabilizerCode& code);

  /// (X | Z) rows, n x 2n.
  F2Matrix symplectic_matrix() const;
};

struct MeasurementBranch {
  int outcome = 1;
  double probability = 1.0;
  CodewordStabilizerState state;
};

enum class PauliBasis : char { X = 'X', Y = 'Y', Z = 'Z' };

struct Measurement {
  std::size_t qubit = 0;
  PauliBasis basis = PauliBasis::Z;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// One branch (probability 1) if the measured Pauli or its negative is in the
/// group, otherwise the +1 and -1 branches with probability 1/2 each.
std::vector<MeasurementBranch> measure(const CodewordStabilizerState& state, std::size_t qubit, PauliBasis basis);

/// Entropy in bits of the reduced state on `subset`: rank of the generator
/// matrix restricted to the subset columns, minus |subset|.
std::size_t cut_entropy(const CodewordStabilizerState& state, std::span<const std::size_t> subset);

/// True iff qubit j is unentangled from the rest.
bool is_qubit_product(const CodewordStabilizerState& state, std::size_t qubit);

bool is_product(const CodewordStabilizerState& state);

/// The single-qubit state of each qubit of a product state as (x_j, y_j).
/// Throws std::invalid_argument if the state is not a product.
ProductStateParams product_state_params(const CodewordStabilizerState& state);

struct PersistencyOptions {
  /// Maximum sequence length searched; nullopt means min(n, 2 rank(A)).
  std::optional<std::size_t> budget;
  std::size_t max_nodes = 2'000'000;
  /// Extra cuts whose entropy bounds the remaining depth from below.
  std::vector<std::vector<std::size_t>> bound_cuts;
};

struct PersistencyResult {
  std::size_t count = 0;
  std::vector<Measurement> sequence;
  /// False when the budget or node limit stopped the search before minimality was proved.
  bool minimal = true;
  std::size_t nodes = 0;
  /// Largest cut entropy found among the bounding cuts of the codeword.
  std::size_t lower_bound = 0;
};

PersistencyResult persistency(const StabilizerCode& code, const PersistencyOptions& options = {});

struct LeafProductState {
  ProductStateParams params;
  /// |<leaf|codeword>|^2 = 2^(-random outcomes)
  double overlap_probability = 1.0;
  CodewordStabilizerState state;
};

/// Applies `sequence` to the codeword, keeping the +1 outcome of each random
/// measurement, and returns the resulting product state.
LeafProductState leaf_product_state(const StabilizerCode& code, std::span<const Measurement> sequence);

}  // namespace stabent
