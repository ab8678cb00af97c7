#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabent/f2.hpp"
#include "stabent/pauli.hpp"

namespace stabent {

/// A stabilizer code on n qubits given by n-k generators.
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOperator> generators;
  std::optional<std::vector<PauliOperator>> logical_z;

  /// Builds a code from generators; n from their length and k = n - count.
  /// Does not validate.
  static StabilizerCode from_generators(std::vector<PauliOperator> generators);

  std::size_t generator_count() const noexcept { return generators.size(); }
  /// (n-k) x n X-part, the matrix A.
  F2Matrix x_part() const;
  /// (n-k) x n Z-part, the matrix B.
  F2Matrix z_part() const;
  /// (n-k) x 2n matrix (A | B).
  F2Matrix symplectic_matrix() const;

  friend bool operator==(const StabilizerCode&, const StabilizerCode&) = default;
};

struct ValidationReport {
  bool sizes_consistent = true;
  bool hermitian = true;
  bool commuting = true;
  bool independent = true;
  std::vector<std::string> failures;

  bool ok() const noexcept { return sizes_consistent && hermitian && commuting && independent; }
};

ValidationReport validate_code(const StabilizerCode& code);

/// Throws ValidationError carrying the first failure.
void require_valid(const StabilizerCode& code);

/// Generators re-expressed so that the first r rows have independent X-parts in
/// reduced echelon form (pivot columns strictly increasing) and the remaining
/// rows are Z-type. Qubit labels are unchanged.
struct GeneratorSplit {
  std::vector<PauliOperator> non_z;  ///< r rows
  std::vector<PauliOperator> z_type;
  std::vector<std::size_t> x_pivots;  ///< pivot qubit of each non-Z row
  std::vector<RowOp> generator_ops;  ///< Add = multiply target by source

  std::size_t r() const noexcept { return non_z.size(); }
};

GeneratorSplit split_generators(const StabilizerCode& code);

/// Generator matrix arranged as
///
///     ( I D | F G )
///     ( 0 0 | J K )
///
/// with I the r x r identity, on qubits relabelled by qubit_perm.
struct StandardFormResult {
  StabilizerCode code;                 ///< transformed code on permuted qubits
  std::vector<std::size_t> qubit_perm;  ///< new qubit i is original qubit qubit_perm[i]
  std::size_t r = 0;                    ///< number of non-Z-type generators
  std::vector<RowOp> generator_ops;    ///< replayed on the original generators (before permutation)

  F2Matrix D() const;
  F2Matrix F() const;
  F2Matrix G() const;
  F2Matrix J() const;
  F2Matrix K() const;
  /// Generators mapped back onto the original qubit labels.
  std::vector<PauliOperator> generators_in_original_labels() const;
};

StandardFormResult standard_form(const StabilizerCode& code);

/// Computational basis state s satisfying every Z-type element of the stabilizer
/// with eigenvalue +1. The all-zero string whenever the Z-type signs allow it.
BitVec base_state(const StabilizerCode& code);

/// k logical Z operators, all pure Z-type. Each has sign chosen so that it
/// stabilizes base_state(code); with the default sign convention that is +1.
std::vector<PauliOperator> complete_logicals(const StabilizerCode& code);

/// n independent commuting generators of the codeword |0> stabilizer:
/// the code generators followed by complete_logicals(code).
std::vector<PauliOperator> codeword_stabilizer(const StabilizerCode& code);

/// (n-k) - rank(A): the largest number of Z-type generators any generating set can have.
std::size_t z_type_count(const StabilizerCode& code);

/// Letter format: one generator per line, optional sign, letters IXYZ in any
/// case, '#' starts a comment, blank lines ignored. Validates the result.
StabilizerCode parse_code(std::string_view text);

/// Inverse of parse_code, one generator per line.
std::string format_code(const StabilizerCode& code, std::string_view header_comment = {});

}  // namespace stabent
