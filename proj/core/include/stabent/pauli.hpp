#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stabent/f2.hpp"

namespace stabent {

/// An n-qubit Pauli operator i^phase_exp X^x Z^z.
///
/// The letter Y is stored as x=z=1 with one extra unit of phase (Y = iXZ), so
/// a Hermitian operator always satisfies phase_exp == x.z (mod 2).
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits);
  PauliOperator(BitVec x, BitVec z, unsigned phase_exp = 0);

  /// Single-qubit letter ('X', 'Y' or 'Z') on `qubit`, identity elsewhere, sign +.
  static PauliOperator single(std::size_t num_qubits, std::size_t qubit, char letter);

  std::size_t num_qubits() const noexcept { return x_.size(); }
  const BitVec& x() const noexcept { return x_; }
  const BitVec& z() const noexcept { return z_; }
  unsigned phase_exp() const noexcept { return phase_; }

  bool is_hermitian() const noexcept { return ((phase_ + (x_.dot(z_) ? 1U : 0U)) & 1U) == 0; }
  bool is_identity_up_to_phase() const noexcept { return x_.none() && z_.none(); }
  bool is_z_type() const noexcept { return x_.none(); }
  bool is_x_type() const noexcept { return z_.none(); }
  std::size_t y_count() const noexcept { return x_.and_count(z_); }
  std::size_t weight() const;
  /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t qubit) const noexcept;

  /// Sign of the letter form, +1 or -1; only meaningful for Hermitian operators.
  int sign() const noexcept;
  PauliOperator negated() const;

  /// (x | z) as one 2n-bit vector.
  BitVec symplectic() const { return x_.concat(z_); }

  /// Relabels qubits: result qubit i is this operator's qubit perm[i].
  PauliOperator permuted(std::span<const std::size_t> perm) const;

  /// this = this * rhs, with exact phase.
  PauliOperator& operator*=(const PauliOperator& rhs);
  friend PauliOperator operator*(PauliOperator lhs, const PauliOperator& rhs) { return lhs *= rhs; }
  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVec x_;
  BitVec z_;
  unsigned phase_ = 0;
};

/// Parses [+-]?[IXYZ]+ (letters case-insensitive). Whitespace between letters is ignored.
PauliOperator parse_pauli(std::string_view text);

/// Letter form with a leading '-' for negative operators. Throws for non-Hermitian input.
std::string format_pauli(const PauliOperator& p);

/// True iff the two operators commute. Throws std::invalid_argument on size mismatch.
bool commutes(const PauliOperator& p, const PauliOperator& q);

}  // namespace stabent
