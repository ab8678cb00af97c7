#pragma once

// Dense state-vector oracle for small codes. Amplitude index bit j is qubit j.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "stabent/code.hpp"
#include "stabent/pauli.hpp"

namespace stabent {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultDenseLimit = 20;

struct DenseState {
  std::size_t n = 0;
  std::vector<Amplitude> amplitudes;

  double norm() const;
};

/// Per-qubit pairs (x_j, y_j) of the product state (x_j|0> + y_j|1>) over all qubits.
struct ProductStateParams {
  std::vector<Amplitude> x;
  std::vector<Amplitude> y;

  std::size_t size() const noexcept { return x.size(); }
  /// Largest deviation of |x_j|^2 + |y_j|^2 from 1.
  double normalization_error() const;
  void normalize();
  /// The computational basis state |bits>.
  static ProductStateParams basis_state(const BitVec& bits);
};

DenseState apply_pauli(const PauliOperator& p, const DenseState& state);

/// The basis codeword: the projection of the base computational state onto
/// the code space, normalized. Throws ResourceLimitError above `dense_limit` qubits.
DenseState build_codeword(const StabilizerCode& code, std::size_t dense_limit = kDefaultDenseLimit);

DenseState product_state_vector(const ProductStateParams& params, std::size_t dense_limit = kDefaultDenseLimit);

/// <a|b>
Amplitude inner_product(const DenseState& a, const DenseState& b);

/// Von Neumann entropy in bits of the reduced state on `subset` (equivalently on
/// its complement). Empty and full subsets give 0.
double reduced_entropy(const DenseState& state, std::span<const std::size_t> subset);

}  // namespace stabent
