#pragma once

// Closest product state to the codeword by alternating maximisation of the
// overlap f = <0|Phi>, with |0> expanded over the 2^r products of the
// non-Z-type generators applied to the base state.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabent/code.hpp"
#include "stabent/dense.hpp"

namespace stabent {

inline constexpr std::size_t kMaxExpansionQubits = 64;
inline constexpr std::size_t kMaxExpansionRank = 24;

/// |0> = sum_mu norm * i^phase[mu] |basis[mu]>, one term per subset mu of the
/// non-Z-type generators; basis states are distinct.
class OverlapExpansion {
 public:
  /// Throws ResourceLimitError for n > 64 or r > max_rank.
  explicit OverlapExpansion(const StabilizerCode& code, std::size_t max_rank = kMaxExpansionRank);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t size() const noexcept { return basis_.size(); }
  double norm() const noexcept { return norm_; }

  std::uint64_t basis(std::size_t term) const noexcept { return basis_[term]; }
  Amplitude coefficient(std::size_t term) const noexcept;

  /// f = <0|Phi> for the product state with the given pairs.
  Amplitude overlap(const ProductStateParams& params) const;

  /// (df/dx_j, df/dy_j) for every qubit.
  std::vector<std::pair<Amplitude, Amplitude>> gradients(const ProductStateParams& params) const;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  double norm_ = 1.0;
  std::vector<std::uint64_t> basis_;
  std::vector<std::uint8_t> phase_;
};

/// <0|Phi> via a freshly built expansion.
Amplitude overlap_f(const StabilizerCode& code, const ProductStateParams& params);

/// Largest |conj(x_j) b_j - conj(y_j) a_j| / |(a_j, b_j)| over qubits, with
/// (a_j, b_j) = (df/dx_j, df/dy_j); zero exactly at the fixed points of the update.
double stationarity_residual(const OverlapExpansion& expansion, const ProductStateParams& params);

struct IterationOptions {
  std::size_t starts = 64;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::uint64_t seed = 0;
  /// Extra deterministic starts tried right after the basis-state start.
  std::vector<ProductStateParams> anchors;
  unsigned threads = 1;
  std::size_t max_rank = kMaxExpansionRank;
};

struct IterationResult {
  double E_estimate = 0.0;  ///< -log2 |f|^2 at the best start
  double overlap = 0.0;     ///< |f|^2 at the best start
  ProductStateParams params;
  std::size_t iterations = 0;  ///< sweeps used by the best start
  double residual = 0.0;
  bool converged = false;
  std::size_t starts_used = 0;
  std::size_t best_start = 0;
  /// False if any sweep of any start lowered |f|^2 by more than tol.
  bool monotone = true;
};

/// Sweeps the qubits cyclically, setting (x_j, y_j) to conj(df/dx_j, df/dy_j)
/// normalised, until the largest parameter change in a sweep is below tol.
/// Start 0 is the base computational state, then the anchors, then random
/// points on the Bloch sphere seeded by (seed, start index).
IterationResult iterate_closest_product(const StabilizerCode& code, const IterationOptions& options = {});

/// One start, for callers that supply their own initial point.
IterationResult iterate_from(const OverlapExpansion& expansion, ProductStateParams start, double tol,
                             std::size_t max_iter);

}  // namespace stabent
