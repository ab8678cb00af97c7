#include "stabent/dense.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabent/errors.hpp"

namespace stabent {

namespace {

constexpr Amplitude kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_dense_size(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw ResourceLimitError("dense state on " + std::to_string(n) + " qubits exceeds the limit of " +
                             std::to_string(limit));
  }
  if (n >= 63) {
    throw ResourceLimitError("dense state needs fewer than 63 qubits");
  }
}

/// state <- (state + P state) / 2
void project_plus(const PauliOperator& p, std::vector<Amplitude>& state) {
  const std::uint64_t xmask = p.x().to_u64();
  const std::uint64_t zmask = p.z().to_u64();
  const Amplitude phase = kIPowers[p.phase_exp()];
  std::vector<Amplitude> out(state.size());
  for (std::uint64_t idx = 0; idx < state.size(); ++idx) {
    if (state[idx] == Amplitude{}) continue;
    const bool odd = (std::popcount(zmask & idx) & 1) != 0;
    out[idx ^ xmask] += (odd ? -phase : phase) * state[idx];
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    state[i] = 0.5 * (state[i] + out[i]);
  }
}

}  // namespace

double DenseState::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return std::sqrt(total);
}

double ProductStateParams::normalization_error() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    worst = std::max(worst, std::abs(std::norm(x[j]) + std::norm(y[j]) - 1.0));
  }
  return worst;
}

void ProductStateParams::normalize() {
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double len = std::sqrt(std::norm(x[j]) + std::norm(y[j]));
    if (len == 0.0) {
      throw std::invalid_argument("ProductStateParams::normalize: zero pair");
    }
    x[j] /= len;
    y[j] /= len;
  }
}

ProductStateParams ProductStateParams::basis_state(const BitVec& bits) {
  ProductStateParams p;
  p.x.resize(bits.size());
  p.y.resize(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    (bits.get(j) ? p.y[j] : p.x[j]) = 1.0;
  }
  return p;
}

DenseState apply_pauli(const PauliOperator& p, const DenseState& state) {
  if (p.num_qubits() != state.n) {
    throw std::invalid_argument("apply_pauli: qubit count mismatch");
  }
  const std::uint64_t xmask = p.x().to_u64();
  const std::uint64_t zmask = p.z().to_u64();
  const Amplitude phase = kIPowers[p.phase_exp()];
  DenseState out{state.n, std::vector<Amplitude>(state.amplitudes.size())};
  for (std::uint64_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    const bool odd = (std::popcount(zmask & idx) & 1) != 0;
    out.amplitudes[idx ^ xmask] = (odd ? -phase : phase) * state.amplitudes[idx];
  }
  return out;
}

DenseState build_codeword(const StabilizerCode& code, std::size_t dense_limit) {
  require_dense_size(code.n, dense_limit);
  require_valid(code);
  const BitVec s = base_state(code);
  DenseState state{code.n, std::vector<Amplitude>(std::size_t{1} << code.n)};
  state.amplitudes[s.to_u64()] = 1.0;
  for (const auto& g : code.generators) {
    project_plus(g, state.amplitudes);
  }
  const double len = state.norm();
  if (len < 1e-12) {
    throw std::logic_error("build_codeword: projection of the base state vanished");
  }
  for (auto& a : state.amplitudes) a /= len;
  return state;
}

DenseState product_state_vector(const ProductStateParams& params, std::size_t dense_limit) {
  const std::size_t n = params.size();
  require_dense_size(n, dense_limit);
  DenseState state{n, std::vector<Amplitude>(std::size_t{1} << n)};
  for (std::uint64_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    Amplitude a = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a *= ((idx >> j) & 1U) ? params.y[j] : params.x[j];
    }
    state.amplitudes[idx] = a;
  }
  return state;
}

Amplitude inner_product(const DenseState& a, const DenseState& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("inner_product: qubit count mismatch");
  }
  Amplitude total = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    total += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return total;
}

double reduced_entropy(const DenseState& state, std::span<const std::size_t> subset) {
  std::vector<bool> in_subset(state.n, false);
  for (std::size_t q : subset) {
    if (q >= state.n) throw std::out_of_range("reduced_entropy: qubit out of range");
    in_subset[q] = true;
  }
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
  for (std::size_t q = 0; q < state.n; ++q) {
    (in_subset[q] ? side_a : side_b).push_back(q);
  }
  if (side_a.empty() || side_b.empty()) return 0.0;
  if (side_a.size() > side_b.size()) std::swap(side_a, side_b);

  // psi[a, b] with the smaller side as rows; rho = M M^dagger.
  const std::size_t rows = std::size_t{1} << side_a.size();
  const std::size_t cols = std::size_t{1} << side_b.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::uint64_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    if (state.amplitudes[idx] == Amplitude{}) continue;
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t i = 0; i < side_a.size(); ++i) ia |= ((idx >> side_a[i]) & 1U) << i;
    for (std::size_t i = 0; i < side_b.size(); ++i) ib |= ((idx >> side_b[i]) & 1U) << i;
    m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = state.amplitudes[idx];
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-14) entropy -= p * std::log2(p);
  }
  return entropy;
}

}  // namespace stabent
