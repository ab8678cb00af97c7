#include "stabent/iteration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "stabent/errors.hpp"

namespace stabent {

namespace {

constexpr Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// Running products per term with exact zero factors counted separately, so
/// that a factor can be divided out even when it is zero.
struct TermProducts {
  std::vector<Amplitude> nonzero;  ///< conj(c_mu) times the product of nonzero factors
  std::vector<std::uint8_t> zeros;

  Amplitude value(std::size_t t) const { return zeros[t] == 0 ? nonzero[t] : Amplitude{}; }
};

Amplitude factor(const ProductStateParams& p, std::size_t j, bool bit) { return bit ? p.y[j] : p.x[j]; }

bool is_zero(Amplitude a) { return a == Amplitude{}; }

void rebuild(const OverlapExpansion& e, const ProductStateParams& p, TermProducts& tp) {
  const std::size_t n = e.num_qubits();
  tp.nonzero.resize(e.size());
  tp.zeros.resize(e.size());
  for (std::size_t t = 0; t < e.size(); ++t) {
    Amplitude prod = std::conj(e.coefficient(t));
    std::uint8_t zeros = 0;
    const std::uint64_t b = e.basis(t);
    for (std::size_t j = 0; j < n; ++j) {
      const Amplitude f = factor(p, j, (b >> j) & 1U);
      if (is_zero(f)) {
        ++zeros;
      } else {
        prod *= f;
      }
    }
    tp.nonzero[t] = prod;
    tp.zeros[t] = zeros;
  }
}

/// Sum of the term products with qubit j's factor removed, split by the bit at j.
std::pair<Amplitude, Amplitude> partials(const OverlapExpansion& e, const ProductStateParams& p, const TermProducts& tp,
                                         std::size_t j) {
  Amplitude a{};
  Amplitude b{};
  for (std::size_t t = 0; t < e.size(); ++t) {
    const bool bit = (e.basis(t) >> j) & 1U;
    const Amplitude f = factor(p, j, bit);
    Amplitude excl{};
    if (is_zero(f)) {
      if (tp.zeros[t] == 1) excl = tp.nonzero[t];
    } else if (tp.zeros[t] == 0) {
      excl = tp.nonzero[t] / f;
    }
    (bit ? b : a) += excl;
  }
  return {a, b};
}

void replace_factor(const OverlapExpansion& e, const ProductStateParams& old_p, Amplitude new_x, Amplitude new_y,
                    TermProducts& tp, std::size_t j) {
  for (std::size_t t = 0; t < e.size(); ++t) {
    const bool bit = (e.basis(t) >> j) & 1U;
    const Amplitude before = factor(old_p, j, bit);
    const Amplitude after = bit ? new_y : new_x;
    if (is_zero(before)) {
      --tp.zeros[t];
    } else {
      tp.nonzero[t] /= before;
    }
    if (is_zero(after)) {
      ++tp.zeros[t];
    } else {
      tp.nonzero[t] *= after;
    }
  }
}

Amplitude total(const TermProducts& tp) {
  Amplitude f{};
  for (std::size_t t = 0; t < tp.nonzero.size(); ++t) f += tp.value(t);
  return f;
}

ProductStateParams bloch_sample(std::size_t n, std::uint64_t seed, std::size_t start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(std::uint64_t{start} >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProductStateParams p;
  p.x.resize(n);
  p.y.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = std::acos(1.0 - 2.0 * unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    p.x[j] = std::cos(theta / 2.0);
    p.y[j] = std::polar(std::sin(theta / 2.0), phi);
  }
  return p;
}

}  // namespace

OverlapExpansion::OverlapExpansion(const StabilizerCode& code, std::size_t max_rank) : n_(code.n) {
  require_valid(code);
  if (n_ > kMaxExpansionQubits) {
    throw ResourceLimitError("overlap expansion supports at most 64 qubits, got " + std::to_string(n_));
  }
  const GeneratorSplit split = split_generators(code);
  r_ = split.r();
  if (r_ > max_rank) {
    throw ResourceLimitError("overlap expansion has 2^" + std::to_string(r_) + " terms; the limit is 2^" +
                             std::to_string(max_rank));
  }
  const std::uint64_t s = base_state(code).to_u64();
  std::vector<std::uint64_t> gx(r_);
  std::vector<std::uint64_t> gz(r_);
  std::vector<unsigned> gp(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    gx[i] = split.non_z[i].x().to_u64();
    gz[i] = split.non_z[i].z().to_u64();
    gp[i] = split.non_z[i].phase_exp();
  }

  const std::size_t count = std::size_t{1} << r_;
  basis_.resize(count);
  phase_.resize(count);
  // Gray-code walk: each step multiplies the running product by one generator.
  std::uint64_t px = 0;
  std::uint64_t pz = 0;
  unsigned pp = 0;
  for (std::size_t t = 0; t < count; ++t) {
    if (t > 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(t));
      pp += gp[i] + (std::popcount(pz & gx[i]) & 1 ? 2U : 0U);
      px ^= gx[i];
      pz ^= gz[i];
    }
    // i^p X^a Z^b |s> = i^p (-1)^(b.s) |s + a>
    basis_[t] = s ^ px;
    phase_[t] = static_cast<std::uint8_t>((pp + (std::popcount(pz & s) & 1 ? 2U : 0U)) & 3U);
  }
  norm_ = 1.0 / std::sqrt(static_cast<double>(count));
}

Amplitude OverlapExpansion::coefficient(std::size_t term) const noexcept { return norm_ * kIPow[phase_[term]]; }

Amplitude OverlapExpansion::overlap(const ProductStateParams& params) const {
  if (params.size() != n_) throw std::invalid_argument("overlap: parameter count differs from qubit count");
  Amplitude f{};
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    Amplitude prod = std::conj(coefficient(t));
    for (std::size_t j = 0; j < n_; ++j) prod *= factor(params, j, (basis_[t] >> j) & 1U);
    f += prod;
  }
  return f;
}

std::vector<std::pair<Amplitude, Amplitude>> OverlapExpansion::gradients(const ProductStateParams& params) const {
  if (params.size() != n_) throw std::invalid_argument("gradients: parameter count differs from qubit count");
  TermProducts tp;
  rebuild(*this, params, tp);
  std::vector<std::pair<Amplitude, Amplitude>> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = partials(*this, params, tp, j);
  return out;
}

Amplitude overlap_f(const StabilizerCode& code, const ProductStateParams& params) {
  return OverlapExpansion(code).overlap(params);
}

double stationarity_residual(const OverlapExpansion& expansion, const ProductStateParams& params) {
  double worst = 0.0;
  const auto grads = expansion.gradients(params);
  for (std::size_t j = 0; j < grads.size(); ++j) {
    const auto [a, b] = grads[j];
    const double len = std::sqrt(std::norm(a) + std::norm(b));
    if (len == 0.0) continue;
    worst = std::max(worst, std::abs(std::conj(params.x[j]) * b - std::conj(params.y[j]) * a) / len);
  }
  return worst;
}

IterationResult iterate_from(const OverlapExpansion& expansion, ProductStateParams p, double tol,
                             std::size_t max_iter) {
  const std::size_t n = expansion.num_qubits();
  if (p.size() != n) throw std::invalid_argument("iterate_from: parameter count differs from qubit count");
  p.normalize();
  IterationResult result;
  TermProducts tp;
  rebuild(expansion, p, tp);
  double previous = std::norm(total(tp));

  while (result.iterations < max_iter) {
    ++result.iterations;
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto [a, b] = partials(expansion, p, tp, j);
      const double len = std::sqrt(std::norm(a) + std::norm(b));
      if (len == 0.0) continue;
      const Amplitude nx = std::conj(a) / len;
      const Amplitude ny = std::conj(b) / len;
      change = std::max(change, std::abs(nx - p.x[j]) + std::abs(ny - p.y[j]));
      replace_factor(expansion, p, nx, ny, tp, j);
      p.x[j] = nx;
      p.y[j] = ny;
    }
    rebuild(expansion, p, tp);
    const double current = std::norm(total(tp));
    if (current < previous - tol) result.monotone = false;
    previous = current;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  result.overlap = previous;
  result.E_estimate = -std::log2(previous);
  result.params = std::move(p);
  result.residual = stationarity_residual(expansion, result.params);
  result.starts_used = 1;
  return result;
}

IterationResult iterate_closest_product(const StabilizerCode& code, const IterationOptions& options) {
  if (options.starts == 0) throw std::invalid_argument("iterate_closest_product: starts must be positive");
  const OverlapExpansion expansion(code, options.max_rank);
  const std::size_t n = code.n;

  auto start_point = [&](std::size_t s) -> ProductStateParams {
    if (s == 0) return ProductStateParams::basis_state(BitVec::from_u64(expansion.basis(0), n));
    if (s - 1 < options.anchors.size()) return options.anchors[s - 1];
    return bloch_sample(n, options.seed, s);
  };

  std::vector<IterationResult> runs(options.starts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < options.starts; s = next++) {
      runs[s] = iterate_from(expansion, start_point(s), options.tol, options.max_iter);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(options.starts)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  bool monotone = true;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    monotone = monotone && runs[s].monotone;
    if (runs[s].overlap > runs[best].overlap) best = s;
  }
  IterationResult result = std::move(runs[best]);
  result.best_start = best;
  result.starts_used = options.starts;
  result.monotone = monotone;
  return result;
}

}  // namespace stabent
