#include "stabent/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "stabent/errors.hpp"

namespace stabent {

namespace {

std::vector<std::size_t> normalized_subset(std::span<const std::size_t> subset, std::size_t n) {
  std::vector<std::size_t> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("bipartition subset contains a repeated qubit");
  }
  if (!out.empty() && out.back() >= n) {
    throw std::out_of_range("bipartition subset qubit out of range");
  }
  return out;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& sorted, std::size_t n) {
  std::vector<std::size_t> out;
  out.reserve(n - sorted.size());
  std::size_t i = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (i < sorted.size() && sorted[i] == q) {
      ++i;
    } else {
      out.push_back(q);
    }
  }
  return out;
}

std::vector<std::size_t> mask_subset(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::size_t cut_cap(std::size_t m, std::size_t n, std::size_t r) { return std::min({m, n - m, r}); }

struct Candidate {
  std::size_t rank = 0;
  std::uint64_t mask = 0;
  bool valid = false;

  bool better_than(const Candidate& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    if (rank != other.rank) return rank > other.rank;
    return mask < other.mask;
  }
};

}  // namespace

std::string_view to_string(BipartitionMethod method) {
  switch (method) {
    case BipartitionMethod::PaperQRank:
      return "paper-Q-rank";
    case BipartitionMethod::OracleEntropy:
      return "oracle-entropy";
    case BipartitionMethod::Skipped:
      return "skipped";
  }
  return "unknown";
}

std::string_view to_string(LowerBoundStrategy strategy) {
  switch (strategy) {
    case LowerBoundStrategy::Exhaustive:
      return "exhaustive";
    case LowerBoundStrategy::Random:
      return "random";
    case LowerBoundStrategy::Greedy:
      return "greedy";
    case LowerBoundStrategy::Witness:
      return "witness";
  }
  return "unknown";
}

std::size_t upper_bound_nonz(const StabilizerCode& code) {
  require_valid(code);
  return rank(code.x_part());
}

GammaSet gamma_set(const StandardFormResult& std_form) {
  const std::size_t r = std_form.r;
  const F2Matrix a = std_form.code.x_part().block(0, 0, r, std_form.code.n);
  const F2Matrix b = std_form.code.z_part().block(0, 0, r, std_form.code.n);
  GammaSet out;
  out.r = r;
  out.gamma = a * b.transpose();
  if (!out.gamma.is_symmetric()) {
    throw std::logic_error("gamma_set: A B^T is not symmetric; generators do not commute");
  }
  out.gamma1 = out.gamma;
  for (std::size_t i = 0; i < r; ++i) out.gamma1.set(i, i, false);
  return out;
}

BipartitionScorer::BipartitionScorer(const StabilizerCode& code, ScorerOptions options)
    : n_(code.n), options_(options) {
  require_valid(code);
  const GeneratorSplit split = split_generators(code);
  rows_ = F2Matrix(0, 2 * n_);
  for (const auto& g : split.non_z) rows_.append_row(g.symplectic());
  pivots_ = split.x_pivots;
  std::sort(pivots_.begin(), pivots_.end());
  if (options_.use_oracle) {
    tableau_ = F2Matrix(0, 2 * n_);
    for (const auto& g : codeword_stabilizer(code)) tableau_.append_row(g.symplectic());
  }
}

std::size_t BipartitionScorer::oracle_entropy(std::span<const std::size_t> side) const {
  std::vector<std::size_t> cols(side.begin(), side.end());
  for (std::size_t q : side) cols.push_back(n_ + q);
  F2Matrix restricted(0, cols.size());
  for (std::size_t i = 0; i < tableau_.rows(); ++i) restricted.append_row(tableau_.row(i).select(cols));
  return rank(restricted) - side.size();
}

std::optional<F2Matrix> BipartitionScorer::q_matrix(std::span<const std::size_t> side) const {
  const std::size_t m = side.size();
  const std::size_t r = rows_.rows();
  if (m > r) return std::nullopt;

  std::vector<bool> in_side(n_, false);
  std::vector<std::size_t> order(side.begin(), side.end());
  for (std::size_t q : side) in_side[q] = true;
  for (std::size_t q = 0; q < n_; ++q) {
    if (!in_side[q]) order.push_back(q);
  }
  const RrefResult red = rref(rows_, order);
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= red.pivot_cols.size() || !in_side[red.pivot_cols[i]]) return std::nullopt;
  }

  std::vector<bool> is_pivot(n_, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t q = 0; q < n_; ++q) {
    if (!is_pivot[q]) free_cols.push_back(q);
  }

  // Gamma3: rows 0..m of Gamma1 against rows m..r; D': first m rows on the free columns.
  F2Matrix q_mat(m, n_ - m);
  for (std::size_t i = 0; i < m; ++i) {
    const BitVec& row_i = red.reduced.row(i);
    const BitVec a_i = row_i.slice(0, n_);
    for (std::size_t l = m; l < r; ++l) {
      const BitVec b_l = red.reduced.row(l).slice(n_, 2 * n_);
      if (a_i.dot(b_l)) q_mat.set(i, l - m);
    }
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      if (row_i.get(free_cols[c])) q_mat.set(i, (r - m) + c);
    }
  }
  return q_mat;
}

BipartitionReport BipartitionScorer::score(std::span<const std::size_t> subset) const {
  BipartitionReport report;
  report.subset = normalized_subset(subset, n_);
  report.m = report.subset.size();
  if (report.m == 0 || report.m == n_) {
    report.method = BipartitionMethod::PaperQRank;
    report.Q = F2Matrix(report.m, n_ - report.m);
    return report;
  }
  if (auto q = q_matrix(report.subset)) {
    report.Q = std::move(*q);
    report.rank = rank(report.Q);
    report.method = BipartitionMethod::PaperQRank;
    return report;
  }
  const auto comp = complement_of(report.subset, n_);
  if (auto q = q_matrix(comp)) {
    report.Q = std::move(*q);
    report.rank = rank(report.Q);
    report.method = BipartitionMethod::PaperQRank;
    report.used_complement = true;
    return report;
  }
  if (options_.use_oracle) {
    report.rank = oracle_entropy(report.subset);
    report.method = BipartitionMethod::OracleEntropy;
    return report;
  }
  report.method = BipartitionMethod::Skipped;
  return report;
}

BipartitionReport bipartition_rank(const StandardFormResult& std_form, std::span<const std::size_t> subset,
                                   ScorerOptions options) {
  StabilizerCode original = std_form.code;
  original.generators = std_form.generators_in_original_labels();
  const BipartitionScorer scorer(original, options);
  return scorer.score(subset);
}

LowerBoundResult greedy_ascent(const BipartitionScorer& scorer, std::vector<std::size_t> start) {
  const std::size_t n = scorer.num_qubits();
  const std::size_t cap = std::min(n / 2, scorer.r());
  LowerBoundResult result;
  result.strategy = LowerBoundStrategy::Greedy;
  result.witness = scorer.score(start);
  ++result.evaluated;
  if (result.witness.method == BipartitionMethod::Skipped) ++result.skipped;

  std::vector<bool> member(n, false);
  for (std::size_t q : result.witness.subset) member[q] = true;
  bool improved = true;
  while (improved && result.witness.rank < cap) {
    improved = false;
    for (std::size_t q = 0; q < n; ++q) {
      member[q] = !member[q];
      std::vector<std::size_t> candidate;
      for (std::size_t j = 0; j < n; ++j) {
        if (member[j]) candidate.push_back(j);
      }
      if (!candidate.empty() && candidate.size() < n) {
        BipartitionReport rep = scorer.score(candidate);
        ++result.evaluated;
        if (rep.method == BipartitionMethod::Skipped) ++result.skipped;
        if (rep.rank > result.witness.rank) {
          result.witness = std::move(rep);
          improved = true;
          break;
        }
      }
      member[q] = !member[q];
    }
  }
  result.value = result.witness.rank;
  return result;
}

namespace {

LowerBoundResult exhaustive(const BipartitionScorer& scorer, const LowerBoundOptions& options) {
  const std::size_t n = scorer.num_qubits();
  const std::size_t r = scorer.r();
  LowerBoundResult result;
  result.strategy = LowerBoundStrategy::Exhaustive;
  if (n < 2 || r == 0) {
    const std::vector<std::size_t> first = n < 2 ? std::vector<std::size_t>{} : std::vector<std::size_t>{0};
    result.witness = scorer.score(first);
    result.evaluated = 1;
    return result;
  }
  const std::size_t global_cap = std::min(n / 2, r);
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1U, threads);

  // Qubit n-1 always stays on the complement side, so each cut is visited once.
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  constexpr std::uint64_t kBlock = 4096;
  Candidate best;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;

  for (std::uint64_t block = 1; block < end; block += kBlock) {
    const std::uint64_t block_end = std::min(end, block + kBlock);
    const std::size_t floor_rank = best.valid ? best.rank : 0;
    std::vector<Candidate> local(threads);
    std::vector<std::size_t> local_eval(threads, 0);
    std::vector<std::size_t> local_skip(threads, 0);

    auto work = [&](unsigned t) {
      for (std::uint64_t mask = block + t; mask < block_end; mask += threads) {
        const std::size_t m = static_cast<std::size_t>(std::popcount(mask));
        // Cuts that cannot beat the best rank seen before this block are skipped outright.
        if (best.valid && cut_cap(m, n, r) <= floor_rank) continue;
        const auto subset = mask_subset(mask);
        const BipartitionReport rep = scorer.score(subset);
        ++local_eval[t];
        if (rep.method == BipartitionMethod::Skipped) {
          ++local_skip[t];
          continue;
        }
        const Candidate c{rep.rank, mask, true};
        if (c.better_than(local[t])) local[t] = c;
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (unsigned t = 0; t < threads; ++t) {
      if (local[t].better_than(best)) best = local[t];
      evaluated += local_eval[t];
      skipped += local_skip[t];
    }
    if (best.valid && best.rank >= global_cap) break;
  }

  result.witness = scorer.score(mask_subset(best.valid ? best.mask : 1));
  result.value = result.witness.rank;
  result.evaluated = evaluated;
  result.skipped = skipped;
  return result;
}

LowerBoundResult randomized(const BipartitionScorer& scorer, const LowerBoundOptions& options) {
  const std::size_t n = scorer.num_qubits();
  LowerBoundResult result;
  result.strategy = LowerBoundStrategy::Random;
  if (n < 2) {
    result.witness = scorer.score(std::vector<std::size_t>{});
    result.evaluated = 1;
    return result;
  }
  const std::size_t cap = std::min(n / 2, scorer.r());
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, n - 1);
  std::vector<std::size_t> qubits(n);
  std::iota(qubits.begin(), qubits.end(), std::size_t{0});

  bool have = false;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const std::size_t m = size_dist(rng);
    std::shuffle(qubits.begin(), qubits.end(), rng);
    std::vector<std::size_t> subset(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(m));
    BipartitionReport rep = scorer.score(subset);
    ++result.evaluated;
    if (rep.method == BipartitionMethod::Skipped) ++result.skipped;
    if (!have || rep.rank > result.witness.rank) {
      result.witness = std::move(rep);
      have = true;
    }
    if (result.witness.rank >= cap) break;
  }
  if (!have) result.witness = scorer.score(std::vector<std::size_t>{0});

  LowerBoundResult greedy = greedy_ascent(scorer, result.witness.subset);
  if (greedy.witness.rank > result.witness.rank) result.witness = std::move(greedy.witness);
  result.evaluated += greedy.evaluated;
  result.skipped += greedy.skipped;
  result.value = result.witness.rank;
  return result;
}

}  // namespace

LowerBoundResult lower_bound(const StabilizerCode& code, const LowerBoundOptions& options) {
  const BipartitionScorer scorer(code, options.scorer);
  switch (options.strategy) {
    case LowerBoundStrategy::Exhaustive:
      if (code.n > options.exhaustive_limit && !options.allow_over_limit) {
        throw ResourceLimitError("exhaustive bipartition search on " + std::to_string(code.n) +
                                 " qubits exceeds the limit of " + std::to_string(options.exhaustive_limit));
      }
      if (code.n > 63) {
        throw ResourceLimitError("exhaustive bipartition search needs fewer than 64 qubits");
      }
      return exhaustive(scorer, options);
    case LowerBoundStrategy::Random:
      return randomized(scorer, options);
    case LowerBoundStrategy::Greedy: {
      std::vector<std::size_t> start = scorer.pivot_subset();
      if (start.empty() && code.n > 1) start.push_back(0);
      return greedy_ascent(scorer, std::move(start));
    }
    case LowerBoundStrategy::Witness: {
      LowerBoundResult result;
      result.strategy = LowerBoundStrategy::Witness;
      result.witness = scorer.score(scorer.pivot_subset());
      result.value = result.witness.rank;
      result.evaluated = 1;
      result.skipped = result.witness.method == BipartitionMethod::Skipped ? 1 : 0;
      return result;
    }
  }
  throw std::invalid_argument("lower_bound: unknown strategy");
}

namespace {

double ceil_log2(std::size_t n) { return static_cast<double>(std::bit_width(n - 1)); }

bool is_pasted_length(std::size_t n) {
  if (n == 13) return true;
  for (std::size_t m = 2; m < 31; ++m) {
    const std::size_t base = ((std::size_t{1} << (2 * m)) - 1) / 3;
    if (m >= 3 && n == base) return true;
    if (n == 8 * base) return true;
    if (base > n) break;
  }
  return false;
}

}  // namespace

FamilyExpectation family_expected(const CodeFamily& fam) {
  return std::visit(
      [](const auto& f) -> FamilyExpectation {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::DualCss>) {
          if (f.k >= f.n || (f.n - f.k) % 2 != 0) {
            throw std::invalid_argument("family_expected: dual-containing CSS needs k < n and n - k even");
          }
          return {static_cast<double>(f.n - f.k) / 2.0, std::nullopt};
        } else if constexpr (std::is_same_v<T, family::Gottesman>) {
          if (f.m < 3 || f.m > 30) {
            throw std::invalid_argument("family_expected: Gottesman codes need 3 <= m <= 30");
          }
          return {static_cast<double>(f.m + 1), std::nullopt};
        } else if constexpr (std::is_same_v<T, family::EightM>) {
          if (f.n < 8 || f.n % 8 != 0) {
            throw std::invalid_argument("family_expected: 8m codes need n = 8m with m >= 1");
          }
          return {ceil_log2(f.n) + 1.0, std::nullopt};
        } else {
          if (!is_pasted_length(f.n)) {
            throw std::invalid_argument("family_expected: no pasted code of length " + std::to_string(f.n));
          }
          return {ceil_log2(f.n), ceil_log2(f.n) + 1.0};
        }
      },
      fam);
}

}  // namespace stabent
