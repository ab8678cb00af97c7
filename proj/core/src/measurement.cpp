#include "stabent/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace stabent {

namespace {

constexpr PauliBasis kBases[3] = {PauliBasis::Z, PauliBasis::X, PauliBasis::Y};

bool anticommutes_with_single(const BitVec& x, const BitVec& z, std::size_t q, PauliBasis basis) {
  switch (basis) {
    case PauliBasis::X:
      return z.get(q);
    case PauliBasis::Z:
      return x.get(q);
    case PauliBasis::Y:
      return x.get(q) != z.get(q);
  }
  return false;
}

std::size_t pair_rank(const F2Matrix& sym, std::size_t n, std::size_t q) {
  bool seen[4] = {false, false, false, false};
  for (std::size_t i = 0; i < sym.rows(); ++i) {
    seen[(sym.get(i, q) ? 1 : 0) | (sym.get(i, n + q) ? 2 : 0)] = true;
  }
  const int distinct = seen[1] + seen[2] + seen[3];
  return distinct >= 2 ? 2 : static_cast<std::size_t>(distinct);
}

std::size_t cut_entropy_sym(const F2Matrix& sym, std::size_t n, std::span<const std::size_t> subset) {
  std::vector<std::size_t> cols;
  cols.reserve(2 * subset.size());
  for (std::size_t q : subset) cols.push_back(q);
  for (std::size_t q : subset) cols.push_back(n + q);
  return rank(sym.select_columns(cols)) - subset.size();
}

/// Unsigned update: the group generated by `sym` after measuring the single-qubit Pauli.
F2Matrix measure_unsigned(const F2Matrix& sym, std::size_t n, std::size_t q, PauliBasis basis) {
  F2Matrix out = sym;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    const bool x = out.get(i, q);
    const bool z = out.get(i, n + q);
    const bool anti = basis == PauliBasis::X ? z : basis == PauliBasis::Z ? x : (x != z);
    if (!anti) continue;
    if (!first) {
      first = i;
    } else {
      out.add_row(i, *first);
    }
  }
  if (first) {
    BitVec p(2 * n);
    if (basis != PauliBasis::Z) p.set(q);
    if (basis != PauliBasis::X) p.set(n + q);
    out.row(*first) = std::move(p);
  }
  return out;
}

class PersistencySearch {
 public:
  PersistencySearch(std::size_t n, std::vector<std::size_t> order, std::vector<std::vector<std::size_t>> cuts,
                    std::size_t max_nodes)
      : n_(n), order_(std::move(order)), cuts_(std::move(cuts)), max_nodes_(max_nodes) {}

  std::size_t bound(const F2Matrix& sym) const {
    std::size_t best = 0;
    for (const auto& cut : cuts_) best = std::max(best, cut_entropy_sym(sym, n_, cut));
    return best;
  }

  /// True when a sequence of at most `depth` measurements on order_[start..] disentangles `sym`.
  bool search(const F2Matrix& sym, std::size_t start, std::size_t depth, std::vector<Measurement>& path) {
    if (aborted_) return false;
    if (++nodes_ > max_nodes_) {
      aborted_ = true;
      return false;
    }
    std::vector<std::size_t> entangled;
    for (std::size_t pos = 0; pos < n_; ++pos) {
      if (pair_rank(sym, n_, order_[pos]) == 2) entangled.push_back(pos);
    }
    if (entangled.empty()) return true;
    if (depth == 0) return false;
    if (bound(sym) > depth) return false;

    const std::string key = canonical_key(sym, start);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth) return false;

    for (std::size_t pos : entangled) {
      if (pos < start) continue;
      const std::size_t q = order_[pos];
      for (PauliBasis basis : kBases) {
        path.push_back({q, basis});
        if (search(measure_unsigned(sym, n_, q, basis), pos + 1, depth - 1, path)) return true;
        path.pop_back();
        if (aborted_) return false;
      }
    }
    auto& slot = failed_[key];
    slot = std::max(slot, depth);
    return false;
  }

  std::size_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

 private:
  std::string canonical_key(const F2Matrix& sym, std::size_t start) const {
    const RrefResult red = rref(sym);
    std::string key;
    key.reserve(red.reduced.rows() * red.reduced.row(0).words().size() * 8 + 8);
    for (const auto& row : red.reduced.row_vectors()) {
      for (auto w : row.words()) key.append(reinterpret_cast<const char*>(&w), sizeof(w));
    }
    key.append(reinterpret_cast<const char*>(&start), sizeof(start));
    return key;
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> cuts_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::unordered_map<std::string, std::size_t> failed_;
};

}  // namespace

CodewordStabilizerState CodewordStabilizerState::from_code(const StabilizerCode& code) {
  return CodewordStabilizerState{code.n, codeword_stabilizer(code)};
}

F2Matrix CodewordStabilizerState::symplectic_matrix() const {
  F2Matrix m(0, 2 * n);
  for (const auto& g : full_gens) m.append_row(g.symplectic());
  return m;
}

std::vector<MeasurementBranch> measure(const CodewordStabilizerState& state, std::size_t qubit, PauliBasis basis) {
  if (qubit >= state.n) {
    throw std::out_of_range("measure: qubit " + std::to_string(qubit) + " out of range");
  }
  const PauliOperator p = PauliOperator::single(state.n, qubit, static_cast<char>(basis));
  std::vector<std::size_t> anti;
  for (std::size_t i = 0; i < state.full_gens.size(); ++i) {
    const auto& g = state.full_gens[i];
    if (anticommutes_with_single(g.x(), g.z(), qubit, basis)) anti.push_back(i);
  }

  if (anti.empty()) {
    // +-P is in the group: find the product of generators that equals it.
    const auto combo = solve(state.symplectic_matrix(), p.symplectic(), SolveSide::Left);
    if (!combo) {
      throw std::logic_error("measure: commuting Pauli is not in a maximal stabilizer group");
    }
    PauliOperator prod(state.n);
    for (std::size_t i = 0; i < state.full_gens.size(); ++i) {
      if (combo->get(i)) prod *= state.full_gens[i];
    }
    return {MeasurementBranch{prod == p ? 1 : -1, 1.0, state}};
  }

  CodewordStabilizerState base = state;
  const std::size_t pivot = anti.front();
  for (std::size_t j = 1; j < anti.size(); ++j) {
    base.full_gens[anti[j]] *= state.full_gens[pivot];
  }
  std::vector<MeasurementBranch> branches;
  for (int outcome : {1, -1}) {
    MeasurementBranch b{outcome, 0.5, base};
    b.state.full_gens[pivot] = outcome == 1 ? p : p.negated();
    branches.push_back(std::move(b));
  }
  return branches;
}

std::size_t cut_entropy(const CodewordStabilizerState& state, std::span<const std::size_t> subset) {
  for (std::size_t q : subset) {
    if (q >= state.n) throw std::out_of_range("cut_entropy: qubit out of range");
  }
  return cut_entropy_sym(state.symplectic_matrix(), state.n, subset);
}

bool is_qubit_product(const CodewordStabilizerState& state, std::size_t qubit) {
  if (qubit >= state.n) throw std::out_of_range("is_qubit_product: qubit out of range");
  return pair_rank(state.symplectic_matrix(), state.n, qubit) < 2;
}

bool is_product(const CodewordStabilizerState& state) {
  const F2Matrix sym = state.symplectic_matrix();
  for (std::size_t q = 0; q < state.n; ++q) {
    if (pair_rank(sym, state.n, q) == 2) return false;
  }
  return true;
}

ProductStateParams product_state_params(const CodewordStabilizerState& state) {
  const F2Matrix sym = state.symplectic_matrix();
  const double h = 1.0 / std::sqrt(2.0);
  ProductStateParams out;
  out.x.resize(state.n);
  out.y.resize(state.n);
  for (std::size_t q = 0; q < state.n; ++q) {
    bool found = false;
    for (PauliBasis basis : kBases) {
      const PauliOperator p = PauliOperator::single(state.n, q, static_cast<char>(basis));
      const auto combo = solve(sym, p.symplectic(), SolveSide::Left);
      if (!combo) continue;
      PauliOperator prod(state.n);
      for (std::size_t i = 0; i < state.full_gens.size(); ++i) {
        if (combo->get(i)) prod *= state.full_gens[i];
      }
      const bool plus = prod == p;
      switch (basis) {
        case PauliBasis::Z:
          out.x[q] = plus ? 1.0 : 0.0;
          out.y[q] = plus ? 0.0 : 1.0;
          break;
        case PauliBasis::X:
          out.x[q] = h;
          out.y[q] = plus ? h : -h;
          break;
        case PauliBasis::Y:
          out.x[q] = h;
          out.y[q] = plus ? Amplitude(0.0, h) : Amplitude(0.0, -h);
          break;
      }
      found = true;
      break;
    }
    if (!found) {
      throw std::invalid_argument("product_state_params: qubit " + std::to_string(q) + " is entangled");
    }
  }
  return out;
}

PersistencyResult persistency(const StabilizerCode& code, const PersistencyOptions& options) {
  const CodewordStabilizerState root_state = CodewordStabilizerState::from_code(code);
  const std::size_t n = code.n;
  const F2Matrix root = root_state.symplectic_matrix();
  const GeneratorSplit split = split_generators(code);
  const std::size_t r = split.r();
  const std::size_t budget = options.budget.value_or(std::min(n, 2 * r));

  // Move ordering: qubits touched by more generators first.
  std::vector<std::size_t> incidence(n, 0);
  for (const auto& g : code.generators) {
    for (std::size_t q = 0; q < n; ++q) {
      if (g.x().get(q) || g.z().get(q)) ++incidence[q];
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return incidence[a] > incidence[b]; });

  std::vector<std::vector<std::size_t>> cuts = options.bound_cuts;
  {
    std::vector<std::size_t> pivots = split.x_pivots;
    std::sort(pivots.begin(), pivots.end());
    if (!pivots.empty()) cuts.push_back(std::move(pivots));
    std::vector<std::size_t> half(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n / 2));
    if (!half.empty()) cuts.push_back(std::move(half));
    std::vector<std::size_t> low;
    for (std::size_t q = 0; q < n / 2; ++q) low.push_back(q);
    if (!low.empty()) cuts.push_back(std::move(low));
    std::vector<std::size_t> even;
    for (std::size_t q = 0; q < n; q += 2) even.push_back(q);
    if (n > 1) cuts.push_back(std::move(even));
  }

  // Initial upper bound: Z on every pivot qubit that is still entangled.
  PersistencyResult result;
  {
    F2Matrix sym = root;
    std::vector<std::size_t> pivots = split.x_pivots;
    std::sort(pivots.begin(), pivots.end());
    for (std::size_t q : pivots) {
      if (pair_rank(sym, n, q) < 2) continue;
      result.sequence.push_back({q, PauliBasis::Z});
      sym = measure_unsigned(sym, n, q, PauliBasis::Z);
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (pair_rank(sym, n, q) == 2) {
        throw std::logic_error("persistency: Z on the pivot qubits did not disentangle the codeword");
      }
    }
    result.count = result.sequence.size();
  }

  PersistencySearch search(n, order, std::move(cuts), options.max_nodes);
  result.lower_bound = search.bound(root);
  if (result.lower_bound >= result.count) {
    result.minimal = true;
    return result;
  }

  const std::size_t deepest = std::min(budget, result.count - 1);
  bool proved = false;
  for (std::size_t depth = result.lower_bound; depth <= deepest; ++depth) {
    std::vector<Measurement> path;
    if (search.search(root, 0, depth, path)) {
      result.count = path.size();
      result.sequence = std::move(path);
      proved = true;
      break;
    }
    if (search.aborted()) break;
  }
  result.nodes = search.nodes();
  // Without a hit, minimality is proved only if every depth below the current count was exhausted.
  result.minimal = proved || (!search.aborted() && deepest + 1 >= result.count);
  return result;
}

LeafProductState leaf_product_state(const StabilizerCode& code, std::span<const Measurement> sequence) {
  LeafProductState leaf;
  leaf.state = CodewordStabilizerState::from_code(code);
  for (const auto& m : sequence) {
    auto branches = measure(leaf.state, m.qubit, m.basis);
    leaf.overlap_probability *= branches.front().probability;
    leaf.state = std::move(branches.front().state);
  }
  leaf.params = product_state_params(leaf.state);
  return leaf;
}

}  // namespace stabent
