#include "stabent/graph_state.hpp"

#include <sstream>
#include <stdexcept>

#include "stabent/errors.hpp"

namespace stabent {

GraphStateForm css_to_graph(const CssSpec& spec, const std::vector<PauliOperator>& logical_z) {
  const StabilizerCode code = css(spec);
  const std::size_t n = code.n;
  const std::size_t l = spec.U.rows();

  // U -> [I D]: pivot qubits first, then the rest in ascending order.
  const RrefResult red_u = rref(spec.U);
  std::vector<std::size_t> perm = red_u.pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : perm) is_pivot[c] = true;
  for (std::size_t q = 0; q < n; ++q) {
    if (!is_pivot[q]) perm.push_back(q);
  }
  const F2Matrix u_perm = red_u.reduced.select_columns(perm);

  F2Matrix z_rows = spec.V.rows() > 0 ? spec.V : F2Matrix(0, n);
  for (const auto& w : logical_z) {
    if (w.num_qubits() != n || !w.is_z_type()) {
      throw std::invalid_argument("css_to_graph: logical operators must be Z-type on n qubits");
    }
    z_rows.append_row(w.z());
  }
  if (z_rows.rows() != n - l) {
    throw std::invalid_argument("css_to_graph: V and the logical Z operators must give n - l rows");
  }
  // [V; W] on the permuted qubits is [Y D^T | Y] with Y invertible; reduce its last block to I.
  std::vector<std::size_t> tail(perm.begin() + static_cast<std::ptrdiff_t>(l), perm.end());
  const RrefResult red_z = rref(z_rows, tail);
  if (red_z.rank() != n - l) {
    throw std::logic_error("css_to_graph: Z block on the non-pivot qubits is singular");
  }
  const F2Matrix z_perm = red_z.reduced.select_columns(perm);

  GraphStateForm g;
  g.l = l;
  g.qubit_perm = perm;
  g.D = u_perm.block(0, l, l, n - l);
  if (!(z_perm.block(0, 0, n - l, l) == g.D.transpose())) {
    throw std::logic_error("css_to_graph: reduced Z block is not [D^T I]");
  }
  g.adjacency = F2Matrix(n, n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < n - l; ++j) {
      if (g.D.get(i, j)) {
        g.adjacency.set(i, l + j);
        g.adjacency.set(l + j, i);
      }
    }
  }
  g.hadamard.assign(n, false);
  for (std::size_t v = l; v < n; ++v) g.hadamard[perm[v]] = true;
  return g;
}

GraphStateForm css_to_graph(const CssSpec& spec) {
  return css_to_graph(spec, complete_logicals(css(spec)));
}

CssSpec css_spec_from_code(const StabilizerCode& code) {
  CssSpec spec{F2Matrix(0, code.n), F2Matrix(0, code.n)};
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    const auto& g = code.generators[i];
    if (g.is_x_type()) {
      spec.U.append_row(g.x());
    } else if (g.is_z_type()) {
      spec.V.append_row(g.z());
    } else {
      throw UnsupportedInputError("generator " + std::to_string(i + 1) +
                                  " mixes X and Z; graph conversion needs a CSS code");
    }
  }
  return spec;
}

GraphBounds graph_bounds(const GraphStateForm& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t l = g.l;
  if (l > n || !g.adjacency.is_symmetric()) {
    throw UnsupportedInputError("graph_bounds: adjacency is not symmetric");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacency.get(i, j) && ((i < l) == (j < l))) {
        throw UnsupportedInputError("graph_bounds: adjacency is not two-coloured by the first l vertices");
      }
    }
  }
  return GraphBounds{l, rank(g.adjacency.block(0, l, l, n - l))};
}

std::vector<PauliOperator> graph_stabilizer(const GraphStateForm& g) {
  const std::size_t n = g.num_vertices();
  std::vector<PauliOperator> gens;
  gens.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    BitVec x(n);
    x.set(v);
    gens.emplace_back(std::move(x), g.adjacency.row(v));
  }
  return gens;
}

std::vector<std::pair<std::size_t, std::size_t>> graph_edges(const GraphStateForm& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v) {
      if (g.adjacency.get(u, v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::string format_edge_list(const GraphStateForm& g) {
  std::ostringstream out;
  out << "# vertex -> code qubit:";
  for (std::size_t v = 0; v < g.qubit_perm.size(); ++v) out << ' ' << v << ':' << g.qubit_perm[v];
  out << "\n# hadamard on vertices " << g.l << ".." << (g.num_vertices() == 0 ? 0 : g.num_vertices() - 1) << '\n';
  out << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : graph_edges(g)) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace stabent
