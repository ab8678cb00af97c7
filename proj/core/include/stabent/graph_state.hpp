#pragma once

// Local-Clifford conversion of CSS codewords to graph states.
//
// With U reduced to [I D] (qubits relabelled) and the Z-type rows plus the
// logical Z operators reduced to [D^T I], a Hadamard on the last n-l qubits
// turns the codeword into the graph state with adjacency [[0, D], [D^T, 0]].

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stabent/codes.hpp"
#include "stabent/f2.hpp"
#include "stabent/pauli.hpp"

namespace stabent {

struct GraphStateForm {
  F2Matrix adjacency;                   ///< n x n over vertices; vertex v is code qubit qubit_perm[v]
  std::vector<bool> hadamard;           ///< per original qubit: true if it received a Hadamard
  std::vector<std::size_t> qubit_perm;  ///< vertex v -> original qubit
  std::size_t l = 0;                    ///< size of the first colour class (rank of U)
  F2Matrix D;                           ///< l x (n - l)

  std::size_t num_vertices() const noexcept { return adjacency.rows(); }
};

/// `logical_z` must complete V to n - l independent Z-type rows, as returned by
/// complete_logicals (only the Z-parts are used). Throws ValidationError on an
/// invalid spec and std::logic_error if the completed Z block is singular.
GraphStateForm css_to_graph(const CssSpec& spec, const std::vector<PauliOperator>& logical_z);

/// Same, with logical Z operators from complete_logicals(css(spec)).
GraphStateForm css_to_graph(const CssSpec& spec);

/// Recovers U and V from a code whose generators are each X-type or Z-type.
/// Throws UnsupportedInputError otherwise.
CssSpec css_spec_from_code(const StabilizerCode& code);

struct GraphBounds {
  std::size_t upper = 0;  ///< l
  std::size_t lower = 0;  ///< rank D = rank(gamma) / 2
};

/// Throws UnsupportedInputError unless the adjacency is blocked as [[0, D], [D^T, 0]].
GraphBounds graph_bounds(const GraphStateForm& g);

/// Generators X_v Z^(gamma_v) on the vertices (vertex order, not original qubit order).
std::vector<PauliOperator> graph_stabilizer(const GraphStateForm& g);

/// Edges (u, v) with u < v, in vertex labels.
std::vector<std::pair<std::size_t, std::size_t>> graph_edges(const GraphStateForm& g);

/// Text edge list: a header comment, then "n <count>", then one "u v" pair per line.
std::string format_edge_list(const GraphStateForm& g);

}  // namespace stabent
