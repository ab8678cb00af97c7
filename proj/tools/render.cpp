#include "render.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <string>
#include <vector>

#include "stabent/pauli.hpp"

namespace stabent::cli {

namespace {

std::vector<std::string> generator_strings(const StabilizerCode& code) {
  std::vector<std::string> out;
  out.reserve(code.generators.size());
  for (const auto& g : code.generators) out.push_back(format_pauli(g));
  return out;
}

std::vector<std::string> sequence_strings(const std::vector<Measurement>& seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const auto& m : seq) out.push_back(fmt::format("{}{}", static_cast<char>(m.basis), m.qubit));
  return out;
}

std::vector<std::string> matrix_rows(const F2Matrix& m) {
  std::vector<std::string> out;
  out.reserve(m.rows());
  for (const auto& row : m.row_vectors()) out.push_back(row.to_string());
  return out;
}

std::vector<std::size_t> hadamard_qubits(const GraphStateForm& g) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < g.hadamard.size(); ++q) {
    if (g.hadamard[q]) out.push_back(q);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json graph_to_json(const GraphStateForm& graph, const GraphBounds& bounds) {
  nlohmann::ordered_json j;
  j["vertices"] = graph.num_vertices();
  j["l"] = graph.l;
  j["qubit_perm"] = graph.qubit_perm;
  j["hadamard_qubits"] = hadamard_qubits(graph);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : graph_edges(graph)) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["gamma_block"] = matrix_rows(graph.D);
  j["bounds"] = {{"upper", bounds.upper}, {"lower", bounds.lower}};
  return j;
}

std::string graph_to_text(const GraphStateForm& graph, const GraphBounds& bounds) {
  std::string out = format_edge_list(graph);
  out += fmt::format("# gamma block D ({} x {})\n", graph.D.rows(), graph.D.cols());
  for (const auto& row : matrix_rows(graph.D)) out += fmt::format("#   {}\n", row);
  out += fmt::format("# graph bounds: E_u = {}, E_l = {}\n", bounds.upper, bounds.lower);
  return out;
}

nlohmann::ordered_json report_to_json(const EntanglementReport& report, double timing_ms) {
  nlohmann::ordered_json j;
  j["code"] = {{"n", report.code.n}, {"k", report.code.k}, {"generators", generator_strings(report.code)}};

  nlohmann::ordered_json upper;
  upper["value"] = report.upper;
  upper["method"] = report.upper_method;
  upper["non_z_generators"] = report.nonz_bound;
  if (report.persistency) {
    upper["persistency"] = {{"count", report.persistency->count},
                            {"sequence", sequence_strings(report.persistency->sequence)},
                            {"minimal", report.persistency->minimal},
                            {"nodes", report.persistency->nodes}};
  }
  nlohmann::ordered_json lower;
  lower["value"] = report.lower.value;
  lower["witness_subset"] = report.lower.witness.subset;
  lower["method"] = std::string(to_string(report.lower.strategy));
  lower["witness_method"] = std::string(to_string(report.lower.witness.method));
  lower["evaluated"] = report.lower.evaluated;
  lower["skipped"] = report.lower.skipped;
  j["bounds"] = {{"upper", std::move(upper)}, {"lower", std::move(lower)}};

  nlohmann::ordered_json ent;
  ent["value"] = report.value;
  ent["exact"] = report.exact;
  if (report.iteration) {
    ent["iterations"] = report.iteration->iterations;
    ent["residual"] = report.iteration->residual;
    ent["starts"] = report.iteration->starts_used;
    ent["converged"] = report.iteration->converged;
    ent["best_start"] = report.iteration->best_start;
  } else {
    ent["iterations"] = 0;
    ent["residual"] = 0.0;
    ent["starts"] = 0;
  }
  if (report.oracle_value) ent["oracle_value"] = *report.oracle_value;
  j["entanglement"] = std::move(ent);

  if (report.graph && report.graph_bounds) j["graph"] = graph_to_json(*report.graph, *report.graph_bounds);
  if (!report.warnings.empty()) j["warnings"] = report.warnings;
  j["timing_ms"] = timing_ms;
  return j;
}

std::string report_to_text(const EntanglementReport& report, double timing_ms) {
  std::string out;
  out += fmt::format("code: n = {}, k = {}, {} generators\n", report.code.n, report.code.k,
                     report.code.generators.size());
  for (const auto& g : generator_strings(report.code)) out += fmt::format("  {}\n", g);

  out += fmt::format("upper bound E_u = {} ({}; non-Z generators: {})\n", report.upper, report.upper_method,
                     report.nonz_bound);
  if (report.persistency) {
    out += fmt::format("  persistency {}: {}{}\n", report.persistency->count,
                       fmt::join(sequence_strings(report.persistency->sequence), " "),
                       report.persistency->minimal ? "" : " (not proved minimal)");
  }
  out += fmt::format("lower bound E_l = {} ({}; witness {{{}}}, {})\n", report.lower.value,
                     to_string(report.lower.strategy), fmt::join(report.lower.witness.subset, ","),
                     to_string(report.lower.witness.method));

  if (report.exact) {
    out += fmt::format("entanglement E = {} (exact: bounds coincide)\n", report.value);
  } else if (report.iteration) {
    out += fmt::format("entanglement E = {} (iteration estimate, an upper bound on E)\n", report.value);
    out += fmt::format("  iterations {}, residual {}, starts {}, converged {}\n", report.iteration->iterations,
                       report.iteration->residual, report.iteration->starts_used,
                       report.iteration->converged ? "yes" : "no");
    if (report.oracle_value) out += fmt::format("  dense check {}\n", *report.oracle_value);
  }
  if (report.graph && report.graph_bounds) {
    out += fmt::format("graph state: {} vertices, {} edges, bounds E_u = {}, E_l = {}\n", report.graph->num_vertices(),
                       graph_edges(*report.graph).size(), report.graph_bounds->upper, report.graph_bounds->lower);
  }
  for (const auto& w : report.warnings) out += fmt::format("warning: {}\n", w);
  out += fmt::format("timing_ms {}\n", timing_ms);
  return out;
}

}  // namespace stabent::cli
