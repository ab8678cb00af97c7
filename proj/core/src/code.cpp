#include "stabent/code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stabent/errors.hpp"

namespace stabent {

StabilizerCode StabilizerCode::from_generators(std::vector<PauliOperator> generators) {
  StabilizerCode code;
  code.n = generators.empty() ? 0 : generators.front().num_qubits();
  code.k = code.n >= generators.size() ? code.n - generators.size() : 0;
  code.generators = std::move(generators);
  return code;
}

F2Matrix StabilizerCode::x_part() const {
  std::vector<BitVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(g.x());
  return F2Matrix::from_rows(std::move(rows), n);
}

F2Matrix StabilizerCode::z_part() const {
  std::vector<BitVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(g.z());
  return F2Matrix::from_rows(std::move(rows), n);
}

F2Matrix StabilizerCode::symplectic_matrix() const {
  std::vector<BitVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(g.symplectic());
  return F2Matrix::from_rows(std::move(rows), 2 * n);
}

ValidationReport validate_code(const StabilizerCode& code) {
  ValidationReport report;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (code.generators[i].num_qubits() != code.n) {
      report.sizes_consistent = false;
      report.failures.push_back("generator " + std::to_string(i) + " acts on " +
                                std::to_string(code.generators[i].num_qubits()) + " qubits, expected " +
                                std::to_string(code.n));
    }
  }
  if (code.generators.size() + code.k != code.n) {
    report.sizes_consistent = false;
    report.failures.push_back("generator count " + std::to_string(code.generators.size()) +
                              " does not equal n - k = " + std::to_string(code.n) + " - " +
                              std::to_string(code.k));
  }
  if (!report.sizes_consistent) {
    return report;
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (!code.generators[i].is_hermitian()) {
      report.hermitian = false;
      report.failures.push_back("generator " + std::to_string(i) + " is not Hermitian");
    }
    if (code.generators[i].is_identity_up_to_phase()) {
      report.independent = false;
      report.failures.push_back("generator " + std::to_string(i) + " is the identity");
    }
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!commutes(code.generators[i], code.generators[j])) {
        report.commuting = false;
        report.failures.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                  " anticommute");
      }
    }
  }
  if (report.independent && rank(code.symplectic_matrix()) != code.generators.size()) {
    report.independent = false;
    report.failures.push_back("generators are not independent");
  }
  return report;
}

void require_valid(const StabilizerCode& code) {
  auto report = validate_code(code);
  if (!report.ok()) {
    throw ValidationError("invalid stabilizer code: " + report.failures.front());
  }
}

GeneratorSplit split_generators(const StabilizerCode& code) {
  std::vector<PauliOperator> rows = code.generators;
  GeneratorSplit split;
  auto add = [&](std::size_t target, std::size_t source) {
    rows[target] *= rows[source];
    split.generator_ops.push_back(RowOp{RowOp::Kind::Add, target, source});
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    std::swap(rows[a], rows[b]);
    split.generator_ops.push_back(RowOp{RowOp::Kind::Swap, a, b});
  };

  // Reduced echelon form of the X-part, pivots at the lowest available qubit.
  std::size_t next = 0;
  for (std::size_t q = 0; q < code.n && next < rows.size(); ++q) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].x().get(q)) ++pivot;
    if (pivot == rows.size()) continue;
    if (pivot != next) swap(pivot, next);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].x().get(q)) add(i, next);
    }
    split.x_pivots.push_back(q);
    ++next;
  }
  const std::size_t r = next;

  // The Z-type tail, reduced on its Z-part.
  std::size_t znext = r;
  for (std::size_t q = 0; q < code.n && znext < rows.size(); ++q) {
    std::size_t pivot = znext;
    while (pivot < rows.size() && !rows[pivot].z().get(q)) ++pivot;
    if (pivot == rows.size()) continue;
    if (pivot != znext) swap(pivot, znext);
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (i != znext && rows[i].z().get(q)) add(i, znext);
    }
    ++znext;
  }

  split.non_z.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(r));
  split.z_type.assign(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end());
  return split;
}

F2Matrix StandardFormResult::D() const { return code.x_part().block(0, r, r, code.n - r); }
F2Matrix StandardFormResult::F() const { return code.z_part().block(0, 0, r, r); }
F2Matrix StandardFormResult::G() const { return code.z_part().block(0, r, r, code.n - r); }
F2Matrix StandardFormResult::J() const {
  return code.z_part().block(r, 0, code.generators.size() - r, r);
}
F2Matrix StandardFormResult::K() const {
  return code.z_part().block(r, r, code.generators.size() - r, code.n - r);
}

std::vector<PauliOperator> StandardFormResult::generators_in_original_labels() const {
  std::vector<std::size_t> inverse(qubit_perm.size());
  for (std::size_t i = 0; i < qubit_perm.size(); ++i) inverse[qubit_perm[i]] = i;
  std::vector<PauliOperator> out;
  out.reserve(code.generators.size());
  for (const auto& g : code.generators) out.push_back(g.permuted(inverse));
  return out;
}

StandardFormResult standard_form(const StabilizerCode& code) {
  require_valid(code);
  GeneratorSplit split = split_generators(code);

  StandardFormResult result;
  result.r = split.r();
  result.generator_ops = std::move(split.generator_ops);
  std::vector<bool> is_pivot(code.n, false);
  for (std::size_t q : split.x_pivots) {
    result.qubit_perm.push_back(q);
    is_pivot[q] = true;
  }
  for (std::size_t q = 0; q < code.n; ++q) {
    if (!is_pivot[q]) result.qubit_perm.push_back(q);
  }

  std::vector<PauliOperator> gens;
  gens.reserve(code.generators.size());
  for (const auto& g : split.non_z) gens.push_back(g.permuted(result.qubit_perm));
  for (const auto& g : split.z_type) gens.push_back(g.permuted(result.qubit_perm));
  result.code = StabilizerCode::from_generators(std::move(gens));
  result.code.n = code.n;
  result.code.k = code.k;
  if (code.logical_z) {
    std::vector<PauliOperator> logicals;
    for (const auto& l : *code.logical_z) logicals.push_back(l.permuted(result.qubit_perm));
    result.code.logical_z = std::move(logicals);
  }
  return result;
}

BitVec base_state(const StabilizerCode& code) {
  GeneratorSplit split = split_generators(code);
  F2Matrix zrows(0, code.n);
  BitVec rhs(split.z_type.size());
  for (std::size_t i = 0; i < split.z_type.size(); ++i) {
    const auto& g = split.z_type[i];
    zrows.append_row(g.z());
    // Z-type and Hermitian: phase is 0 (+) or 2 (-). Need (-1)^(z.s) = sign.
    if (g.phase_exp() == 2) rhs.set(i);
  }
  if (split.z_type.empty()) {
    return BitVec(code.n);
  }
  auto s = solve(zrows, rhs, SolveSide::Right);
  if (!s) {
    throw std::logic_error("base_state: Z-type sign constraints are inconsistent");
  }
  return *s;
}

std::vector<PauliOperator> complete_logicals(const StabilizerCode& code) {
  require_valid(code);
  GeneratorSplit split = split_generators(code);
  const BitVec s = base_state(code);

  F2Matrix span(0, code.n);
  for (const auto& g : split.z_type) span.append_row(g.z());
  std::size_t current = rank(span);

  std::vector<PauliOperator> logicals;
  for (auto& w : null_space(code.x_part())) {
    if (logicals.size() == code.k) break;
    F2Matrix trial = span;
    trial.append_row(w);
    if (rank(trial) == current + 1) {
      span = std::move(trial);
      ++current;
      const unsigned phase = w.dot(s) ? 2U : 0U;
      logicals.emplace_back(BitVec(code.n), w, phase);
    }
  }
  if (logicals.size() != code.k) {
    throw std::logic_error("complete_logicals: could not find k independent logical Z operators");
  }
  return logicals;
}

std::vector<PauliOperator> codeword_stabilizer(const StabilizerCode& code) {
  std::vector<PauliOperator> full = code.generators;
  auto logicals = complete_logicals(code);
  full.insert(full.end(), logicals.begin(), logicals.end());
  return full;
}

std::size_t z_type_count(const StabilizerCode& code) {
  require_valid(code);
  return code.generators.size() - rank(code.x_part());
}

StabilizerCode parse_code(std::string_view text) {
  std::vector<PauliOperator> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    try {
      gens.push_back(parse_pauli(line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column());
    }
    if (gens.back().num_qubits() != gens.front().num_qubits()) {
      throw ParseError("row has " + std::to_string(gens.back().num_qubits()) + " qubits, expected " +
                           std::to_string(gens.front().num_qubits()),
                       line_no, first + 1);
    }
    if (end == text.size()) break;
  }
  if (gens.empty()) {
    throw ParseError("no generators found");
  }
  if (gens.size() > gens.front().num_qubits()) {
    throw ValidationError("invalid stabilizer code: more generators than qubits");
  }
  StabilizerCode code = StabilizerCode::from_generators(std::move(gens));
  require_valid(code);
  return code;
}

std::string format_code(const StabilizerCode& code, std::string_view header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) {
    std::string_view rest = header_comment;
    while (!rest.empty()) {
      auto nl = rest.find('\n');
      out << "# " << rest.substr(0, nl) << '\n';
      if (nl == std::string_view::npos) break;
      rest = rest.substr(nl + 1);
    }
  }
  for (const auto& g : code.generators) {
    out << format_pauli(g) << '\n';
  }
  return out.str();
}

}  // namespace stabent
