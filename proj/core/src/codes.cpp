#include "stabent/codes.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "stabent/errors.hpp"

namespace stabent {

namespace {

/// Hermitian operator with X-part x and Z-part z and sign +1.
PauliOperator positive_pauli(BitVec x, BitVec z) {
  const unsigned y = static_cast<unsigned>(x.and_count(z) & 3U);
  return PauliOperator(std::move(x), std::move(z), y);
}

// Low coefficients c_0..c_{m-1} of x^m + ... + c_0, bit i = c_i.
constexpr std::array<unsigned, 11> kPrimitiveLow = {
    0, 0, 0,
    0b011,         // x^3 + x + 1
    0b0011,        // x^4 + x + 1
    0b00101,       // x^5 + x^2 + 1
    0b000011,      // x^6 + x + 1
    0b0000011,     // x^7 + x + 1
    0b00011101,    // x^8 + x^4 + x^3 + x^2 + 1
    0b000010001,   // x^9 + x^4 + 1
    0b0000001001,  // x^10 + x^3 + 1
};

}  // namespace

StabilizerCode css(const CssSpec& spec) {
  const std::size_t n = spec.U.rows() > 0 ? spec.U.cols() : spec.V.cols();
  if ((spec.U.rows() > 0 && spec.U.cols() != n) || (spec.V.rows() > 0 && spec.V.cols() != n)) {
    throw ValidationError("css: U and V have different column counts");
  }
  if (n == 0) throw ValidationError("css: no qubits");
  if (rank(spec.U) != spec.U.rows()) throw ValidationError("css: rows of U are dependent");
  if (rank(spec.V) != spec.V.rows()) throw ValidationError("css: rows of V are dependent");
  if (spec.U.rows() > 0 && spec.V.rows() > 0 && !(spec.U * spec.V.transpose()).is_zero()) {
    throw ValidationError("css: U V^T != 0, generators do not commute");
  }
  std::vector<PauliOperator> gens;
  for (const auto& row : spec.U.row_vectors()) gens.emplace_back(row, BitVec(n));
  for (const auto& row : spec.V.row_vectors()) gens.emplace_back(BitVec(n), row);
  StabilizerCode code = StabilizerCode::from_generators(std::move(gens));
  require_valid(code);
  return code;
}

bool is_dual_containing(const CssSpec& spec) {
  if (spec.U.cols() != spec.V.cols()) return false;
  if (spec.U.rows() > 0 && !(spec.U * spec.U.transpose()).is_zero()) return false;
  const std::size_t ru = rank(spec.U);
  return ru == rank(spec.V) && rank(spec.U.vstack(spec.V)) == ru;
}

F2Matrix hamming_parity_check(std::size_t m) {
  if (m < 2 || m > 16) throw std::invalid_argument("hamming_parity_check: need 2 <= m <= 16");
  const std::size_t n = (std::size_t{1} << m) - 1;
  F2Matrix h(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < m; ++i) {
      if (((c + 1) >> (m - 1 - i)) & 1U) h.set(i, c);
    }
  }
  return h;
}

CssSpec toric_spec(std::size_t k) {
  if (k < 2) throw std::invalid_argument("toric: lattice size must be at least 2");
  const std::size_t n = 2 * k * k;
  auto v = [k](std::size_t i, std::size_t j) { return (i % k) * k + (j % k); };
  auto h = [k](std::size_t i, std::size_t j) { return k * k + (i % k) * k + (j % k); };
  CssSpec spec{F2Matrix(0, n), F2Matrix(0, n)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == k - 1 && j == k - 1) continue;
      BitVec star(n);
      star.flip(v(i, j));
      star.flip(v(i + k - 1, j));
      star.flip(h(i, j));
      star.flip(h(i, j + k - 1));
      spec.U.append_row(std::move(star));
      BitVec face(n);
      face.flip(v(i, j));
      face.flip(v(i, j + 1));
      face.flip(h(i, j));
      face.flip(h(i + 1, j));
      spec.V.append_row(std::move(face));
    }
  }
  return spec;
}

StabilizerCode toric(std::size_t k) { return css(toric_spec(k)); }

F2Matrix gottesman_default_c(std::size_t m) {
  if (m < 3 || m >= kPrimitiveLow.size()) {
    throw std::invalid_argument("gottesman: no built-in primitive polynomial for m = " + std::to_string(m));
  }
  F2Matrix c(m, m);
  for (std::size_t i = 1; i < m; ++i) c.set(i, i - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if ((kPrimitiveLow[m] >> i) & 1U) c.set(i, m - 1);
  }
  return c;
}

StabilizerCode gottesman(std::size_t m, const std::optional<F2Matrix>& C) {
  if (m < 3) throw std::invalid_argument("gottesman: m must be at least 3");
  if (m > 16) throw ResourceLimitError("gottesman: m above 16 is not supported");
  const F2Matrix c = C ? *C : gottesman_default_c(m);
  if (c.rows() != m || c.cols() != m) {
    throw ValidationError("gottesman: C must be " + std::to_string(m) + " x " + std::to_string(m));
  }
  if (rank(c) != m) throw ValidationError("gottesman: C is singular");
  if (rank(c + F2Matrix::identity(m)) != m) throw ValidationError("gottesman: C has a fixed point (C + I singular)");

  const std::size_t n = std::size_t{1} << m;
  F2Matrix h(m, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < m; ++i) {
      if ((col >> (m - 1 - i)) & 1U) h.set(i, col);
    }
  }
  const F2Matrix ch = c * h;

  std::vector<PauliOperator> gens;
  BitVec ones(n);
  for (std::size_t q = 0; q < n; ++q) ones.set(q);
  gens.push_back(positive_pauli(ones, BitVec(n)));
  gens.push_back(positive_pauli(BitVec(n), ones));
  for (std::size_t i = 0; i < m; ++i) gens.push_back(positive_pauli(h.row(i), ch.row(i)));
  StabilizerCode code = StabilizerCode::from_generators(std::move(gens));
  require_valid(code);
  return code;
}

F2Matrix parse_binary_matrix(std::string_view text) {
  std::vector<BitVec> rows;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string bits;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch != '0' && ch != '1') {
        throw ParseError(std::string("unexpected character '") + ch + "' in binary matrix", line_no, i + 1);
      }
      bits.push_back(ch);
    }
    if (bits.empty()) continue;
    if (!rows.empty() && bits.size() != cols) {
      throw ParseError("row has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(cols),
                       line_no, 1);
    }
    cols = bits.size();
    rows.push_back(BitVec::from_string(bits));
  }
  if (rows.empty()) throw ParseError("binary matrix has no rows", line_no == 0 ? 1 : line_no, 1);
  return F2Matrix::from_rows(std::move(rows), cols);
}

std::string format_binary_matrix(const F2Matrix& m) { return m.to_string(); }

}  // namespace stabent
