#include "stabent/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "stabent/errors.hpp"

namespace stabent {

PauliOperator::PauliOperator(std::size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}

PauliOperator::PauliOperator(BitVec x, BitVec z, unsigned phase_exp)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase_exp & 3U) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PauliOperator: X and Z parts differ in length");
  }
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, char letter) {
  if (qubit >= num_qubits) {
    throw std::out_of_range("PauliOperator::single: qubit out of range");
  }
  PauliOperator p(num_qubits);
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'X':
      p.x_.set(qubit);
      break;
    case 'Z':
      p.z_.set(qubit);
      break;
    case 'Y':
      p.x_.set(qubit);
      p.z_.set(qubit);
      p.phase_ = 1;
      break;
    default:
      throw std::invalid_argument(std::string("PauliOperator::single: bad letter '") + letter + "'");
  }
  return p;
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.words().size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(x_.words()[i] | z_.words()[i]));
  }
  return w;
}

char PauliOperator::letter(std::size_t qubit) const noexcept {
  const bool x = x_.get(qubit);
  const bool z = z_.get(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliOperator::sign() const noexcept {
  const unsigned letter_phase = (phase_ + 4U - static_cast<unsigned>(y_count() & 3U)) & 3U;
  return letter_phase == 2 ? -1 : 1;
}

PauliOperator PauliOperator::negated() const {
  PauliOperator out = *this;
  out.phase_ = (phase_ + 2U) & 3U;
  return out;
}

PauliOperator PauliOperator::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != num_qubits()) {
    throw std::invalid_argument("PauliOperator::permuted: permutation size mismatch");
  }
  return PauliOperator(x_.select(perm), z_.select(perm), phase_);
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  // (i^p X^a Z^b)(i^q X^c Z^d) = i^(p+q) (-1)^(b.c) X^(a+c) Z^(b+d)
  const unsigned swap_sign = z_.dot(rhs.x_) ? 2U : 0U;
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  phase_ = (phase_ + rhs.phase_ + swap_sign) & 3U;
  return *this;
}

PauliOperator parse_pauli(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  std::string letters;
  std::vector<std::size_t> columns;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'I' && u != 'X' && u != 'Y' && u != 'Z') {
      throw ParseError(std::string("unexpected character '") + c + "' in Pauli string", 1, pos + 1);
    }
    letters.push_back(u);
    columns.push_back(pos + 1);
  }
  if (letters.empty()) {
    throw ParseError("empty Pauli string", 1, pos + 1);
  }
  const std::size_t n = letters.size();
  BitVec x(n);
  BitVec z(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (letters[j]) {
      case 'X':
        x.set(j);
        break;
      case 'Z':
        z.set(j);
        break;
      case 'Y':
        x.set(j);
        z.set(j);
        phase += 1;
        break;
      default:
        break;
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

std::string format_pauli(const PauliOperator& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("format_pauli: operator is not Hermitian");
  }
  std::string out;
  if (p.sign() < 0) out.push_back('-');
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    out.push_back(p.letter(j));
  }
  return out;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("commutes: operators act on different qubit counts");
  }
  return p.x().dot(q.z()) == p.z().dot(q.x());
}

}  // namespace stabent
