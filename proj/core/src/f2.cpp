#include "stabent/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "stabent/errors.hpp"

namespace stabent {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::invalid_argument(line == 0 ? message
                                      : "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

namespace {

std::size_t word_count(std::size_t bits) { return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits; }

void require_same_size(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError(std::string("expected '0' or '1', got '") + bits[i] + "'", 1, i + 1);
    }
  }
  return v;
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t size) {
  if (size > kWordBits) {
    throw std::invalid_argument("from_u64 supports at most 64 bits");
  }
  BitVec v(size);
  if (size > 0) {
    v.words_[0] = size == kWordBits ? value : value & ((Word{1} << size) - 1);
  }
  return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

bool BitVec::dot(const BitVec& other) const { return (and_count(other) & 1U) != 0; }

std::size_t BitVec::and_count(const BitVec& other) const {
  require_same_size(*this, other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::optional<std::size_t> BitVec::first_set(std::size_t from) const noexcept {
  if (from >= size_) {
    return std::nullopt;
  }
  std::size_t w = from / kWordBits;
  Word current = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (current != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(current));
    }
    if (++w == words_.size()) {
      return std::nullopt;
    }
    current = words_[w];
  }
}

BitVec BitVec::select(std::span<const std::size_t> indices) const {
  BitVec out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (get(indices[i])) {
      out.set(i);
    }
  }
  return out;
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(size_ + tail.size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.set(i);
  }
  for (std::size_t i = 0; i < tail.size_; ++i) {
    if (tail.get(i)) out.set(size_ + i);
  }
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size_) {
    throw std::out_of_range("BitVec::slice out of range");
  }
  BitVec out(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (get(i)) out.set(i - begin);
  }
  return out;
}

std::uint64_t BitVec::to_u64() const {
  if (size_ > kWordBits) {
    throw std::invalid_argument("to_u64 requires at most 64 bits");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

F2Matrix F2Matrix::from_strings(std::span<const std::string> rows) {
  F2Matrix m(0, rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw ParseError("ragged matrix row", r + 1, 1);
    }
    m.rows_.push_back(BitVec::from_string(rows[r]));
  }
  return m;
}

F2Matrix F2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_strings(std::span<const std::string>(copy));
}

F2Matrix F2Matrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("F2Matrix::from_rows: row length mismatch");
    }
  }
  F2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitVec F2Matrix::column(std::size_t c) const {
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) out.set(r);
  }
  return out;
}

void F2Matrix::append_row(BitVec row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("F2Matrix::append_row: row length mismatch");
  }
  rows_.push_back(std::move(row));
}

void F2Matrix::apply(const RowOp& op) {
  if (op.kind == RowOp::Kind::Swap) {
    swap_rows(op.target, op.source);
  } else {
    add_row(op.target, op.source);
  }
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (auto c = rows_[r].first_set(); c; c = rows_[r].first_set(*c + 1)) {
      t.set(*c, r);
    }
  }
  return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows()) {
    throw std::invalid_argument("F2Matrix product: inner dimension mismatch");
  }
  F2Matrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    out.rows_[r] = rhs.left_multiply(rows_[r]);
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows() != rhs.rows() || cols_ != rhs.cols_) {
    throw std::invalid_argument("F2Matrix sum: shape mismatch");
  }
  F2Matrix out = *this;
  for (std::size_t r = 0; r < rows(); ++r) {
    out.rows_[r] ^= rhs.rows_[r];
  }
  return out;
}

BitVec F2Matrix::left_multiply(const BitVec& v) const {
  if (v.size() != rows()) {
    throw std::invalid_argument("left_multiply: length mismatch");
  }
  BitVec out(cols_);
  for (auto r = v.first_set(); r; r = v.first_set(*r + 1)) {
    out ^= rows_[*r];
  }
  return out;
}

BitVec F2Matrix::right_multiply(const BitVec& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("right_multiply: length mismatch");
  }
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(v)) out.set(r);
  }
  return out;
}

F2Matrix F2Matrix::select_columns(std::span<const std::size_t> indices) const {
  F2Matrix out;
  out.cols_ = indices.size();
  out.rows_.reserve(rows());
  for (const auto& r : rows_) {
    out.rows_.push_back(r.select(indices));
  }
  return out;
}

F2Matrix F2Matrix::select_rows(std::span<const std::size_t> indices) const {
  F2Matrix out;
  out.cols_ = cols_;
  out.rows_.reserve(indices.size());
  for (std::size_t i : indices) {
    out.rows_.push_back(rows_.at(i));
  }
  return out;
}

F2Matrix F2Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows() || col0 + ncols > cols_) {
    throw std::out_of_range("F2Matrix::block out of range");
  }
  F2Matrix out;
  out.cols_ = ncols;
  out.rows_.reserve(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    out.rows_.push_back(rows_[row0 + r].slice(col0, col0 + ncols));
  }
  return out;
}

F2Matrix F2Matrix::hstack(const F2Matrix& right) const {
  if (rows() != right.rows()) {
    throw std::invalid_argument("hstack: row count mismatch");
  }
  F2Matrix out;
  out.cols_ = cols_ + right.cols_;
  out.rows_.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    out.rows_.push_back(rows_[r].concat(right.rows_[r]));
  }
  return out;
}

F2Matrix F2Matrix::vstack(const F2Matrix& below) const {
  if (cols_ != below.cols_) {
    throw std::invalid_argument("vstack: column count mismatch");
  }
  F2Matrix out = *this;
  out.rows_.insert(out.rows_.end(), below.rows_.begin(), below.rows_.end());
  return out;
}

bool F2Matrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.none(); });
}

bool F2Matrix::is_symmetric() const noexcept {
  if (rows() != cols_) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

std::string F2Matrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

template <typename OnOp>
std::vector<std::size_t> eliminate(F2Matrix& m, std::span<const std::size_t> column_order, bool reduce_above,
                                   OnOp&& on_op) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c : column_order) {
    if (next_row == m.rows()) break;
    std::size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) {
      m.swap_rows(pivot, next_row);
      on_op(RowOp{RowOp::Kind::Swap, next_row, pivot});
    }
    for (std::size_t r = reduce_above ? 0 : next_row + 1; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, c)) {
        m.add_row(r, next_row);
        on_op(RowOp{RowOp::Kind::Add, r, next_row});
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
  F2Matrix work = m;
  auto order = natural_order(m.cols());
  return eliminate(work, order, false, [](const RowOp&) {}).size();
}

RrefResult rref(const F2Matrix& m) {
  auto order = natural_order(m.cols());
  return rref(m, order);
}

RrefResult rref(const F2Matrix& m, std::span<const std::size_t> column_order) {
  RrefResult result{m, {}, {}};
  result.pivot_cols =
      eliminate(result.reduced, column_order, true, [&](const RowOp& op) { result.row_ops.push_back(op); });
  return result;
}

F2Matrix replay_row_ops(F2Matrix m, std::span<const RowOp> ops) {
  for (const auto& op : ops) {
    m.apply(op);
  }
  return m;
}

std::vector<BitVec> kernel(const F2Matrix& m) {
  // Eliminate [M | I]; rows whose M-part vanishes carry kernel vectors.
  F2Matrix augmented = m.hstack(F2Matrix::identity(m.rows()));
  auto order = natural_order(m.cols());
  const std::size_t r = eliminate(augmented, order, false, [](const RowOp&) {}).size();
  std::vector<BitVec> basis;
  basis.reserve(m.rows() - r);
  for (std::size_t row = r; row < m.rows(); ++row) {
    basis.push_back(augmented.row(row).slice(m.cols(), m.cols() + m.rows()));
  }
  return basis;
}

std::vector<BitVec> null_space(const F2Matrix& m) {
  auto reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : reduced.pivot_cols) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < reduced.pivot_cols.size(); ++i) {
      if (reduced.reduced.get(i, free)) v.set(reduced.pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVec> solve(const F2Matrix& m, const BitVec& rhs, SolveSide side) {
  if (side == SolveSide::Left) {
    return solve(m.transpose(), rhs, SolveSide::Right);
  }
  if (rhs.size() != m.rows()) {
    throw std::invalid_argument("solve: rhs length must equal the row count");
  }
  F2Matrix augmented = m.hstack(F2Matrix(m.rows(), 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rhs.get(r)) augmented.set(r, m.cols());
  }
  auto order = natural_order(m.cols());
  auto pivots = eliminate(augmented, order, true, [](const RowOp&) {});
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (augmented.get(r, m.cols())) return std::nullopt;
  }
  BitVec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (augmented.get(i, m.cols())) x.set(pivots[i]);
  }
  return x;
}

}  // namespace stabent
