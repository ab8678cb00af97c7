#pragma once

// Bit-packed linear algebra over GF(2).
//
// Rows are stored as packed 64-bit words so that the dominant operation of
// Gaussian elimination, adding one row to another, is a word-wise XOR.
// Column reorderings are never applied to the data; callers pass an explicit
// column visiting order instead and keep the permutation alongside.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabent {

class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size);

  /// Parses a string of '0'/'1' characters; index 0 is the first character.
  static BitVec from_string(std::string_view bits);
  /// Low `size` bits of `value`; bit i of the integer becomes index i.
  static BitVec from_u64(std::uint64_t value, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
  friend BitVec operator&(BitVec lhs, const BitVec& rhs) { return lhs &= rhs; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  /// Inner product mod 2.
  bool dot(const BitVec& other) const;
  /// Inner product over the integers (popcount of the AND).
  std::size_t and_count(const BitVec& other) const;
  std::size_t popcount() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::optional<std::size_t> first_set(std::size_t from = 0) const noexcept;

  /// Gathers the bits at `indices`, in that order.
  BitVec select(std::span<const std::size_t> indices) const;
  /// Concatenation: this followed by `tail`.
  BitVec concat(const BitVec& tail) const;
  BitVec slice(std::size_t begin, std::size_t end) const;

  /// Only valid for size() <= 64.
  std::uint64_t to_u64() const;
  std::string to_string() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// One elementary row operation, as recorded by rref().
struct RowOp {
  enum class Kind { Swap, Add };
  Kind kind;
  std::size_t target;
  std::size_t source;  ///< Add: row[target] ^= row[source]. Swap: exchange the two rows.

  friend bool operator==(const RowOp&, const RowOp&) = default;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  /// Every row must have the same length; characters other than '0'/'1' are rejected.
  static F2Matrix from_strings(std::span<const std::string> rows);
  static F2Matrix from_strings(std::initializer_list<std::string_view> rows);
  static F2Matrix from_rows(std::vector<BitVec> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }

  const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVec& row(std::size_t r) noexcept { return rows_[r]; }
  const std::vector<BitVec>& row_vectors() const noexcept { return rows_; }

  BitVec column(std::size_t c) const;
  void add_row(std::size_t target, std::size_t source) { rows_[target] ^= rows_[source]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void append_row(BitVec row);
  void apply(const RowOp& op);

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  /// Row-vector times matrix: v M.
  BitVec left_multiply(const BitVec& v) const;
  /// Matrix times column-vector: M v.
  BitVec right_multiply(const BitVec& v) const;

  F2Matrix select_columns(std::span<const std::size_t> indices) const;
  F2Matrix select_rows(std::span<const std::size_t> indices) const;
  F2Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  F2Matrix hstack(const F2Matrix& right) const;
  F2Matrix vstack(const F2Matrix& below) const;

  bool is_zero() const noexcept;
  bool is_symmetric() const noexcept;
  std::string to_string() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  F2Matrix reduced;
  std::vector<RowOp> row_ops;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

std::size_t rank(const F2Matrix& m);

/// Reduced row echelon form. Pivots are taken at the lowest-index column that
/// still has a candidate, using the lowest-index candidate row.
RrefResult rref(const F2Matrix& m);

/// Same as rref(m) but columns are visited in `column_order` (which may be a
/// strict subset of all columns). pivot_cols lists pivots in visiting order.
RrefResult rref(const F2Matrix& m, std::span<const std::size_t> column_order);

/// Replays a row-operation log against a copy of `m`.
F2Matrix replay_row_ops(F2Matrix m, std::span<const RowOp> ops);

/// Basis of the row kernel {v : v M = 0}; exactly rows() - rank(M) vectors.
std::vector<BitVec> kernel(const F2Matrix& m);

/// Basis of the right null space {x : M x = 0}; exactly cols() - rank(M) vectors.
std::vector<BitVec> null_space(const F2Matrix& m);

enum class SolveSide {
  Right,  ///< find x with M x = rhs (rhs has rows() bits)
  Left,   ///< find x with x M = rhs (rhs has cols() bits)
};

std::optional<BitVec> solve(const F2Matrix& m, const BitVec& rhs, SolveSide side = SolveSide::Right);

}  // namespace stabent
