#pragma once

// Constructors for CSS, toric and Gottesman codes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "stabent/code.hpp"
#include "stabent/f2.hpp"

namespace stabent {

/// X-type generators from the rows of U, Z-type generators from the rows of V.
struct CssSpec {
  F2Matrix U;
  F2Matrix V;
};

/// Throws ValidationError unless U V^T = 0 and the rows of U and of V are independent.
StabilizerCode css(const CssSpec& spec);

/// True iff U U^T = 0 and V spans the same row space as U.
bool is_dual_containing(const CssSpec& spec);

/// m x (2^m - 1) parity check of the Hamming code; column c is the binary form of c + 1.
F2Matrix hamming_parity_check(std::size_t m);

/// Kitaev's toric code on a k x k torus, n = 2k^2.
///
/// Edges 0..k^2-1 are the edges v(i,j) = i k + j leaving vertex (i,j) towards
/// row i+1; edges k^2..2k^2-1 are h(i,j) = k^2 + i k + j leaving it towards
/// column j+1. The star of vertex (i,j) is {v(i,j), v(i-1,j), h(i,j), h(i,j-1)}
/// and the face with corner (i,j) is {v(i,j), v(i,j+1), h(i,j), h(i+1,j)}, all
/// indices mod k. The last star and the last face are dropped.
CssSpec toric_spec(std::size_t k);
StabilizerCode toric(std::size_t k);

/// Companion matrix of the built-in primitive polynomial of degree m (3 <= m <= 10).
F2Matrix gottesman_default_c(std::size_t m);

/// The [[2^m, 2^m - m - 2, 3]] code with generators X...X, Z...Z and the rows
/// of (H | C H), where column c of H is the binary form of c (most significant
/// bit in row 0). C must satisfy: C and C + I invertible.
StabilizerCode gottesman(std::size_t m, const std::optional<F2Matrix>& C = std::nullopt);

/// Rows of '0'/'1' characters; whitespace is ignored, '#' starts a comment.
/// Throws ParseError on ragged rows or other characters.
F2Matrix parse_binary_matrix(std::string_view text);

std::string format_binary_matrix(const F2Matrix& m);

}  // namespace stabent
