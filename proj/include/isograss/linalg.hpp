#pragma once

#include "isograss/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace isograss {

struct RrefResult {
  Matrix reduced;                   ///< Same shape as the input.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with pivots normalized to 1 (Gauss-Jordan,
/// first nonzero pivot in each column).
RrefResult rref(const Matrix& m);

/// The nonzero rows of rref(m): the canonical basis of the row space.
Matrix row_basis(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination on the integral matrix
/// obtained by clearing denominators row by row. Works over Z and Z[i].
std::size_t rank(const Matrix& m);

/// Rank by plain rational elimination choosing the *last* nonzero entry of
/// each column as pivot. Deliberately a different pivot order than `rank`;
/// used as a cross-check.
std::size_t rank_alternate_pivot(const Matrix& m);

/// Right null space. Columns of the result form a basis; the result has
/// cols(m) rows and cols(m) - rank(m) columns.
Matrix kernel(const Matrix& m);

/// Left null space as rows: every row y satisfies y * m = 0.
Matrix left_kernel(const Matrix& m);

/// Some x with a * x = b (b a column vector or a matrix of right-hand
/// sides), or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

Scalar determinant(const Matrix& a);

/// Row bases of the sum and intersection of two row spaces. Both results are
/// in reduced echelon form. Throws InvalidArgument on ambient mismatch.
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersect(const Matrix& a, const Matrix& b);

/// True if every row of `rows` lies in the row space of `basis`.
bool rowspace_contains(const Matrix& basis, const Matrix& rows);

}  // namespace isograss
