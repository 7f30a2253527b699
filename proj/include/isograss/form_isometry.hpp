#pragma once

#include "isograss/form_space.hpp"
#include "isograss/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isograss {

/// Gram matrix of `rows` under `gram`: entry (i, j) = conj(row_i) G row_j^T.
Matrix gram_rows(const Matrix& rows, const Matrix& gram);

/// A vector x with sum_i conj(x_i) d_i x_i = c (hermitian) or
/// sum_i d_i x_i^2 = c (symmetric), all d_i and c nonzero; nullopt if the
/// bounded search finds none. The search is deterministic in `seed`.
std::optional<std::vector<Scalar>> represent(const Scalar& c, const std::vector<Scalar>& d,
                                             FormKind kind, Field field, std::uint64_t seed = 0);

/// An invertible T with conj(T) m2 T^T = m1, i.e. the rows of T (in the
/// coordinates of m2) carry the Gram matrix m1. Both matrices must be
/// nondegenerate of the same kind. Returns nullopt when the search cannot
/// realize the congruence over the field (e.g. non-isometric rational forms).
std::optional<Matrix> find_congruence(const Matrix& m1, const Matrix& m2, FormKind kind);

/// Rows e_1..e_k, f_1..f_k (in the coordinates of `gram`) with
/// (e_i, f_j) = delta_ij and (e_i, e_j) = (f_i, f_j) = 0, for a
/// nondegenerate alternating Gram matrix.
Matrix symplectic_basis(const Matrix& gram);

/// Witt extension: an isometry g of the nondegenerate form `gram` (acting
/// on column vectors, so rows transform as v -> v g^T) with
/// domain * g^T = image. Throws InvalidArgument on shape mismatch, dependent
/// rows, or when domain -> image does not preserve the Gram pairings.
Matrix witt_extend(const Matrix& gram, FormKind kind, const Matrix& domain, const Matrix& image);

}  // namespace isograss
