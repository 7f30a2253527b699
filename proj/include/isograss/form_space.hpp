#pragma once

#include "isograss/matrix.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace isograss {

enum class CaseTag { RealOrthogonal, Unitary, ComplexOrthogonal, Symplectic };

enum class FormKind { Symmetric, Hermitian, Alternating };

std::string_view to_string(CaseTag c);
/// Accepts the canonical names used by the CLI ("real-orthogonal", "unitary",
/// "complex-orthogonal", "symplectic"). Throws ParseError otherwise.
CaseTag parse_case(std::string_view s);

Field field_of(CaseTag c);
FormKind form_kind_of(CaseTag c);
/// RealOrthogonal and Unitary carry the signed 5-tuple.
inline bool is_signed_case(CaseTag c) {
  return c == CaseTag::RealOrthogonal || c == CaseTag::Unitary;
}

/// Group data. RealOrthogonal/Unitary use (p, q, p1, q1); ComplexOrthogonal
/// uses (n, m) with V = k^n, U = k^m; Symplectic uses (n, m) with G = Sp(2n),
/// H restricted to U equal to Sp(2m).
struct GroupParams {
  int p = 0, q = 0, p1 = 0, q1 = 0;
  int n = 0, m = 0;

  static GroupParams signed_params(int p, int q, int p1, int q1) { return {p, q, p1, q1, 0, 0}; }
  static GroupParams nm(int n, int m) { return {0, 0, 0, 0, n, m}; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Throws InvalidArgument unless the params satisfy 0 < p1 < p, 0 < q1 < q
/// (signed cases) or 0 < m < n.
void validate_group_params(CaseTag c, const GroupParams& g);

/// Human-readable "(p,q,p1,q1)" or "(n,m)".
std::string params_to_string(CaseTag c, const GroupParams& g);

/// Ambient form space V = U (+) W with its Gram matrix in the fixed basis:
///   RealOrthogonal/Unitary: u+_1..u+_p1, u-_1..u-_q1, w+_1..w+_{p-p1}, w-_1..w-_{q-q1}
///   ComplexOrthogonal:      u_1..u_m, w_1..w_{n-m}  (orthonormal)
///   Symplectic:             e_1..e_m, f_1..f_m, e_{m+1}..e_n, f_{m+1}..f_n,
///                           (e_i, f_i) = 1 = -(f_i, e_i)
/// The form is (x, y) = x^* G y with x^* the field adjoint of x.
class FormSpace {
public:
  FormSpace(CaseTag c, GroupParams g);

  CaseTag case_tag() const { return case_; }
  const GroupParams& params() const { return params_; }
  Field field() const { return field_of(case_); }
  FormKind kind() const { return form_kind_of(case_); }
  std::size_t dim() const { return gram_.rows(); }
  std::size_t dim_u() const { return dim_u_; }
  std::size_t dim_w() const { return dim() - dim_u_; }
  const Matrix& gram() const { return gram_; }
  Matrix gram_u() const { return gram_.block(0, 0, dim_u_, dim_u_); }
  Matrix gram_w() const { return gram_.block(dim_u_, dim_u_, dim_w(), dim_w()); }

  /// Gram matrix of the rows of `rows` (ambient coordinates):
  /// entry (i, j) = (row_i, row_j).
  Matrix gram_of(const Matrix& rows) const { return gram_of(rows, gram_); }
  /// Same for an arbitrary Gram matrix in the field of this space.
  Matrix gram_of(const Matrix& rows, const Matrix& gram) const;

  /// Isometry test conj(g)^T G g = G on the full space.
  bool is_isometry(const Matrix& g) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.case_ == b.case_ && a.params_ == b.params_;
  }

private:
  CaseTag case_;
  GroupParams params_;
  std::size_t dim_u_ = 0;
  Matrix gram_;
};

using SpacePtr = std::shared_ptr<const FormSpace>;

SpacePtr standard_space(CaseTag c, const GroupParams& g);

/// Ambient index helpers for the fixed coordinate order (1-based labels as in
/// the mathematical notation).
struct Coords {
  const FormSpace& s;
  std::size_t u_plus(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t u_minus(int j) const { return static_cast<std::size_t>(s.params().p1 + j - 1); }
  std::size_t w_plus(int i) const {
    return static_cast<std::size_t>(s.params().p1 + s.params().q1 + i - 1);
  }
  std::size_t w_minus(int j) const {
    const auto& g = s.params();
    return static_cast<std::size_t>(g.p1 + g.q1 + (g.p - g.p1) + j - 1);
  }
  std::size_t u(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t w(int j) const { return static_cast<std::size_t>(s.params().m + j - 1); }
  /// Symplectic e_i / f_i for 1 <= i <= n.
  std::size_t e(int i) const {
    const auto& g = s.params();
    return static_cast<std::size_t>(i <= g.m ? i - 1 : 2 * g.m + (i - g.m - 1));
  }
  std::size_t f(int i) const {
    const auto& g = s.params();
    return static_cast<std::size_t>(i <= g.m ? g.m + i - 1 : 2 * g.m + (g.n - g.m) + (i - g.m - 1));
  }
};

/// (s, s+, s-): radical dimension and maximal positive/negative definite
/// dimensions of a restricted symmetric or hermitian form.
struct IsometryType {
  std::size_t s = 0, s_plus = 0, s_minus = 0;
  friend bool operator==(const IsometryType&, const IsometryType&) = default;
};

/// Radical dimension and rank of a restricted form (the field-agnostic
/// analogue of IsometryType, used for ComplexOrthogonal and Symplectic).
struct RankType {
  std::size_t radical = 0, rank = 0;
  friend bool operator==(const RankType&, const RankType&) = default;
};

/// A subspace of a FormSpace. The basis is kept in reduced row echelon form,
/// so two Subspace values are equal iff they span the same space.
class Subspace {
public:
  Subspace(SpacePtr space, const Matrix& spanning_rows);

  const SpacePtr& space_ptr() const { return space_; }
  const FormSpace& space() const { return *space_; }
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }

  /// Gram matrix of the canonical basis.
  Matrix gram() const { return space_->gram_of(basis_); }

  /// The image under v -> g v (basis rows become rows of basis * g^T).
  Subspace transformed(const Matrix& g) const;

  bool contains(const Matrix& rows) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return *a.space_ == *b.space_ && a.basis_ == b.basis_;
  }

private:
  SpacePtr space_;
  Matrix basis_;
};

/// Diagonalize a symmetric (bilinear) or hermitian Gram matrix by congruence.
/// Returns T with rows the new basis vectors in old coordinates, so that
/// conj(T) M T^T = diag(d); zero entries of d come last.
struct Diagonalization {
  Matrix transform;
  std::vector<Scalar> diagonal;
};
Diagonalization congruence_diagonalize(const Matrix& gram, FormKind kind);

/// Inertia of a symmetric rational or hermitian Gram matrix.
IsometryType inertia(const Matrix& gram, FormKind kind);

Subspace proj_u(const Subspace& s);
Subspace proj_w(const Subspace& s);
Subspace intersect_u(const Subspace& s);
Subspace intersect_w(const Subspace& s);
/// (S + W) ∩ U computed literally with subspace sum and intersection; the
/// coordinate projection `proj_u` must agree with it.
Subspace proj_u_by_definition(const Subspace& s);
Subspace radical(const Subspace& s);
bool is_isotropic(const Subspace& s);
/// (s, s+, s-) of the restricted form. Throws InvalidArgument for
/// ComplexOrthogonal and Symplectic.
IsometryType signature(const Subspace& s);
/// Radical dimension and rank of the restricted form (any case).
RankType rank_type(const Subspace& s);

/// The coordinate subspaces U and W as Subspace values.
Subspace whole_u(const SpacePtr& space);
Subspace whole_w(const SpacePtr& space);

}  // namespace isograss
