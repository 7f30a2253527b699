#include "isograss/form_space.hpp"

#include "isograss/errors.hpp"
#include "isograss/linalg.hpp"

#include <sstream>
#include <utility>

namespace isograss {

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::RealOrthogonal: return "real-orthogonal";
    case CaseTag::Unitary: return "unitary";
    case CaseTag::ComplexOrthogonal: return "complex-orthogonal";
    case CaseTag::Symplectic: return "symplectic";
  }
  return "?";
}

CaseTag parse_case(std::string_view s) {
  if (s == "real-orthogonal" || s == "RealOrthogonal") return CaseTag::RealOrthogonal;
  if (s == "unitary" || s == "Unitary") return CaseTag::Unitary;
  if (s == "complex-orthogonal" || s == "ComplexOrthogonal") return CaseTag::ComplexOrthogonal;
  if (s == "symplectic" || s == "Symplectic") return CaseTag::Symplectic;
  throw ParseError("unknown case '" + std::string(s) + "'");
}

Field field_of(CaseTag c) {
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::Symplectic: return Field::Rational;
    case CaseTag::Unitary: return Field::GaussianHermitian;
    case CaseTag::ComplexOrthogonal: return Field::GaussianBilinear;
  }
  return Field::Rational;
}

FormKind form_kind_of(CaseTag c) {
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::ComplexOrthogonal: return FormKind::Symmetric;
    case CaseTag::Unitary: return FormKind::Hermitian;
    case CaseTag::Symplectic: return FormKind::Alternating;
  }
  return FormKind::Symmetric;
}

void validate_group_params(CaseTag c, const GroupParams& g) {
  if (is_signed_case(c)) {
    if (!(0 < g.p1 && g.p1 < g.p && 0 < g.q1 && g.q1 < g.q))
      throw InvalidArgument("group parameters must satisfy 0 < p1 < p and 0 < q1 < q, got " +
                            params_to_string(c, g));
  } else if (!(0 < g.m && g.m < g.n)) {
    throw InvalidArgument("group parameters must satisfy 0 < m < n, got " + params_to_string(c, g));
  }
}

std::string params_to_string(CaseTag c, const GroupParams& g) {
  std::ostringstream os;
  if (is_signed_case(c))
    os << '(' << g.p << ',' << g.q << ',' << g.p1 << ',' << g.q1 << ')';
  else
    os << '(' << g.n << ',' << g.m << ')';
  return os.str();
}

FormSpace::FormSpace(CaseTag c, GroupParams g) : case_(c), params_(g) {
  validate_group_params(c, g);
  const Field f = field_of(c);
  if (is_signed_case(c)) {
    const auto d = static_cast<std::size_t>(g.p + g.q);
    dim_u_ = static_cast<std::size_t>(g.p1 + g.q1);
    gram_ = Matrix(d, d, f);
    std::size_t k = 0;
    auto put = [&](int count, long sign) {
      for (int i = 0; i < count; ++i, ++k) gram_(k, k) = Scalar(sign);
    };
    put(g.p1, 1);
    put(g.q1, -1);
    put(g.p - g.p1, 1);
    put(g.q - g.q1, -1);
  } else if (c == CaseTag::ComplexOrthogonal) {
    dim_u_ = static_cast<std::size_t>(g.m);
    gram_ = Matrix::identity(static_cast<std::size_t>(g.n), f);
  } else {
    const auto d = static_cast<std::size_t>(2 * g.n);
    dim_u_ = static_cast<std::size_t>(2 * g.m);
    gram_ = Matrix(d, d, f);
    Coords co{*this};
    for (int i = 1; i <= g.n; ++i) {
      gram_(co.e(i), co.f(i)) = Scalar(1);
      gram_(co.f(i), co.e(i)) = Scalar(-1);
    }
  }
}

Matrix FormSpace::gram_of(const Matrix& rows, const Matrix& gram) const {
  Matrix b = rows.with_field(common_field(rows, gram));
  return b.involuted() * gram * b.transpose();
}

bool FormSpace::is_isometry(const Matrix& g) const {
  if (g.rows() != dim() || g.cols() != dim()) return false;
  return g.with_field(field()).adjoint() * gram_ * g == gram_;
}

SpacePtr standard_space(CaseTag c, const GroupParams& g) {
  return std::make_shared<const FormSpace>(c, g);
}

Subspace::Subspace(SpacePtr space, const Matrix& spanning_rows) : space_(std::move(space)) {
  if (!space_) throw InvalidArgument("subspace without ambient space");
  if (spanning_rows.cols() != space_->dim())
    throw InvalidArgument("subspace basis has " + std::to_string(spanning_rows.cols()) +
                          " columns, ambient dimension is " + std::to_string(space_->dim()));
  Matrix rows = spanning_rows.with_field(common_field(spanning_rows, space_->gram()));
  if (space_->field() == Field::Rational) rows = rows.with_field(Field::Rational);
  basis_ = row_basis(rows);
}

Subspace Subspace::transformed(const Matrix& g) const {
  return {space_, basis_ * g.with_field(space_->field()).transpose()};
}

bool Subspace::contains(const Matrix& rows) const { return rowspace_contains(basis_, rows); }

Diagonalization congruence_diagonalize(const Matrix& gram, FormKind kind) {
  if (kind == FormKind::Alternating)
    throw InvalidArgument("alternating forms have no diagonal congruence form");
  const std::size_t k = gram.rows();
  const bool herm = kind == FormKind::Hermitian;
  auto cj = [herm](const Scalar& x) { return herm ? x.conj() : x; };
  Matrix w = gram;
  Matrix t = Matrix::identity(k, gram.field());

  // v_i <- v_i + c v_j, applied to the basis and to the Gram matrix.
  auto add = [&](std::size_t i, std::size_t j, const Scalar& c) {
    Scalar cc = cj(c);
    for (std::size_t col = 0; col < k; ++col)
      if (!t(j, col).is_zero()) t(i, col) += c * t(j, col);
    for (std::size_t col = 0; col < k; ++col)
      if (!w(j, col).is_zero()) w(i, col) += cc * w(j, col);
    for (std::size_t row = 0; row < k; ++row)
      if (!w(row, j).is_zero()) w(row, i) += c * w(row, j);
  };
  auto swap_idx = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t col = 0; col < k; ++col) {
      std::swap(t(i, col), t(j, col));
      std::swap(w(i, col), w(j, col));
    }
    for (std::size_t row = 0; row < k; ++row) std::swap(w(row, i), w(row, j));
  };

  std::vector<Scalar> diag;
  std::size_t s = 0;
  for (; s < k; ++s) {
    std::size_t piv = k;
    for (std::size_t i = s; i < k; ++i)
      if (!w(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv == k) {
      // Zero diagonal: make one by combining a pair with a nonzero pairing.
      bool found = false;
      for (std::size_t i = s; i < k && !found; ++i)
        for (std::size_t j = i + 1; j < k && !found; ++j)
          if (!w(i, j).is_zero()) {
            add(i, j, herm ? w(i, j).conj() : Scalar(1));
            piv = i;
            found = true;
          }
      if (!found) break;  // the remaining block is zero
    }
    swap_idx(s, piv);
    Scalar inv = w(s, s).inverse();
    for (std::size_t j = s + 1; j < k; ++j)
      if (!w(s, j).is_zero()) add(j, s, -(w(s, j) * inv));
    diag.push_back(w(s, s));
  }
  for (; s < k; ++s) diag.emplace_back(0);
  return {t, diag};
}

IsometryType inertia(const Matrix& gram, FormKind kind) {
  if (kind == FormKind::Alternating) throw InvalidArgument("inertia of an alternating form");
  Diagonalization d = congruence_diagonalize(gram, kind);
  IsometryType it;
  for (const auto& x : d.diagonal) {
    if (x.is_zero()) {
      ++it.s;
    } else {
      if (!x.is_real()) throw InvalidArgument("inertia requires a rational diagonal");
      (sgn(x.re()) > 0 ? it.s_plus : it.s_minus)++;
    }
  }
  return it;
}

namespace {

Matrix masked(const Subspace& s, bool keep_u) {
  Matrix b = s.basis();
  const std::size_t du = s.space().dim_u();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if ((j < du) != keep_u) b(i, j) = Scalar(0);
  return b;
}

Matrix coordinate_block(const SpacePtr& sp, bool u) {
  const std::size_t du = sp->dim_u(), d = sp->dim();
  Matrix b(u ? du : d - du, d, sp->field());
  for (std::size_t i = 0; i < b.rows(); ++i) b(i, u ? i : du + i) = Scalar(1);
  return b;
}

}  // namespace

Subspace whole_u(const SpacePtr& space) { return {space, coordinate_block(space, true)}; }
Subspace whole_w(const SpacePtr& space) { return {space, coordinate_block(space, false)}; }

Subspace proj_u(const Subspace& s) { return {s.space_ptr(), masked(s, true)}; }
Subspace proj_w(const Subspace& s) { return {s.space_ptr(), masked(s, false)}; }

Subspace intersect_u(const Subspace& s) {
  return {s.space_ptr(), subspace_intersect(s.basis(), whole_u(s.space_ptr()).basis())};
}

Subspace intersect_w(const Subspace& s) {
  return {s.space_ptr(), subspace_intersect(s.basis(), whole_w(s.space_ptr()).basis())};
}

Subspace proj_u_by_definition(const Subspace& s) {
  Matrix sum = subspace_sum(s.basis(), whole_w(s.space_ptr()).basis());
  return {s.space_ptr(), subspace_intersect(sum, whole_u(s.space_ptr()).basis())};
}

Subspace radical(const Subspace& s) {
  if (s.dim() == 0) return s;
  // (b_i, sum_j y_j b_j) = (M y)_i; for a reflexive form the right radical
  // is the radical.
  Matrix k = kernel(s.gram());
  return {s.space_ptr(), k.transpose() * s.basis()};
}

bool is_isotropic(const Subspace& s) { return s.gram().is_zero(); }

IsometryType signature(const Subspace& s) {
  if (!is_signed_case(s.space().case_tag()))
    throw InvalidArgument("signature is only defined for real-orthogonal and unitary spaces");
  return inertia(s.gram(), s.space().kind());
}

RankType rank_type(const Subspace& s) {
  std::size_t r = rank(s.gram());
  return {s.dim() - r, r};
}

}  // namespace isograss
