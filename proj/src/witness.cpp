#include "isograss/witness.hpp"

#include "isograss/errors.hpp"
#include "isograss/form_isometry.hpp"
#include "isograss/invariants.hpp"
#include "isograss/linalg.hpp"

namespace isograss {

Matrix witt_extend_factor(const FormSpace& space, bool factor_u, const Matrix& domain,
                          const Matrix& image) {
  return witt_extend(factor_u ? space.gram_u() : space.gram_w(), space.kind(), domain, image);
}

namespace {

// Coefficient-space decomposition of an isotropic subspace (rows are
// coefficient vectors with respect to the canonical basis of S).
struct Decomposition {
  Matrix k_u;     // S ∩ U
  Matrix k_w;     // S ∩ W
  Matrix a;       // complement of k_u (+) k_w in the pull-back of Rad(proj_U S)
  Matrix n;       // complement of that pull-back
  Matrix b_u, b_w;  // the basis split into its U and W coordinates
  Matrix m;       // Gram matrix of the U-projections of the basis
};

// Rows of `c` completing the row space of `sub` to the row space of `whole`.
Matrix relative_complement(const Matrix& sub, const Matrix& whole, Field field) {
  Matrix basis = row_basis(sub);
  Matrix out(0, whole.cols(), field);
  for (std::size_t i = 0; i < whole.rows(); ++i) {
    Matrix cand = Matrix::vstack(basis, whole.row(i));
    if (rank(cand) > basis.rows()) {
      basis = cand;
      out = Matrix::vstack(out, whole.row(i));
    }
  }
  return out;
}

Decomposition decompose(const Subspace& s) {
  const FormSpace& sp = s.space();
  const Field field = sp.field();
  const std::size_t r = s.dim(), du = sp.dim_u();
  Decomposition d;
  d.b_u = s.basis().cols_range(0, du).with_field(field);
  d.b_w = s.basis().cols_range(du, sp.dim()).with_field(field);
  d.k_w = left_kernel(d.b_u);
  d.k_u = left_kernel(d.b_w);
  d.m = gram_rows(d.b_u, sp.gram_u());
  // y is in the pull-back of the radical iff m y^T = 0 (the form is
  // (conjugate) symmetric or alternating, so either side works).
  Matrix rad = kernel(d.m).transpose();
  if (rad.rows() == 0) rad = Matrix(0, r, field);
  Matrix kk = Matrix::vstack(d.k_u.rows() ? d.k_u : Matrix(0, r, field), d.k_w);
  if (kk.rows() == 0) kk = Matrix(0, r, field);
  d.a = relative_complement(kk, rad, field);
  d.n = rad.rows() ? relative_complement(rad, Matrix::identity(r, field), field)
                   : Matrix::identity(r, field);
  if (d.k_u.rows() == 0) d.k_u = Matrix(0, r, field);
  if (d.k_w.rows() == 0) d.k_w = Matrix(0, r, field);
  if (d.a.rows() == 0) d.a = Matrix(0, r, field);
  if (d.n.rows() == 0) d.n = Matrix(0, r, field);
  return d;
}

}  // namespace

IsometryElement orbit_witness(const Subspace& s, const Subspace& s2) {
  if (!(s.space() == s2.space()))
    throw InvalidArgument("orbit_witness: subspaces live in different spaces");
  const OrbitParams t = classify(s), t2 = classify(s2);
  if (!(t == t2))
    throw PreconditionError("orbit_witness: tuples differ: " + t.to_string() + " vs " +
                            t2.to_string());
  const FormSpace& sp = s.space();
  if (s == s2) return IsometryElement::identity(sp);

  const Decomposition d = decompose(s), d2 = decompose(s2);
  if (d.k_u.rows() != d2.k_u.rows() || d.k_w.rows() != d2.k_w.rows() ||
      d.a.rows() != d2.a.rows() || d.n.rows() != d2.n.rows())
    throw ConsistencyError("orbit_witness: decomposition dimensions disagree");

  // Match the nondegenerate parts: rows n2' = T n2 with the same Gram as n.
  Matrix n2 = d2.n;
  if (d.n.rows() > 0) {
    const Matrix g1 = gram_rows(d.n, d.m), g2 = gram_rows(d2.n, d2.m);
    auto tm = find_congruence(g1, g2, sp.kind());
    if (!tm)
      throw WitnessUnavailable(
          "orbit_witness: the nondegenerate parts are not congruent over the exact field");
    n2 = *tm * d2.n;
  }

  // U side: S∩U, the radical complement and the nondegenerate part.
  const Matrix dom_u = Matrix::vstack(Matrix::vstack(d.k_u, d.a), d.n) * d.b_u;
  const Matrix img_u = Matrix::vstack(Matrix::vstack(d2.k_u, d2.a), n2) * d2.b_u;
  const Matrix dom_w = Matrix::vstack(Matrix::vstack(d.k_w, d.a), d.n) * d.b_w;
  const Matrix img_w = Matrix::vstack(Matrix::vstack(d2.k_w, d2.a), n2) * d2.b_w;

  IsometryElement h{witt_extend_factor(sp, true, dom_u, img_u),
                    witt_extend_factor(sp, false, dom_w, img_w)};
  if (!is_in_group(sp, h)) throw ConsistencyError("orbit_witness: result is not in H");
  if (!(apply(h, s) == s2)) throw ConsistencyError("orbit_witness: result does not map S to S2");
  return h;
}

}  // namespace isograss
