#include "isograss/errors.hpp"
#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/linalg.hpp"
#include "isograss/orbits.hpp"

#include <doctest.h>

#include <random>

using namespace isograss;

namespace {

SpacePtr ro2211() { return standard_space(CaseTag::RealOrthogonal, GroupParams::signed_params(2, 2, 1, 1)); }

Matrix unit_row(const FormSpace& s, std::vector<std::pair<std::size_t, Scalar>> entries) {
  Matrix m(1, s.dim(), s.field());
  for (auto& [i, x] : entries) m(0, i) = x;
  return m;
}

}  // namespace

TEST_CASE("standard spaces") {
  const auto ro = ro2211();
  CHECK(ro->dim() == 4);
  CHECK(ro->gram() == Matrix::diagonal({1, -1, 1, -1}));
  CHECK(ro->field() == Field::Rational);

  const auto u = standard_space(CaseTag::Unitary, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(u->field() == Field::GaussianHermitian);
  CHECK(u->gram() == Matrix::diagonal({1, -1, 1, -1}, Field::GaussianHermitian));

  const auto sp = standard_space(CaseTag::Symplectic, GroupParams::nm(2, 1));
  CHECK(sp->dim() == 4);
  const Coords c{*sp};
  CHECK(sp->gram()(c.e(1), c.f(1)) == Scalar(1));
  CHECK(sp->gram()(c.f(1), c.e(1)) == Scalar(-1));
  CHECK(sp->gram()(c.e(2), c.f(2)) == Scalar(1));
  CHECK(sp->gram()(c.e(1), c.f(2)).is_zero());

  const auto co = standard_space(CaseTag::ComplexOrthogonal, GroupParams::nm(4, 2));
  CHECK(co->field() == Field::GaussianBilinear);
  CHECK(co->gram().is_identity());
  CHECK(co->dim_u() == 2);
}

TEST_CASE("invalid group parameters are rejected") {
  CHECK_THROWS_AS(standard_space(CaseTag::RealOrthogonal, GroupParams::signed_params(2, 2, 2, 1)),
                  InvalidArgument);
  CHECK_THROWS_AS(standard_space(CaseTag::Unitary, GroupParams::signed_params(2, 2, 0, 1)),
                  InvalidArgument);
  CHECK_THROWS_AS(standard_space(CaseTag::Symplectic, GroupParams::nm(2, 2)), InvalidArgument);
  CHECK_THROWS_AS(standard_space(CaseTag::ComplexOrthogonal, GroupParams::nm(3, 0)),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_case("orthogonal"), ParseError);
  CHECK(parse_case("complex-orthogonal") == CaseTag::ComplexOrthogonal);
}

TEST_CASE("projections") {
  const auto sp = ro2211();
  const Coords c{*sp};
  const Subspace inside_u(sp, unit_row(*sp, {{c.u_plus(1), 1}, {c.u_minus(1), 1}}));
  CHECK(proj_u(inside_u) == inside_u);
  CHECK(proj_w(inside_u).dim() == 0);

  const Subspace s(sp, unit_row(*sp, {{c.u_plus(1), 1}, {c.w_minus(1), 1}}));
  CHECK(proj_u(s) == Subspace(sp, unit_row(*sp, {{c.u_plus(1), 1}})));
  CHECK(proj_u(s) == proj_u_by_definition(s));

  const auto big = standard_space(CaseTag::RealOrthogonal, GroupParams::signed_params(4, 4, 2, 2));
  const Subspace rep = canonical_rep(big, OrbitParams::signed_tuple(CaseTag::RealOrthogonal, 1, 1, 0, 1, 1));
  CHECK(proj_u(rep).dim() == 3);
  CHECK(proj_u(rep) == proj_u_by_definition(rep));
}

TEST_CASE("radicals") {
  const auto sp = ro2211();
  const Coords c{*sp};
  const Subspace iso(sp, unit_row(*sp, {{c.u_plus(1), 1}, {c.u_minus(1), 1}}));
  CHECK(radical(iso) == iso);
  CHECK(radical(whole_u(sp)).dim() == 0);

  const Subspace rep = canonical_rep(sp, OrbitParams::signed_tuple(CaseTag::RealOrthogonal, 0, 0, 1, 0, 0));
  const Subspace pu = proj_u(rep);
  CHECK(pu.dim() == 1);
  CHECK(radical(pu) == pu);
}

TEST_CASE("signatures and isotropy") {
  const auto sp = ro2211();
  const Coords c{*sp};
  const Subspace pos(sp, unit_row(*sp, {{c.u_plus(1), 1}}));
  CHECK(signature(pos) == IsometryType{0, 1, 0});
  CHECK_FALSE(is_isotropic(pos));
  const Subspace iso(sp, unit_row(*sp, {{c.u_plus(1), 1}, {c.u_minus(1), 1}}));
  CHECK(signature(iso) == IsometryType{1, 0, 0});
  CHECK(is_isotropic(iso));
  CHECK(signature(whole_u(sp)) == IsometryType{0, 1, 1});

  const auto co = standard_space(CaseTag::ComplexOrthogonal, GroupParams::nm(4, 2));
  CHECK_THROWS_AS(signature(whole_u(co)), InvalidArgument);
  CHECK(rank_type(whole_u(co)) == RankType{0, 2});
}

TEST_CASE("every canonical representative is isotropic") {
  for (CaseTag c : {CaseTag::RealOrthogonal, CaseTag::Unitary}) {
    const GroupParams g = GroupParams::signed_params(3, 3, 1, 2);
    const auto sp = standard_space(c, g);
    for (int r = 0; r <= max_isotropic_dim(c, g); ++r)
      for (const auto& t : valid_tuples(c, g, r)) CHECK(is_isotropic(canonical_rep(sp, t)));
  }
  for (CaseTag c : {CaseTag::ComplexOrthogonal, CaseTag::Symplectic}) {
    const GroupParams g = GroupParams::nm(4, 2);
    const auto sp = standard_space(c, g);
    for (int r = 0; r <= max_isotropic_dim(c, g); ++r)
      for (const auto& t : valid_tuples(c, g, r)) CHECK(is_isotropic(canonical_rep(sp, t)));
  }
}

TEST_CASE("hermitian diagonalization") {
  const Matrix m{{Scalar(0), Scalar::i()}, {-Scalar::i(), Scalar(0)}};
  const Matrix h = m.with_field(Field::GaussianHermitian);
  const Diagonalization d = congruence_diagonalize(h, FormKind::Hermitian);
  CHECK(d.transform.involuted() * h * d.transform.transpose() ==
        Matrix::diagonal(d.diagonal, Field::GaussianHermitian));
  CHECK(inertia(h, FormKind::Hermitian) == IsometryType{0, 1, 1});
}

TEST_CASE("signature does not depend on the spanning set") {
  std::mt19937_64 rng(3);
  const auto sp = standard_space(CaseTag::Unitary, GroupParams::signed_params(3, 2, 2, 1));
  for (int t = 0; t < 30; ++t) {
    Matrix rows(2, sp->dim(), sp->field());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < sp->dim(); ++j)
        rows(i, j) = Scalar(mpq_class(static_cast<long>(rng() % 5) - 2),
                            mpq_class(static_cast<long>(rng() % 5) - 2));
    if (rank(rows) < 2) continue;
    Matrix mix{{Scalar(2), Scalar::i()}, {Scalar(1), Scalar(1)}};
    mix = mix.with_field(sp->field());
    const Subspace a(sp, rows), b(sp, mix * rows);
    CHECK(a == b);
    CHECK(signature(a) == inertia(sp->gram_of(mix * rows), FormKind::Hermitian));
  }
}

TEST_CASE("dimension identities of the projections") {
  for (CaseTag c : {CaseTag::RealOrthogonal, CaseTag::Unitary}) {
    const GroupParams g = GroupParams::signed_params(4, 4, 2, 2);
    const auto sp = standard_space(c, g);
    for (int r = 1; r <= max_isotropic_dim(c, g); ++r)
      for (const auto& t : valid_tuples(c, g, r)) {
        const Subspace s = canonical_rep(sp, t);
        CHECK(proj_u(s).dim() + intersect_w(s).dim() == s.dim());
        CHECK(proj_w(s).dim() + intersect_u(s).dim() == s.dim());
        const IsometryType su = signature(proj_u(s)), sw = signature(proj_w(s));
        CHECK(su.s_plus == sw.s_minus);
        CHECK(su.s_minus == sw.s_plus);
      }
  }
}
