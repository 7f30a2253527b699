#include "isograss/errors.hpp"
#include "isograss/form_isometry.hpp"
#include "isograss/invariants.hpp"
#include "isograss/oracle.hpp"
#include "isograss/orbits.hpp"
#include "isograss/witness.hpp"

#include <doctest.h>

using namespace isograss;

TEST_CASE("Witt extension of a hyperbolic rotation") {
  const Matrix gram = Matrix::diagonal({1, -1});
  const Matrix domain{{1, 0}};
  const Matrix image{{Scalar::ratio(5, 3), Scalar::ratio(4, 3)}};
  const Matrix g = witt_extend(gram, FormKind::Symmetric, domain, image);
  CHECK(g.transpose() * gram * g == gram);
  CHECK(domain * g.transpose() == image);
}

TEST_CASE("Witt extension of the whole factor is the given map") {
  const Matrix gram = Matrix::diagonal({1, -1});
  const Matrix domain = Matrix::identity(2);
  const Matrix image{{Scalar::ratio(5, 3), Scalar::ratio(4, 3)}, {Scalar::ratio(4, 3), Scalar::ratio(5, 3)}};
  const Matrix g = witt_extend(gram, FormKind::Symmetric, domain, image);
  CHECK(g.transpose() == image);
}

TEST_CASE("Witt extension rejects maps that do not preserve the form") {
  const Matrix gram = Matrix::diagonal({1, -1});
  CHECK_THROWS_AS(witt_extend(gram, FormKind::Symmetric, Matrix{{1, 0}}, Matrix{{0, 1}}),
                  InvalidArgument);
  CHECK_THROWS_AS(witt_extend(gram, FormKind::Symmetric, Matrix{{1, 0}}, Matrix{{1, 0, 0}}),
                  InvalidArgument);
  CHECK_THROWS_AS(
      witt_extend(gram, FormKind::Symmetric, Matrix{{1, 1}, {2, 2}}, Matrix{{1, 1}, {2, 2}}),
      InvalidArgument);
}

TEST_CASE("Witt extension over every form kind") {
  // Hermitian: an isotropic vector to another isotropic vector.
  const Matrix h = Matrix::diagonal({1, 1, -1}, Field::GaussianHermitian);
  const Matrix hd({{Scalar(1), Scalar(0), Scalar(1)}}, Field::GaussianHermitian);
  const Matrix hi({{Scalar(0), Scalar::i(), Scalar(1)}}, Field::GaussianHermitian);
  const Matrix gh = witt_extend(h, FormKind::Hermitian, hd, hi);
  CHECK(gh.adjoint() * h * gh == h);
  CHECK(hd * gh.transpose() == hi);

  // Alternating: e1 -> e1 + f2 in a 4-dimensional symplectic space.
  const auto sp = standard_space(CaseTag::Symplectic, GroupParams::nm(2, 1));
  const Matrix j = sp->gram();
  const Coords c{*sp};
  Matrix d(1, 4), im(1, 4);
  d(0, c.e(1)) = 1;
  im(0, c.e(1)) = 1, im(0, c.f(2)) = 1;
  const Matrix ga = witt_extend(j, FormKind::Alternating, d, im);
  CHECK(ga.transpose() * j * ga == j);
  CHECK(d * ga.transpose() == im);

  // Bilinear over Q(i): a unit vector to a unit vector with complex entries.
  const Matrix b = Matrix::identity(2, Field::GaussianBilinear);
  const Matrix bd({{Scalar(1), Scalar(0)}}, Field::GaussianBilinear);
  const Matrix bi({{Scalar(mpq_class(0), mpq_class(1)), Scalar(mpq_class(0), mpq_class(0))}},
                  Field::GaussianBilinear);  // i e1 has square -1: rejected
  CHECK_THROWS_AS(witt_extend(b, FormKind::Symmetric, bd, bi), InvalidArgument);
  const Matrix bj({{Scalar(mpq_class(0), mpq_class(1)), Scalar(mpq_class(0), mpq_class(0))}},
                  Field::GaussianBilinear);
  const Matrix gb = witt_extend(b, FormKind::Symmetric, bj, bj * Scalar(-1));
  CHECK(gb.transpose() * b * gb == b);
}

TEST_CASE("orbit witness of a subspace with itself") {
  const auto sp = standard_space(CaseTag::RealOrthogonal, GroupParams::signed_params(2, 2, 1, 1));
  const Subspace s = canonical_rep(sp, OrbitParams::signed_tuple(CaseTag::RealOrthogonal, 0, 0, 0, 1, 0));
  const IsometryElement g = orbit_witness(s, s);
  CHECK(is_in_group(*sp, g));
  CHECK(is_in_stabilizer(g, s));
}

TEST_CASE("orbit witness rejects subspaces of different orbits") {
  const auto sp = standard_space(CaseTag::RealOrthogonal, GroupParams::signed_params(2, 2, 1, 1));
  const Subspace s(sp, Matrix{{1, 1, 0, 0}});
  const Subspace s2(sp, Matrix{{0, 0, 1, 1}});
  CHECK(classify(s) == OrbitParams::signed_tuple(CaseTag::RealOrthogonal, 1, 0, 0, 0, 0));
  CHECK(classify(s2) == OrbitParams::signed_tuple(CaseTag::RealOrthogonal, 0, 1, 0, 0, 0));
  CHECK_THROWS_AS(orbit_witness(s, s2), PreconditionError);
}

TEST_CASE("orbit witness maps sampled orbit points onto each other") {
  const std::vector<std::pair<CaseTag, GroupParams>> spaces{
      {CaseTag::RealOrthogonal, GroupParams::signed_params(3, 3, 1, 2)},
      {CaseTag::Unitary, GroupParams::signed_params(3, 3, 2, 1)},
      {CaseTag::ComplexOrthogonal, GroupParams::nm(5, 2)},
      {CaseTag::Symplectic, GroupParams::nm(3, 1)},
  };
  for (const auto& [c, g] : spaces) {
    const auto sp = standard_space(c, g);
    for (int r = 1; r <= max_isotropic_dim(c, g); ++r)
      for (const auto& t : valid_tuples(c, g, r)) {
        const Subspace s = random_in_orbit(sp, t, 11);
        const Subspace s2 = apply(cayley_element(*sp, 17), s);
        const IsometryElement w = orbit_witness(s, s2);
        CHECK(is_in_group(*sp, w));
        CHECK(apply(w, s) == s2);
      }
  }
}

TEST_CASE("orbit witness on pairs with large coefficients") {
  // Independent random points of one orbit; the forms to match have large
  // diagonal entries (hermitian entries built from primes 3 mod 4, or
  // coefficients whose primes exceed any trial-division bound).
  struct Pair {
    CaseTag c;
    GroupParams g;
    std::vector<int> tuple;
    std::uint64_t seed;
  };
  const std::vector<Pair> pairs{
      {CaseTag::Unitary, GroupParams::signed_params(2, 6, 1, 5), {0, 0, 0, 1, 1}, 0},
      {CaseTag::Unitary, GroupParams::signed_params(3, 4, 2, 2), {0, 0, 0, 2, 1}, 0},
      {CaseTag::Unitary, GroupParams::signed_params(3, 5, 1, 4), {0, 0, 0, 0, 2}, 0},
      {CaseTag::ComplexOrthogonal, GroupParams::nm(7, 4), {0, 0, 0, 3}, 0},
      {CaseTag::RealOrthogonal, GroupParams::signed_params(3, 5, 1, 4), {0, 0, 0, 1, 2}, 0},
  };
  for (const auto& p : pairs) {
    const auto sp = standard_space(p.c, p.g);
    const OrbitParams t = OrbitParams::from_entries(p.c, p.tuple);
    const Subspace s = random_in_orbit(sp, t, 100 + p.seed);
    const Subspace s2 = random_in_orbit(sp, t, 200 + p.seed);
    const IsometryElement w = orbit_witness(s, s2);
    CHECK(is_in_group(*sp, w));
    CHECK(apply(w, s) == s2);
  }
}
