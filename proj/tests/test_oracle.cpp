#include "isograss/errors.hpp"
#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/oracle.hpp"
#include "isograss/orbits.hpp"
#include "isograss/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace isograss;

namespace {

constexpr CaseTag RO = CaseTag::RealOrthogonal;

bool preserves(const Matrix& g, const Matrix& gram) { return g.adjoint() * gram * g == gram; }

}  // namespace

TEST_CASE("Lie algebra dimensions") {
  const auto ro = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(lie_algebra(*ro, Factor::U).basis.size() == 1);
  const auto un = standard_space(CaseTag::Unitary, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(lie_algebra(*un, Factor::U).basis.size() == 4);
  const auto sp = standard_space(CaseTag::Symplectic, GroupParams::nm(2, 1));
  CHECK(lie_algebra(*sp, Factor::U).basis.size() == 3);
  const auto co = standard_space(CaseTag::ComplexOrthogonal, GroupParams::nm(5, 2));
  CHECK(lie_algebra(*co, Factor::W).basis.size() == 3);

  for (const auto& a : lie_algebra(*un, Factor::W).basis) {
    const Matrix g = factor_gram(*un, Factor::W);
    CHECK((a.adjoint() * g + g * a).is_zero());
  }
}

TEST_CASE("tangent orbit dimensions") {
  const auto ro = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(tangent_orbit_dim(canonical_rep(ro, OrbitParams::signed_tuple(RO, 0, 0, 1, 0, 0))) == 1);
  CHECK(tangent_orbit_dim(canonical_rep(ro, OrbitParams::signed_tuple(RO, 0, 0, 0, 1, 0))) == 2);
  const auto un = standard_space(CaseTag::Unitary, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(tangent_orbit_dim(canonical_rep(un, OrbitParams::signed_tuple(CaseTag::Unitary, 0, 0, 0, 1, 0))) == 5);
  CHECK_THROWS_AS(tangent_orbit_dim(Subspace(ro, Matrix{{1, 0, 0, 0}})), PreconditionError);
}

TEST_CASE("tangent dimension is constant along orbits") {
  const auto sp = standard_space(CaseTag::Unitary, GroupParams::signed_params(3, 2, 1, 1));
  for (const auto& t : valid_tuples(CaseTag::Unitary, sp->params(), 2)) {
    const Subspace s = canonical_rep(sp, t);
    const auto d = tangent_orbit_dim(s);
    CHECK(tangent_orbit_dim(apply(cayley_element(*sp, 5), s)) == d);
  }
}

TEST_CASE("Cayley samples are isometries and deterministic") {
  for (CaseTag c : {RO, CaseTag::Unitary, CaseTag::ComplexOrthogonal, CaseTag::Symplectic}) {
    const GroupParams g = is_signed_case(c) ? GroupParams::signed_params(3, 2, 2, 1)
                                            : GroupParams::nm(4, 2);
    const auto sp = standard_space(c, g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix gu = cayley_sample(*sp, Factor::U, seed);
      CHECK(preserves(gu, factor_gram(*sp, Factor::U)));
      CHECK(gu == cayley_sample(*sp, Factor::U, seed));
      const IsometryElement h = cayley_element(*sp, seed);
      CHECK(is_in_group(*sp, h));
      CHECK(sp->is_isometry(h.full()));
    }
    CHECK(cayley_sample(*sp, Factor::W, 0, 0).is_identity());
  }
}

TEST_CASE("sign elements and their component labels") {
  const auto sp = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  const Coords c{*sp};
  const SignElement id = sign_element(*sp, {});
  CHECK(id.label == std::array<int, 4>{1, 1, 1, 1});
  CHECK(id.element.full().is_identity());

  const SignElement w = sign_element(*sp, {c.w_plus(1)});
  CHECK(w.label == std::array<int, 4>{1, 1, -1, 1});

  const SignElement uw = sign_element(*sp, {c.u_plus(1), c.w_minus(1)});
  CHECK(uw.label == std::array<int, 4>{-1, 1, 1, -1});

  // Labels multiply: H^{-+}_{+-} = H^{--}_{++} H^{+-}_{+-}.
  const SignElement a = sign_element(*sp, {c.u_plus(1), c.u_minus(1)});
  const SignElement b = sign_element(*sp, {c.u_minus(1), c.w_minus(1)});
  const IsometryElement prod = a.element.compose(b.element);
  CHECK(prod.full() == uw.element.full());
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.label[i] * b.label[i] == uw.label[i]);
  CHECK((a.coset ^ b.coset) == uw.coset);

  CHECK_THROWS_AS(sign_element(*sp, {7}), InvalidArgument);
  const auto symp = standard_space(CaseTag::Symplectic, GroupParams::nm(2, 1));
  CHECK_THROWS_AS(sign_element(*symp, {0}), InvalidArgument);
}

TEST_CASE("component representatives") {
  const auto ro = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  const auto reps = component_representatives(*ro);
  CHECK(reps.size() == 16);
  std::set<std::array<int, 4>> labels;
  for (const auto& r : reps) labels.insert(r.label);
  CHECK(labels.size() == 16);
  CHECK(component_representatives(*standard_space(CaseTag::ComplexOrthogonal, GroupParams::nm(4, 2))).size() == 4);
  CHECK(component_representatives(*standard_space(CaseTag::Unitary, GroupParams::signed_params(2, 2, 1, 1))).size() == 1);
}

TEST_CASE("sign stabilizers meet the predicted cosets") {
  const GroupParams g = GroupParams::signed_params(2, 2, 1, 1);
  const auto sp = standard_space(RO, g);
  const auto t = OrbitParams::signed_tuple(RO, 0, 0, 1, 0, 0);
  const auto found = stabilizer_sign_cosets(canonical_rep(sp, t));
  for (int coset : predicted_stabilizer_cosets(RO, g, t))
    CHECK(std::find(found.begin(), found.end(), coset) != found.end());
}

TEST_CASE("random symplectic isotropic subspaces") {
  const auto sp = standard_space(CaseTag::Symplectic, GroupParams::nm(4, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Subspace s = random_symplectic_isotropic(sp, 3, seed);
    CHECK(s.dim() == 3);
    CHECK(is_isotropic(s));
    CHECK(classify(s).b % 2 == 0);
  }
}

TEST_CASE("random orbit points stay in their orbit") {
  const auto sp = standard_space(RO, GroupParams::signed_params(3, 3, 2, 1));
  for (const auto& t : valid_tuples(RO, sp->params(), 2))
    CHECK(classify(random_in_orbit(sp, t, 9)) == t);
}

TEST_CASE("verification harness") {
  VerifyConfig cfg;
  cfg.trials = 3;
  cfg.max_ambient = 5;
  cfg.max_symplectic_ambient = 6;
  const VerifyReport a = run_verification(cfg);
  CHECK(a.passed());
  cfg.threads = 3;
  CHECK(run_verification(cfg).summary() == a.summary());

  cfg.cases = {CaseTag::Unitary};
  cfg.suites = {"formula-vs-oracle"};
  cfg.formula = unitary_stabilizer_dim_published;
  const VerifyReport bad = run_verification(cfg);
  CHECK_FALSE(bad.passed());

  cfg.suites = {"no-such-suite"};
  CHECK_THROWS_AS(run_verification(cfg), InvalidArgument);
}
