#include "isograss/errors.hpp"
#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/oracle.hpp"
#include "isograss/orbits.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace isograss;

namespace {

constexpr CaseTag RO = CaseTag::RealOrthogonal;
constexpr CaseTag UN = CaseTag::Unitary;
constexpr CaseTag CO = CaseTag::ComplexOrthogonal;
constexpr CaseTag SP = CaseTag::Symplectic;

OrbitParams st(CaseTag c, int a, int b, int x, int y, int z) {
  return OrbitParams::signed_tuple(c, a, b, x, y, z);
}
OrbitParams ut(CaseTag c, int a, int b, int x, int y) {
  return OrbitParams::unsigned_tuple(c, a, b, x, y);
}

std::vector<OrbitParams> open_of(const std::vector<OrbitInfo>& orbits) {
  std::vector<OrbitParams> out;
  for (const auto& o : orbits)
    if (o.is_open) out.push_back(o.params);
  return out;
}

}  // namespace

TEST_CASE("group dimensions") {
  CHECK(dim_group(RO, GroupParams::signed_params(2, 2, 1, 1)) == 2);
  CHECK(dim_group(UN, GroupParams::signed_params(2, 2, 1, 1)) == 8);
  CHECK(dim_group(SP, GroupParams::nm(2, 1)) == 6);
  CHECK(dim_group(CO, GroupParams::nm(4, 2)) == 2);
}

TEST_CASE("stabilizer dimensions") {
  const GroupParams g = GroupParams::signed_params(2, 2, 1, 1);
  CHECK(dim_stabilizer(RO, g, st(RO, 0, 0, 1, 0, 0)) == 1);
  CHECK(dim_stabilizer(RO, g, st(RO, 0, 0, 0, 1, 0)) == 0);
  CHECK(dim_stabilizer(UN, g, st(UN, 0, 0, 0, 1, 0)) == 3);
  CHECK(orbit_info(UN, g, st(UN, 0, 0, 0, 1, 0)).dim_orbit == 5);
  CHECK(dim_stabilizer(CO, GroupParams::nm(4, 2), ut(CO, 0, 0, 0, 1)) == 0);
  CHECK(orbit_info(CO, GroupParams::nm(4, 2), ut(CO, 0, 0, 0, 1)).dim_orbit == 2);
  CHECK_THROWS_AS(dim_stabilizer(RO, g, st(RO, 2, 0, 0, 0, 0)), InvalidArgument);
}

TEST_CASE("the published unitary formula is only a fixture") {
  // It disagrees with the tangent oracle (and is sometimes half-integral).
  const GroupParams g = GroupParams::signed_params(2, 2, 1, 1);
  CHECK(unitary_stabilizer_dim_published(UN, g, st(UN, 1, 1, 0, 0, 0)) == 5);
  CHECK(dim_stabilizer(UN, g, st(UN, 1, 1, 0, 0, 0)) == 6);
  CHECK_THROWS_AS(unitary_stabilizer_dim_published(UN, g, st(UN, 1, 0, 0, 0, 0)), ConsistencyError);
  CHECK(unitary_stabilizer_dim_published(RO, g, st(RO, 0, 0, 1, 0, 0)) ==
        dim_stabilizer(RO, g, st(RO, 0, 0, 1, 0, 0)));
}

TEST_CASE("enumerate_orbits examples") {
  const auto ro = enumerate_orbits(RO, GroupParams::signed_params(2, 2, 1, 1), 1);
  CHECK(ro.size() == 5);
  CHECK(std::is_sorted(ro.begin(), ro.end(),
                       [](const OrbitInfo& a, const OrbitInfo& b) { return a.params < b.params; }));
  for (const auto& o : ro) CHECK(o.dim_orbit == o.dim_h - o.dim_stab);

  const auto big = enumerate_orbits(RO, GroupParams::signed_params(4, 4, 2, 2), 3);
  CHECK(open_of(big) == std::vector<OrbitParams>{st(RO, 0, 0, 0, 1, 2), st(RO, 0, 0, 0, 2, 1)});

  const auto sp = enumerate_orbits(SP, GroupParams::nm(6, 1), 1);
  std::vector<OrbitParams> tuples;
  for (const auto& o : sp) tuples.push_back(o.params);
  CHECK(tuples == std::vector<OrbitParams>{ut(SP, 0, 0, 1, 0), ut(SP, 0, 1, 0, 0), ut(SP, 1, 0, 0, 0)});

  const auto un = enumerate_orbits(UN, GroupParams::signed_params(4, 4, 2, 2), 3);
  CHECK(open_of(un) == std::vector<OrbitParams>{st(UN, 0, 0, 0, 1, 2), st(UN, 0, 0, 0, 2, 1)});

  const auto zero = enumerate_orbits(RO, GroupParams::signed_params(2, 2, 1, 1), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dim_orbit == 0);
  CHECK(zero[0].component_count == 1);

  CHECK_THROWS_AS(enumerate_orbits(RO, GroupParams::signed_params(2, 2, 1, 1), 3), InvalidArgument);
}

TEST_CASE("canonical representatives") {
  const auto ro = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  CHECK(canonical_rep(ro, st(RO, 0, 0, 0, 1, 0)).basis() == Matrix{{1, 0, 0, 1}});

  const auto co = standard_space(CO, GroupParams::nm(4, 2));
  const Matrix expected({{Scalar(1), Scalar::i(), Scalar(0), Scalar(0)}}, Field::GaussianBilinear);
  CHECK(canonical_rep(co, ut(CO, 1, 0, 0, 0)) == Subspace(co, expected));

  const auto sp = standard_space(SP, GroupParams::nm(2, 1));
  const Coords c{*sp};
  Matrix rows(2, 4);
  rows(0, c.e(1)) = 1, rows(0, c.f(2)) = 1;
  rows(1, c.f(1)) = 1, rows(1, c.e(2)) = 1;
  CHECK(canonical_rep(sp, ut(SP, 0, 0, 0, 2)) == Subspace(sp, rows));

  CHECK_THROWS_AS(canonical_rep(ro, st(RO, 0, 0, 0, 2, 0)), InvalidArgument);
}

TEST_CASE("open orbits") {
  const GroupParams g = GroupParams::signed_params(4, 4, 2, 2);
  CHECK(open_orbits(RO, g, 3) == std::vector<OrbitParams>{st(RO, 0, 0, 0, 1, 2), st(RO, 0, 0, 0, 2, 1)});

  // p1 + q1 <= r <= p - p1, q - q1 with dim U <= dim W: the unique open orbit.
  const GroupParams h = GroupParams::signed_params(5, 5, 1, 1);
  for (int r = 2; r <= 4; ++r)
    CHECK(open_orbits(RO, h, r) == std::vector<OrbitParams>{st(RO, 0, r - 2, 0, 1, 1)});

  const GroupParams s = GroupParams::nm(6, 1);
  CHECK(open_orbits(SP, s, 1) == std::vector<OrbitParams>{ut(SP, 0, 0, 1, 0)});
  CHECK(open_orbits(SP, s, 2) == std::vector<OrbitParams>{ut(SP, 0, 0, 0, 2)});
  for (int r = 3; r <= 6; ++r)
    CHECK(open_orbits(SP, s, r) == std::vector<OrbitParams>{ut(SP, 0, r - 2, 0, 2)});

  // r odd <= min(2m, 2n - 2m): (0, 0, 1, r - 1).
  const GroupParams s2 = GroupParams::nm(5, 2);
  CHECK(open_orbits(SP, s2, 1) == std::vector<OrbitParams>{ut(SP, 0, 0, 1, 0)});
  CHECK(open_orbits(SP, s2, 3) == std::vector<OrbitParams>{ut(SP, 0, 0, 1, 2)});

  for (CaseTag c : {RO, UN})
    for (int r = 1; r <= 4; ++r)
      CHECK(open_orbits_closed_form(c, g, r) == open_orbits_by_argmax(c, g, r));
}

TEST_CASE("component counts") {
  const GroupParams g = GroupParams::signed_params(2, 2, 1, 1);
  CHECK(component_count(RO, g, st(RO, 0, 0, 1, 0, 0)) == 4);
  CHECK(component_count(CO, GroupParams::nm(4, 2), ut(CO, 0, 0, 0, 2)) == 2);
  for (const auto& t : valid_tuples(UN, GroupParams::signed_params(3, 3, 1, 2), 2))
    CHECK(component_count(UN, GroupParams::signed_params(3, 3, 1, 2), t) == 1);
  for (const auto& o : enumerate_orbits(RO, GroupParams::signed_params(4, 4, 2, 2), 2)) {
    CHECK((o.component_count == 1 || o.component_count == 2 || o.component_count == 4));
  }
}

TEST_CASE("equal orbit dimensions for equal a_U + a_W") {
  for (CaseTag c : {RO, UN}) {
    const GroupParams g = GroupParams::signed_params(4, 4, 2, 2);
    for (int r = 1; r <= 4; ++r) {
      std::map<std::vector<int>, std::int64_t> dims;
      for (const auto& o : enumerate_orbits(c, g, r)) {
        const auto& t = o.params;
        const std::vector<int> key{t.r_u, t.r_w, t.a, t.a_u + t.a_w};
        auto [it, fresh] = dims.emplace(key, o.dim_orbit);
        if (!fresh) CHECK(it->second == o.dim_orbit);
      }
    }
  }
}

TEST_CASE("stabilizer membership") {
  const auto sp = standard_space(RO, GroupParams::signed_params(3, 3, 1, 2));
  const Subspace s = canonical_rep(sp, st(RO, 0, 0, 0, 1, 1));
  const IsometryElement id = IsometryElement::identity(*sp);
  CHECK(is_in_stabilizer(id, s));
  CHECK(is_in_group(*sp, id));

  bool found_mover = false;
  for (std::uint64_t seed = 1; seed < 20 && !found_mover; ++seed) {
    const IsometryElement h = cayley_element(*sp, seed);
    const Subspace hs = apply(h, s);
    CHECK(classify(hs) == classify(s));
    if (!(hs == s)) {
      CHECK_FALSE(is_in_stabilizer(h, s));
      found_mover = true;
    }
  }
  CHECK(found_mover);

  IsometryElement bad{Matrix::identity(2), Matrix::identity(2)};
  CHECK_THROWS_AS(is_in_stabilizer(bad, s), InvalidArgument);
}

TEST_CASE("stabilizer elements preserve the defining flags") {
  const auto sp = standard_space(RO, GroupParams::signed_params(2, 2, 1, 1));
  const Subspace s = canonical_rep(sp, st(RO, 0, 0, 1, 0, 0));
  for (const auto& rep : component_representatives(*sp)) {
    if (!is_in_stabilizer(rep.element, s)) continue;
    CHECK(apply(rep.element, intersect_u(s)) == intersect_u(s));
    CHECK(apply(rep.element, proj_u(s)) == proj_u(s));
    CHECK(apply(rep.element, radical(proj_u(s))) == radical(proj_u(s)));
    CHECK(apply(rep.element, proj_w(s)) == proj_w(s));
  }
}
