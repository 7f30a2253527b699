#include "isograss/invariants.hpp"

#include "isograss/errors.hpp"
#include "isograss/linalg.hpp"

#include <numeric>
#include <sstream>

namespace isograss {

OrbitParams OrbitParams::from_entries(CaseTag c, const std::vector<int>& e) {
  const std::size_t want = is_signed_case(c) ? 5 : 4;
  if (e.size() != want)
    throw InvalidArgument("a " + std::string(isograss::to_string(c)) + " tuple has " + std::to_string(want) +
                          " entries, got " + std::to_string(e.size()));
  return is_signed_case(c) ? signed_tuple(c, e[0], e[1], e[2], e[3], e[4])
                           : unsigned_tuple(c, e[0], e[1], e[2], e[3]);
}

std::vector<int> OrbitParams::entries() const {
  if (is_signed_case(case_tag)) return {r_u, r_w, a, a_u, a_w};
  return {r_u, r_w, a, b};
}

int OrbitParams::total() const {
  auto e = entries();
  return std::accumulate(e.begin(), e.end(), 0);
}

std::string OrbitParams::to_string() const {
  std::ostringstream os;
  os << '(';
  auto e = entries();
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

bool validate_params(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  if (t.case_tag != c) return false;
  for (int x : t.entries())
    if (x < 0) return false;
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::Unitary:
      return t.r_u + t.a + t.a_u <= g.p1 && t.r_u + t.a + t.a_w <= g.q1 &&
             t.r_w + t.a + t.a_w <= g.p - g.p1 && t.r_w + t.a + t.a_u <= g.q - g.q1;
    case CaseTag::ComplexOrthogonal:
      return 2 * t.r_u + 2 * t.a + t.b <= g.m && 2 * t.r_w + 2 * t.a + t.b <= g.n - g.m;
    case CaseTag::Symplectic:
      return t.b % 2 == 0 && t.r_u + t.a + t.b / 2 <= g.m && t.r_w + t.a + t.b / 2 <= g.n - g.m;
  }
  return false;
}

namespace {

void require_isotropic(const Subspace& s) {
  if (!is_isotropic(s))
    throw PreconditionError("subspace is not isotropic: its restricted Gram matrix is " +
                            s.gram().to_string());
}

void check(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("classification self-check failed: " + what);
}

}  // namespace

OrbitParams classify(const Subspace& s) {
  require_isotropic(s);
  const FormSpace& sp = s.space();
  const CaseTag c = sp.case_tag();
  const std::size_t r = s.dim(), du = sp.dim_u(), d = sp.dim();
  if (r == 0) return OrbitParams::from_entries(c, std::vector<int>(is_signed_case(c) ? 5 : 4, 0));

  const Matrix bu = s.basis().cols_range(0, du);
  const Matrix bw = s.basis().cols_range(du, d);
  const std::size_t dim_pu = rank(bu), dim_pw = rank(bw);
  // S∩W is the kernel of the projection to U, and vice versa.
  const int r_w = static_cast<int>(r - dim_pu);
  const int r_u = static_cast<int>(r - dim_pw);

  // Gram matrices of the projected spanning sets; their ranks equal the
  // ranks of the forms restricted to proj_U S and proj_W S.
  const Matrix mu = sp.gram_of(bu, sp.gram_u());
  const Matrix mw = sp.gram_of(bw, sp.gram_w());
  check(mu == -mw, "U-side and W-side Gram matrices do not negate each other");
  const std::size_t rank_u = rank(mu), rank_w = rank(mw);

  const int a_u_side = static_cast<int>(dim_pu - rank_u) - r_u;
  const int a_w_side = static_cast<int>(dim_pw - rank_w) - r_w;
  check(a_u_side == a_w_side, "a differs between the U side (" + std::to_string(a_u_side) +
                                  ") and the W side (" + std::to_string(a_w_side) + ")");

  OrbitParams t;
  if (is_signed_case(c)) {
    const IsometryType iu = inertia(mu, sp.kind()), iw = inertia(mw, sp.kind());
    check(iu.s_plus == iw.s_minus && iu.s_minus == iw.s_plus,
          "signatures of the two projections are not opposite");
    t = OrbitParams::signed_tuple(c, r_u, r_w, a_u_side, static_cast<int>(iu.s_plus),
                                  static_cast<int>(iu.s_minus));
  } else {
    check(rank_u == rank_w, "form ranks of the two projections differ");
    t = OrbitParams::unsigned_tuple(c, r_u, r_w, a_u_side, static_cast<int>(rank_u));
  }
  check(t.total() == static_cast<int>(r), "tuple entries do not sum to dim S");
  check(validate_params(c, sp.params(), t), "tuple " + t.to_string() + " violates the constraints");
  return t;
}

OrbitParams classify_by_definition(const Subspace& s) {
  require_isotropic(s);
  const CaseTag c = s.space().case_tag();
  const auto r_u = static_cast<int>(intersect_u(s).dim());
  const auto r_w = static_cast<int>(intersect_w(s).dim());
  const Subspace pu = proj_u_by_definition(s);
  const Subspace pw = proj_w(s);
  const auto a = static_cast<int>(radical(pu).dim()) - r_u;
  const auto a_w_side = static_cast<int>(radical(pw).dim()) - r_w;
  check(a == a_w_side, "a differs between sides");
  if (is_signed_case(c)) {
    const IsometryType it = signature(pu);
    return OrbitParams::signed_tuple(c, r_u, r_w, a, static_cast<int>(it.s_plus),
                                     static_cast<int>(it.s_minus));
  }
  return OrbitParams::unsigned_tuple(c, r_u, r_w, a, static_cast<int>(pu.dim()) - a - r_u);
}

IsometryType isometry_type(const Subspace& s) { return signature(s); }

}  // namespace isograss
