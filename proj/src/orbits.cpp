#include "isograss/orbits.hpp"

#include "isograss/errors.hpp"

#include <algorithm>
#include <set>

namespace isograss {

namespace {

using i64 = std::int64_t;

// binom(x, 2) = x(x-1)/2, defined for every integer x.
i64 c2(i64 x) { return x * (x - 1) / 2; }
// dim Sp(y) for even y = 2x: x(2x+1) = (y/2)(y+1).
i64 dim_sp(i64 y) { return (y / 2) * (y + 1); }

void require_valid(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  if (!validate_params(c, g, t))
    throw InvalidArgument("tuple " + t.to_string() + " is not a valid orbit of " +
                          std::string(to_string(c)) + ' ' + params_to_string(c, g));
}

void require_r(CaseTag c, const GroupParams& g, int r) {
  validate_group_params(c, g);
  const int mx = max_isotropic_dim(c, g);
  if (r < 0 || r > mx)
    throw InvalidArgument("r = " + std::to_string(r) + " out of range [0, " + std::to_string(mx) +
                          "]");
}

// Doubled stabilizer dimension (2 dim H_S) so that the halves stay integral.
i64 stabilizer_doubled(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  const i64 ru = t.r_u, rw = t.r_w, a = t.a, k = t.k();
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::ComplexOrthogonal: {
      const i64 P = c == CaseTag::RealOrthogonal ? g.p1 + g.q1 : g.m;
      const i64 Q = c == CaseTag::RealOrthogonal ? g.p + g.q - g.p1 - g.q1 : g.n - g.m;
      const i64 cu = P - 2 * ru - 2 * a, cw = Q - 2 * rw - 2 * a;
      return c2(P) + c2(Q) + ru * ru + rw * rw + 2 * c2(k) - 2 * a * k - c2(cu) - c2(cw) +
             2 * c2(cu - k) + 2 * c2(cw - k);
    }
    case CaseTag::Unitary: {
      // Levi-factor count with real dimensions dim U(x,y) = (x+y)^2 and
      // dim GL(x, C) = 2x^2.
      const i64 P = g.p1 + g.q1, Q = g.p + g.q - P;
      const i64 cu = P - 2 * ru - 2 * a, cw = Q - 2 * rw - 2 * a;
      return P * P + Q * Q + 2 * ru * ru + 2 * rw * rw - cu * cu - cw * cw + 2 * k * k +
             2 * (cu - k) * (cu - k) + 2 * (cw - k) * (cw - k) - 4 * a * k;
    }
    case CaseTag::Symplectic: {
      const i64 m = g.m, n = g.n;
      return dim_sp(2 * m) + dim_sp(2 * n - 2 * m) + ru * ru + rw * rw - 2 * a * k -
             dim_sp(2 * m - 2 * ru - 2 * a) - dim_sp(2 * n - 2 * m - 2 * rw - 2 * a) +
             2 * dim_sp(k) + 2 * dim_sp(2 * m - 2 * ru - 2 * a - k) +
             2 * dim_sp(2 * n - 2 * m - 2 * rw - 2 * a - k);
    }
  }
  return 0;
}

i64 halve(i64 doubled, const OrbitParams& t) {
  if (doubled % 2 != 0)
    throw ConsistencyError("stabilizer formula is not an integer at " + t.to_string() + ": " +
                           std::to_string(doubled) + "/2");
  return doubled / 2;
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(parts, total - x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int max_isotropic_dim(CaseTag c, const GroupParams& g) {
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::Unitary: return std::min(g.p, g.q);
    case CaseTag::ComplexOrthogonal: return g.n / 2;
    case CaseTag::Symplectic: return g.n;
  }
  return 0;
}

std::int64_t dim_group(CaseTag c, const GroupParams& g) {
  validate_group_params(c, g);
  switch (c) {
    case CaseTag::RealOrthogonal: return c2(g.p1 + g.q1) + c2(g.p + g.q - g.p1 - g.q1);
    case CaseTag::Unitary: {
      const i64 P = g.p1 + g.q1, Q = g.p + g.q - P;
      return P * P + Q * Q;
    }
    case CaseTag::ComplexOrthogonal: return c2(g.m) + c2(g.n - g.m);
    case CaseTag::Symplectic: return dim_sp(2 * i64{g.m}) + dim_sp(2 * i64{g.n - g.m});
  }
  return 0;
}

std::int64_t dim_stabilizer(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  require_valid(c, g, t);
  const i64 v = halve(stabilizer_doubled(c, g, t), t);
  if (v < 0 || v > dim_group(c, g))
    throw ConsistencyError("stabilizer dimension " + std::to_string(v) + " out of range at " +
                           t.to_string());
  return v;
}

std::int64_t unitary_stabilizer_dim_published_doubled(const GroupParams& g, const OrbitParams& t) {
  const i64 P = g.p1 + g.q1, Q = g.p + g.q - P;
  const i64 ru = t.r_u, rw = t.r_w, a = t.a, k = t.a_u + t.a_w, r = t.total();
  return 2 * (P * P + Q * Q - 2 * P * ru - 2 * Q * rw) + 5 * ru * ru + 5 * rw * rw +
         2 * (a + k) * (-2 * i64{g.p} - 2 * i64{g.q} + 4 * r - k);
}

std::int64_t unitary_stabilizer_dim_published(CaseTag c, const GroupParams& g,
                                              const OrbitParams& t) {
  if (c != CaseTag::Unitary) return dim_stabilizer(c, g, t);
  require_valid(c, g, t);
  return halve(unitary_stabilizer_dim_published_doubled(g, t), t);
}

std::vector<OrbitParams> valid_tuples(CaseTag c, const GroupParams& g, int r) {
  require_r(c, g, r);
  const int parts = is_signed_case(c) ? 5 : 4;
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  compositions(parts, r, cur, all);
  std::vector<OrbitParams> out;
  for (const auto& e : all) {
    OrbitParams t = OrbitParams::from_entries(c, e);
    if (validate_params(c, g, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitInfo orbit_info(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  OrbitInfo info;
  info.params = t;
  info.dim_h = dim_group(c, g);
  info.dim_stab = dim_stabilizer(c, g, t);
  info.dim_orbit = info.dim_h - info.dim_stab;
  info.component_count = component_count(c, g, t);
  const auto open = open_orbits_closed_form(c, g, t.total());
  info.is_open = std::find(open.begin(), open.end(), t) != open.end();
  return info;
}

std::vector<OrbitInfo> enumerate_orbits(CaseTag c, const GroupParams& g, int r) {
  const auto tuples = valid_tuples(c, g, r);
  const auto open = open_orbits(c, g, r);
  std::vector<OrbitInfo> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) {
    OrbitInfo info;
    info.params = t;
    info.dim_h = dim_group(c, g);
    info.dim_stab = dim_stabilizer(c, g, t);
    info.dim_orbit = info.dim_h - info.dim_stab;
    info.component_count = component_count(c, g, t);
    info.is_open = std::find(open.begin(), open.end(), t) != open.end();
    out.push_back(info);
  }
  return out;
}

Subspace canonical_rep(const SpacePtr& space, const OrbitParams& t) {
  const FormSpace& sp = *space;
  const CaseTag c = sp.case_tag();
  const GroupParams& g = sp.params();
  require_valid(c, g, t);
  const Coords co{sp};
  const Field f = sp.field();
  Matrix rows(0, sp.dim(), f);
  auto vec = [&](std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    std::vector<Scalar> v(sp.dim());
    for (const auto& [idx, val] : terms) v[idx] += val;
    rows.append_row(v);
  };
  const Scalar one(1), i = Scalar::i();
  if (is_signed_case(c)) {
    for (int k = 1; k <= t.r_u; ++k) vec({{co.u_plus(k), one}, {co.u_minus(k), one}});
    for (int k = 1; k <= t.r_w; ++k) vec({{co.w_plus(k), one}, {co.w_minus(k), one}});
    for (int k = 1; k <= t.a_u; ++k) vec({{co.u_plus(t.r_u + k), one}, {co.w_minus(t.r_w + k), one}});
    for (int k = 1; k <= t.a_w; ++k) vec({{co.u_minus(t.r_u + k), one}, {co.w_plus(t.r_w + k), one}});
    for (int l = 1; l <= t.a; ++l)
      vec({{co.u_plus(t.r_u + t.a_u + l), one},
           {co.u_minus(t.r_u + t.a_w + l), one},
           {co.w_plus(t.r_w + t.a_w + l), one},
           {co.w_minus(t.r_w + t.a_u + l), one}});
  } else if (c == CaseTag::ComplexOrthogonal) {
    const int m = g.m, nm = g.n - g.m;
    for (int k = 1; k <= t.r_u; ++k) vec({{co.u(k), one}, {co.u(m + 1 - k), i}});
    for (int k = 1; k <= t.r_w; ++k) vec({{co.w(k), one}, {co.w(nm + 1 - k), i}});
    for (int l = 1; l <= t.b; ++l) vec({{co.u(t.r_u + t.a + l), one}, {co.w(t.r_w + t.a + l), i}});
    for (int k = 1; k <= t.a; ++k)
      vec({{co.u(t.r_u + k), one},
           {co.u(m + 1 - t.r_u - k), i},
           {co.w(t.r_w + k), one},
           {co.w(nm + 1 - t.r_w - k), i}});
  } else {
    const int m = g.m, n = g.n, h = t.b / 2;
    for (int k = m - t.r_u + 1; k <= m; ++k) vec({{co.e(k), one}});
    for (int k = n - t.r_w + 1; k <= n; ++k) vec({{co.e(k), one}});
    for (int l = 1; l <= h; ++l) {
      vec({{co.e(l), one}, {co.f(m + l), one}});
      vec({{co.f(l), one}, {co.e(m + l), one}});
    }
    for (int k = h + 1; k <= h + t.a; ++k) vec({{co.e(k), one}, {co.e(m + k), one}});
  }
  Subspace s(space, rows);
  if (static_cast<int>(s.dim()) != t.total())
    throw ConsistencyError("canonical spanning set for " + t.to_string() + " is dependent");
  return s;
}

std::vector<OrbitParams> open_orbits_closed_form(CaseTag c, const GroupParams& g, int r) {
  require_r(c, g, r);
  std::vector<OrbitParams> out;
  if (r == 0) return valid_tuples(c, g, 0);
  switch (c) {
    case CaseTag::RealOrthogonal:
    case CaseTag::Unitary: {
      const int A = std::min(g.p1, g.q - g.q1), B = std::min(g.q1, g.p - g.p1);
      if (r < A + B) {
        for (int au = 0; au <= std::min(A, r); ++au) {
          const int aw = r - au;
          if (aw <= B) out.push_back(OrbitParams::signed_tuple(c, 0, 0, 0, au, aw));
        }
      } else {
        const bool u_bigger = g.p1 + g.q1 > g.p + g.q - g.p1 - g.q1;
        out.push_back(u_bigger ? OrbitParams::signed_tuple(c, r - A - B, 0, 0, A, B)
                               : OrbitParams::signed_tuple(c, 0, r - A - B, 0, A, B));
      }
      break;
    }
    case CaseTag::ComplexOrthogonal: {
      if (r <= std::min(g.m, g.n - g.m))
        out.push_back(OrbitParams::unsigned_tuple(c, 0, 0, 0, r));
      else if (g.m > g.n - g.m)
        out.push_back(OrbitParams::unsigned_tuple(c, r - g.n + g.m, 0, 0, g.n - g.m));
      else
        out.push_back(OrbitParams::unsigned_tuple(c, 0, r - g.m, 0, g.m));
      break;
    }
    case CaseTag::Symplectic: {
      if (r >= std::min(2 * g.m, 2 * g.n - 2 * g.m)) {
        out.push_back(g.m <= g.n - g.m
                          ? OrbitParams::unsigned_tuple(c, 0, r - 2 * g.m, 0, 2 * g.m)
                          : OrbitParams::unsigned_tuple(c, r - 2 * g.n + 2 * g.m, 0, 0,
                                                        2 * g.n - 2 * g.m));
      } else {
        out.push_back(r % 2 == 0 ? OrbitParams::unsigned_tuple(c, 0, 0, 0, r)
                                 : OrbitParams::unsigned_tuple(c, 0, 0, 1, r - 1));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitParams> open_orbits_by_argmax(CaseTag c, const GroupParams& g, int r,
                                               const StabilizerFormula& formula) {
  const auto tuples = valid_tuples(c, g, r);
  const i64 dh = dim_group(c, g);
  i64 best = -1;
  std::vector<OrbitParams> out;
  for (const auto& t : tuples) {
    const i64 d = dh - formula(c, g, t);
    if (d > best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(t);
  }
  return out;
}

std::vector<OrbitParams> open_orbits(CaseTag c, const GroupParams& g, int r) {
  auto closed = open_orbits_closed_form(c, g, r);
  auto argmax = open_orbits_by_argmax(c, g, r);
  if (closed != argmax) {
    std::string msg = "open-orbit theorem disagrees with dimension argmax for " +
                      std::string(to_string(c)) + ' ' + params_to_string(c, g) +
                      " r=" + std::to_string(r) + ": closed form {";
    for (const auto& t : closed) msg += t.to_string();
    msg += "}, argmax {";
    for (const auto& t : argmax) msg += t.to_string();
    msg += "}";
    throw ConsistencyError(msg);
  }
  return closed;
}

int component_count(CaseTag c, const GroupParams& g, const OrbitParams& t) {
  require_valid(c, g, t);
  if (c == CaseTag::Unitary || c == CaseTag::Symplectic) return 1;
  if (c == CaseTag::ComplexOrthogonal) {
    const bool both = 2 * t.r_u + 2 * t.a + t.b == g.m && 2 * t.r_w + 2 * t.a + t.b == g.n - g.m;
    return both ? 2 : 1;
  }
  // Real orthogonal: the component table, row by row.
  const bool only_a = t.r_u == 0 && t.r_w == 0 && t.a_u == 0 && t.a_w == 0;
  const int a = t.a;
  if (only_a && a > 0 && g.p == 2 * a && g.q == 2 * a && g.p1 == a && g.q1 == a) return 4;
  if (only_a && a > 0 && g.q == 2 * a && g.q1 == a && g.p1 >= a && g.p - g.p1 >= a && g.p > 2 * a)
    return 2;
  if (only_a && a > 0 && g.p == 2 * a && g.p1 == a && g.q1 >= a && g.q - g.q1 >= a && g.q > 2 * a)
    return 2;
  if (g.p == g.q && t.r_u + t.a + t.a_u == g.p1 && t.r_w + t.a + t.a_w == g.p - g.p1 &&
      t.r_u + t.a + t.a_w == g.q1 && t.r_w + t.a + t.a_u == g.q - g.q1 &&
      t.r_u + t.r_w + t.a_u + t.a_w > 0)
    return 2;
  return 1;
}

std::vector<int> predicted_stabilizer_cosets(CaseTag c, const GroupParams& g,
                                             const OrbitParams& t) {
  require_valid(c, g, t);
  std::set<int> gens{0};
  if (c == CaseTag::RealOrthogonal) {
    if (t.r_u + t.a + t.a_u < g.p1 || t.r_w + t.a + t.a_w < g.p - g.p1) gens.insert(1);
    if (t.r_u + t.a + t.a_w < g.q1 || t.r_w + t.a + t.a_u < g.q - g.q1) gens.insert(2);
    if (t.r_u > 0 || t.r_w > 0 || t.a_u > 0 || t.a_w > 0) gens.insert(3);
  } else if (c == CaseTag::ComplexOrthogonal) {
    if (2 * t.r_u + 2 * t.a + t.b < g.m || 2 * t.r_w + 2 * t.a + t.b < g.n - g.m) gens.insert(1);
  }
  // Close under the group law of (Z/2)^2, which is XOR on the masks.
  std::set<int> group = gens;
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : std::vector<int>(group.begin(), group.end()))
      for (int y : std::vector<int>(group.begin(), group.end()))
        if (group.insert(x ^ y).second) grew = true;
  }
  return {group.begin(), group.end()};
}

IsometryElement IsometryElement::identity(const FormSpace& s) {
  return {Matrix::identity(s.dim_u(), s.field()), Matrix::identity(s.dim_w(), s.field())};
}

bool is_in_group(const FormSpace& s, const IsometryElement& h) {
  if (h.h1.rows() != s.dim_u() || h.h1.cols() != s.dim_u() || h.h2.rows() != s.dim_w() ||
      h.h2.cols() != s.dim_w())
    return false;
  const Matrix gu = s.gram_u(), gw = s.gram_w();
  const Matrix a = h.h1.with_field(s.field()), b = h.h2.with_field(s.field());
  return a.adjoint() * gu * a == gu && b.adjoint() * gw * b == gw;
}

Subspace apply(const IsometryElement& h, const Subspace& s) {
  const FormSpace& sp = s.space();
  if (h.h1.rows() != sp.dim_u() || h.h1.cols() != sp.dim_u() || h.h2.rows() != sp.dim_w() ||
      h.h2.cols() != sp.dim_w())
    throw InvalidArgument("isometry blocks do not match the U/W split");
  return s.transformed(h.full());
}

bool is_in_stabilizer(const IsometryElement& h, const Subspace& s) { return apply(h, s) == s; }

}  // namespace isograss
