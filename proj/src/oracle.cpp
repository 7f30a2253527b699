#include "isograss/oracle.hpp"

#include "isograss/errors.hpp"
#include "isograss/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace isograss {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index): cheap and well mixed.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Matrix factor_gram(const FormSpace& space, Factor f) {
  return f == Factor::U ? space.gram_u() : space.gram_w();
}

std::int64_t factor_group_dim(const FormSpace& space, Factor f) {
  const std::int64_t d =
      static_cast<std::int64_t>(f == Factor::U ? space.dim_u() : space.dim_w());
  switch (space.case_tag()) {
    case CaseTag::RealOrthogonal:
    case CaseTag::ComplexOrthogonal: return d * (d - 1) / 2;
    case CaseTag::Unitary: return d * d;
    case CaseTag::Symplectic: return (d / 2) * (d + 1);
  }
  return 0;
}

namespace {

LieAlgebraBasis solve_lie_algebra(const FormSpace& space, Factor f) {
  const Matrix g = factor_gram(space, f);
  const std::size_t d = g.rows();
  const Field field = space.field();
  const bool herm = field == Field::GaussianHermitian;

  // Unknown matrices: E_jk (and i E_jk when realified).
  std::vector<Matrix> unknowns;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      Matrix e(d, d, field);
      e(j, k) = Scalar(1);
      unknowns.push_back(e);
      if (herm) {
        Matrix ei(d, d, field);
        ei(j, k) = Scalar::i();
        unknowns.push_back(ei);
      }
    }
  // Column u of the system is L(E_u) = E_u^* G + G E_u, flattened (real and
  // imaginary parts as separate rational rows when realified).
  const std::size_t eqs = herm ? 2 * d * d : d * d;
  Matrix sys(eqs, unknowns.size(), herm ? Field::Rational : field);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const Matrix l = unknowns[u].adjoint() * g + g * unknowns[u];
    for (std::size_t idx = 0; idx < d * d; ++idx) {
      const Scalar& x = l(idx / d, idx % d);
      if (herm) {
        sys(2 * idx, u) = Scalar(x.re());
        sys(2 * idx + 1, u) = Scalar(x.im());
      } else {
        sys(idx, u) = x;
      }
    }
  }
  const Matrix ker = kernel(sys);
  LieAlgebraBasis out{space.case_tag(), f, {}};
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix a(d, d, field);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!ker(u, c).is_zero()) a += unknowns[u] * ker(u, c);
    if (!(a.adjoint() * g + g * a).is_zero())
      throw ConsistencyError("Lie algebra basis element violates the defining equation");
    out.basis.push_back(a);
  }
  if (static_cast<std::int64_t>(out.basis.size()) != factor_group_dim(space, f))
    throw ConsistencyError("Lie algebra dimension " + std::to_string(out.basis.size()) +
                           " differs from the group dimension " +
                           std::to_string(factor_group_dim(space, f)));
  return out;
}

}  // namespace

LieAlgebraBasis lie_algebra(const FormSpace& space, Factor f) {
  // The basis depends only on (case, params, factor); memoize it, since the
  // tangent oracle and the Cayley sampler ask for it once per call.
  using Key = std::tuple<int, int, int, int, int, int, int, int>;
  static std::mutex mu;
  static std::map<Key, LieAlgebraBasis> cache;
  const GroupParams& g = space.params();
  const Key key{static_cast<int>(space.case_tag()), g.p, g.q, g.p1, g.q1, g.n, g.m,
                static_cast<int>(f)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LieAlgebraBasis basis = solve_lie_algebra(space, f);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(basis)).first->second;
}

std::int64_t tangent_orbit_dim(const Subspace& s) {
  if (!is_isotropic(s)) throw PreconditionError("tangent_orbit_dim: subspace is not isotropic");
  const FormSpace& sp = s.space();
  const Field field = sp.field();
  const bool herm = field == Field::GaussianHermitian;
  const std::size_t n = sp.dim(), du = sp.dim_u(), r = s.dim();
  const Matrix basis = s.basis().with_field(field);
  // The canonical basis is in reduced echelon form: reduce a vector modulo S
  // by clearing its pivot coordinates, then keep the free coordinates.
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (c < n && basis(i, c).is_zero()) ++c;
    pivots.push_back(c);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> images;
  const std::int64_t total_dim = factor_group_dim(sp, Factor::U) + factor_group_dim(sp, Factor::W);
  if (total_dim != dim_group(sp.case_tag(), sp.params()))
    throw ConsistencyError("factor dimensions do not add up to dim H");
  for (Factor f : {Factor::U, Factor::W}) {
    const LieAlgebraBasis lie = lie_algebra(sp, f);
    const std::size_t off = f == Factor::U ? 0 : du;
    for (const Matrix& a : lie.basis) {
      Matrix full(n, n, field);
      full.set_block(off, off, a);
      const Matrix moved = basis * full.transpose();  // rows s_i -> A s_i
      std::vector<Scalar> v;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Scalar> x = moved.row_vector(i);
        for (std::size_t j = 0; j < r; ++j) {
          const Scalar c = x[pivots[j]];
          if (c.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (!basis(j, k).is_zero()) x[k] -= c * basis(j, k);
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (is_pivot[k]) continue;
          if (herm) {
            v.emplace_back(x[k].re());
            v.emplace_back(x[k].im());
          } else {
            v.push_back(x[k]);
          }
        }
      }
      images.push_back(std::move(v));
    }
  }
  if (images.empty() || images.front().empty()) return 0;
  const Matrix m = Matrix::from_rows(images, images.front().size(),
                                     herm ? Field::Rational : field);
  return static_cast<std::int64_t>(rank(m));
}

Matrix cayley_sample(const FormSpace& space, Factor f, std::uint64_t seed, long magnitude) {
  if (magnitude < 0) throw InvalidArgument("cayley_sample: magnitude must be nonnegative");
  const Matrix g = factor_gram(space, f);
  if (magnitude == 0) return Matrix::identity(g.rows(), space.field());  // A = 0
  const LieAlgebraBasis lie = lie_algebra(space, f);
  const std::size_t d = g.rows();
  const Field field = space.field();
  const bool gaussian_coeffs = field == Field::GaussianBilinear;
  Rng rng(seed);
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Matrix a(d, d, field);
    for (const Matrix& b : lie.basis) {
      Scalar c = gaussian_coeffs ? Scalar(rng.rational(magnitude), rng.rational(magnitude))
                                 : Scalar(rng.rational(magnitude));
      if (!c.is_zero()) a += b * c;
    }
    const Matrix id = Matrix::identity(d, field);
    auto inv = inverse(id + a);
    if (!inv) continue;
    Matrix out = (id - a) * *inv;
    if (out.adjoint() * g * out != g) throw ConsistencyError("Cayley image is not an isometry");
    return out;
  }
  throw ConsistencyError("cayley_sample: I + A singular for every retry");
}

IsometryElement cayley_element(const FormSpace& space, std::uint64_t seed, long magnitude) {
  return {cayley_sample(space, Factor::U, derive_seed(seed, 0), magnitude),
          cayley_sample(space, Factor::W, derive_seed(seed, 1), magnitude)};
}

SignElement sign_element(const FormSpace& space, const std::vector<std::size_t>& flips) {
  const std::size_t n = space.dim(), du = space.dim_u();
  Matrix full = Matrix::identity(n, space.field());
  std::vector<bool> flipped(n, false);
  for (auto i : flips) {
    if (i >= n) throw InvalidArgument("sign_element: index " + std::to_string(i) + " out of range");
    flipped[i] = !flipped[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (flipped[i]) full(i, i) = Scalar(-1);
  SignElement out;
  out.element = {full.block(0, 0, du, du), full.block(du, du, n - du, n - du)};
  if (!is_in_group(space, out.element))
    throw InvalidArgument("sign_element: the flips do not define an isometry");
  const GroupParams& g = space.params();
  auto parity = [&](std::size_t begin, std::size_t end) {
    int s = 1;
    for (std::size_t i = begin; i < end; ++i)
      if (flipped[i]) s = -s;
    return s;
  };
  switch (space.case_tag()) {
    case CaseTag::RealOrthogonal: {
      const Coords co{space};
      const std::size_t up = co.u_plus(1), um = co.u_minus(1), wp = co.w_plus(1),
                        wm = co.w_minus(1);
      const std::size_t end = n;
      out.label = {parity(up, up + g.p1), parity(um, um + g.q1), parity(wp, wp + g.p - g.p1),
                   parity(wm, end)};
      out.coset = (out.label[0] * out.label[2] < 0 ? 1 : 0) |
                  (out.label[1] * out.label[3] < 0 ? 2 : 0);
      break;
    }
    case CaseTag::ComplexOrthogonal:
      out.label = {parity(0, du), parity(du, n), 1, 1};
      out.coset = out.label[0] * out.label[1] < 0 ? 1 : 0;
      break;
    case CaseTag::Unitary:
    case CaseTag::Symplectic: break;
  }
  return out;
}

std::vector<SignElement> component_representatives(const FormSpace& space) {
  std::vector<SignElement> out;
  const Coords co{space};
  switch (space.case_tag()) {
    case CaseTag::RealOrthogonal: {
      const std::array<std::size_t, 4> first{co.u_plus(1), co.u_minus(1), co.w_plus(1),
                                             co.w_minus(1)};
      for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::size_t> flips;
        for (int b = 0; b < 4; ++b)
          if (mask & (1 << b)) flips.push_back(first[b]);
        out.push_back(sign_element(space, flips));
      }
      break;
    }
    case CaseTag::ComplexOrthogonal:
      for (int mask = 0; mask < 4; ++mask) {
        std::vector<std::size_t> flips;
        if (mask & 1) flips.push_back(co.u(1));
        if (mask & 2) flips.push_back(co.w(1));
        out.push_back(sign_element(space, flips));
      }
      break;
    case CaseTag::Unitary:
    case CaseTag::Symplectic: out.push_back(sign_element(space, {})); break;
  }
  return out;
}

std::vector<int> stabilizer_sign_cosets(const Subspace& s) {
  const FormSpace& sp = s.space();
  const std::size_t n = sp.dim();
  if (n > 20) throw InvalidArgument("stabilizer_sign_cosets: ambient dimension too large");
  std::set<int> cosets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> flips;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) flips.push_back(i);
    SignElement e;
    try {
      e = sign_element(sp, flips);
    } catch (const InvalidArgument&) {
      continue;  // not an isometry (symplectic pairs)
    }
    if (cosets.count(e.coset)) continue;
    if (is_in_stabilizer(e.element, s)) cosets.insert(e.coset);
  }
  return {cosets.begin(), cosets.end()};
}

Subspace random_symplectic_isotropic(const SpacePtr& space, int r, std::uint64_t seed) {
  if (space->case_tag() != CaseTag::Symplectic)
    throw InvalidArgument("random_symplectic_isotropic: symplectic space required");
  if (r < 0 || r > max_isotropic_dim(CaseTag::Symplectic, space->params()))
    throw InvalidArgument("random_symplectic_isotropic: r out of range");
  const std::size_t n = space->dim();
  Rng rng(seed);
  Matrix rows(0, n, space->field());
  while (static_cast<int>(rows.rows()) < r) {
    // S^perp = {x : (s, x) = 0 for every row s}.
    Matrix perp = rows.rows() ? kernel(rows * space->gram()).transpose()
                              : Matrix::identity(n, space->field());
    std::vector<Scalar> v(n, Scalar(0));
    for (std::size_t i = 0; i < perp.rows(); ++i) {
      const long c = rng.uniform(-2, 2);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += perp(i, j) * Scalar(c);
    }
    Matrix cand = rows;
    cand.append_row(v);
    if (rank(cand) == cand.rows()) rows = cand;
  }
  return Subspace(space, rows);
}

Subspace random_in_orbit(const SpacePtr& space, const OrbitParams& t, std::uint64_t seed,
                         long magnitude) {
  const auto reps = component_representatives(*space);
  Rng rng(seed);
  const SignElement& sign = reps[rng.next() % reps.size()];
  const IsometryElement h = cayley_element(*space, rng.next(), magnitude).compose(sign.element);
  return apply(h, canonical_rep(space, t));
}

}  // namespace isograss
