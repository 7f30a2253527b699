#include "isograss/form_isometry.hpp"

#include "isograss/errors.hpp"
#include "isograss/linalg.hpp"
#include "isograss/number_theory.hpp"

#include <cmath>
#include <random>
#include <set>

namespace isograss {

Matrix gram_rows(const Matrix& rows, const Matrix& gram) {
  Matrix b = rows.with_field(common_field(rows, gram));
  return b.involuted() * gram * b.transpose();
}

namespace {

constexpr int kRepresentAttempts = 400;
constexpr int kRepresentDraws = 40000;
constexpr std::uint64_t kRepresentRounds = 4;

// A rational mu with x mu^2 integral and free of small square factors.
mpq_class small_square_scale(const Scalar& x) {
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), x.re().get_den_mpz_t(), x.im().get_den_mpz_t());
  mpq_class mu(den);
  // x den^2 = (x den) den is integral; strip p^2 dividing both parts.
  mpz_class re = x.re().get_num() * (den / x.re().get_den()) * den;
  mpz_class im = x.im().get_num() * (den / x.im().get_den()) * den;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), re.get_mpz_t(), im.get_mpz_t());
  for (unsigned long p = 2; p < 1000 && g > 1; ++p) {
    const unsigned long pp = p * p;
    while (mpz_divisible_ui_p(g.get_mpz_t(), pp)) {
      mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), pp);
      mu /= p;
    }
    while (mpz_divisible_ui_p(g.get_mpz_t(), p)) mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
  }
  if (g > 1 && mpz_perfect_square_p(g.get_mpz_t())) mu /= mpq_class(sqrt(g));
  mu.canonicalize();
  return mu;
}

constexpr unsigned long kReduceRhoBudget = 1ul << 15;
// Entries larger than this are only stripped of small prime squares.
constexpr std::size_t kReduceMaxBits = 256;
constexpr unsigned long kSearchRhoBudget = 1ul << 12;
constexpr unsigned long kCongruenceRhoBudget = 1ul << 18;

// A scalar mu such that x * iota(mu) * mu is integral and small. Over Q every
// square factor is removed. For hermitian forms every norm is removed: odd
// powers of 2 and of primes 1 mod 4 via a Gaussian prime above them, and
// squares of primes 3 mod 4. Over Q(i) (bilinear) squares of Gaussian primes
// are removed. Falls back to small primes if factoring stalls.
Scalar reduce_scale(const Scalar& x, FormKind kind, Field field) {
  const mpq_class fallback = small_square_scale(x);
  if (field == Field::GaussianBilinear) {
    // Remove squares of Gaussian primes from x den^2.
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), x.re().get_den_mpz_t(), x.im().get_den_mpz_t());
    GaussInt y{mpz_class(x.re().get_num() * (den / x.re().get_den()) * den),
               mpz_class(x.im().get_num() * (den / x.im().get_den()) * den)};
    if (mpz_sizeinbase(y.norm().get_mpz_t(), 2) > kReduceMaxBits) return Scalar(fallback);
    std::vector<std::pair<mpz_class, unsigned>> fs;
    try {
      fs = nt::factor(y.norm(), kReduceRhoBudget);
    } catch (const WitnessUnavailable&) {
      return Scalar(fallback);
    }
    Scalar mu{mpq_class(den)};
    for (const auto& [p, e] : fs) {
      if (e < 2) continue;
      GaussInt unit;
      for (const auto& gp : nt::factor_gaussian(GaussInt(p), unit)) {
        const GaussInt sq = gp.prime * gp.prime;
        const Scalar inv = Scalar(mpq_class(gp.prime.re), mpq_class(gp.prime.im)).inverse();
        while (divides(sq, y)) {
          y = exact_div(y, sq);
          mu *= inv;
        }
      }
    }
    return mu;
  }
  if (!x.is_real()) return Scalar(fallback);
  const mpz_class den = x.re().get_den();
  const mpz_class n = x.re().get_num() * den;  // x den^2
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > kReduceMaxBits) return Scalar(fallback);
  std::vector<std::pair<mpz_class, unsigned>> fs;
  try {
    fs = nt::factor(n, kReduceRhoBudget);
  } catch (const WitnessUnavailable&) {
    return Scalar(fallback);
  }
  Scalar mu{mpq_class(den)};
  const bool herm = kind == FormKind::Hermitian;
  for (const auto& [p, e] : fs) {
    if (herm && (p == 2 || p % 4 == 1)) {
      GaussInt unit;
      const GaussInt pi = nt::factor_gaussian(GaussInt(p), unit).front().prime;
      const Scalar inv = Scalar(mpq_class(pi.re), mpq_class(pi.im)).inverse();
      for (unsigned j = 0; j < e; ++j) mu *= inv;
    } else {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      mu /= Scalar(mpq_class(pk));
    }
  }
  return mu;
}

bool field_sqrt(const Scalar& x, Field field, Scalar& root) {
  if (field == Field::GaussianBilinear) return gaussian_sqrt(x, root);
  if (!x.is_real()) return false;
  mpq_class r;
  if (!rational_sqrt(x.re(), r)) return false;
  root = Scalar(r);
  return true;
}

// d1 x^2 + d2 y^2 = c over Q or Q(i) (bilinear), all nonzero.
std::optional<std::vector<Scalar>> represent_binary(const Scalar& c, const Scalar& d1,
                                                    const Scalar& d2, Field field) {
  Scalar X, Y, Z;
  if (field == Field::GaussianBilinear) {
    auto sol = nt::solve_conic_gaussian(d1 / c, d2 / c);
    if (!sol) return std::nullopt;
    X = (*sol)[0], Y = (*sol)[1], Z = (*sol)[2];
  } else {
    if (!(d1 / c).is_real() || !(d2 / c).is_real()) return std::nullopt;
    auto sol = nt::solve_conic((d1 / c).re(), (d2 / c).re());
    if (!sol) return std::nullopt;
    X = Scalar((*sol)[0]), Y = Scalar((*sol)[1]), Z = Scalar((*sol)[2]);
  }
  if (!Z.is_zero()) return std::vector<Scalar>{X / Z, Y / Z};
  // The binary form is isotropic: e = (X, Y) and f = (X, -Y) are isotropic
  // with B(e, f) = d1 X^2 - d2 Y^2 = 2 d1 X^2, and q(alpha e + f) = 2 alpha B(e, f).
  const Scalar bef = d1 * X * X - d2 * Y * Y;
  const Scalar alpha = c / (Scalar(2) * bef);
  return std::vector<Scalar>{alpha * X + X, alpha * Y - Y};
}

// Symmetric (bilinear) representation over Q or Q(i).
std::optional<std::vector<Scalar>> represent_symmetric(const Scalar& c, const std::vector<Scalar>& d,
                                                       Field field, std::uint64_t seed) {
  const std::size_t k = d.size();
  std::vector<Scalar> x(k, Scalar(0));
  for (std::size_t i = 0; i < k; ++i) {
    Scalar root;
    if (field_sqrt(c / d[i], field, root)) {
      x[i] = root;
      return x;
    }
  }
  if (k < 2) return std::nullopt;
  if (k == 2) {
    auto two = represent_binary(c, d[0], d[1], field);
    if (!two) return std::nullopt;
    x[0] = (*two)[0], x[1] = (*two)[1];
    return x;
  }
  // With more coordinates free, a conic whose coefficients resist factoring
  // is skipped in favour of another draw.
  const nt::ScopedFactorBudget budget(kSearchRhoBudget);
  try {
    if (auto two = represent_binary(c, d[0], d[1], field)) {
      x[0] = (*two)[0], x[1] = (*two)[1];
      return x;
    }
  } catch (const WitnessUnavailable&) {
    // Fall through to the search.
  }
  // Fix random rational values on all but two coordinates and solve the
  // remaining binary problem; rotate which pair is left free.
  std::mt19937_64 rng(seed);
  // Primes of the coefficients: a solution may need them in its
  // denominators (a valuation that only cancellation can fix).
  std::set<mpz_class> prime_set;
  for (const auto& x : d) {
    // Over Q(i) the primes below the Gaussian primes of x divide its norm.
    const mpz_class n = field == Field::Rational ? x.re().get_num() : x.norm().get_num();
    try {
      for (const auto& [p, e] : nt::factor(n, kReduceRhoBudget)) prime_set.insert(p);
    } catch (const WitnessUnavailable&) {
      for (unsigned long p = 2; p < 10000; ++p)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) && mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25))
          prime_set.insert(mpz_class(p));
    }
  }
  const std::vector<mpz_class> coeff_primes(prime_set.begin(), prime_set.end());
  auto draw = [&](long range) {
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    mpz_class den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(range));
    for (const auto& p : coeff_primes)
      if (rng() % 2) den *= p;
    return mpq_class(num, den);
  };
  // Draws on coordinate i are also tried at the scale sqrt|c/d_i|, so a
  // definite form is not overshot by every draw.
  std::vector<mpq_class> scale;
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar ratio = c / d[i];
    const double v = std::sqrt(std::hypot(ratio.re().get_d(), ratio.im().get_d()));
    if (v >= 1)
      scale.emplace_back(static_cast<long>(std::llround(v)));
    else
      scale.emplace_back(1, static_cast<long>(std::ceil(1 / v)));
  }
  // Primes of the fixed coefficients; a remainder whose other part is one
  // prime is solvable as soon as the fixed local conditions hold.
  mpz_class fixed = 2;
  auto absorb = [&fixed](const Scalar& x) {
    for (const mpq_class* q : {&x.re(), &x.im()}) {
      fixed *= q->get_num() == 0 ? mpz_class(1) : mpz_class(abs(q->get_num()));
      fixed *= q->get_den();
    }
    const mpq_class nm = x.norm();  // over Q(i) the relevant primes divide the norm
    fixed *= abs(nm.get_num()) * nm.get_den();
  };
  absorb(c);
  for (const auto& x : d) absorb(x);
  // Over Q(i) the test is applied to the norm, where a Gaussian prime shows
  // up as p or p^2.
  auto promising = [&](const Scalar& rest) {
    const mpq_class v = field == Field::Rational ? rest.re() : rest.norm();
    mpz_class n = abs(v.get_num()) * v.get_den();
    for (unsigned long p = 2; p < 1000; ++p)
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    for (mpz_class g; (g = gcd(n, fixed)) > 1;) n /= g;
    if (n == 1 || mpz_probab_prime_p(n.get_mpz_t(), 25) > 0) return true;
    if (field == Field::Rational || !mpz_perfect_square_p(n.get_mpz_t())) return false;
    const mpz_class root = sqrt(n);
    return mpz_probab_prime_p(root.get_mpz_t(), 25) > 0;
  };
  int attempt = 0;
  for (int draws = 0; draws < kRepresentDraws && attempt < kRepresentAttempts; ++draws) {
    const long range = 2 + attempt / 20;
    const bool scaled = draws % 2 == 0;
    const std::size_t i0 = static_cast<std::size_t>(draws) % k;
    const std::size_t i1 = (i0 + 1 + (static_cast<std::size_t>(draws) / k) % (k - 1)) % k;
    Scalar t(0);
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == i0 || i == i1) continue;
      mpq_class re = draw(range), im = field == Field::GaussianBilinear ? draw(range) : mpq_class(0);
      if (scaled) re *= scale[i], im *= scale[i];
      x[i] = Scalar(re, im);
      nonzero = nonzero || !x[i].is_zero();
      t += d[i] * x[i] * x[i];
    }
    const Scalar rest = c - t;
    if (rest.is_zero()) {
      if (!nonzero) continue;
      x[i0] = x[i1] = Scalar(0);
      return x;
    }
    if (!promising(rest)) continue;
    ++attempt;
    try {
      if (auto two = represent_binary(rest, d[i0], d[i1], field)) {
        x[i0] = (*two)[0], x[i1] = (*two)[1];
        return x;
      }
    } catch (const WitnessUnavailable&) {
      // A coefficient resisted factorization; try another offset.
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Scalar>> represent(const Scalar& c, const std::vector<Scalar>& d,
                                             FormKind kind, Field field, std::uint64_t seed) {
  if (c.is_zero()) throw InvalidArgument("represent: target must be nonzero");
  for (const auto& x : d)
    if (x.is_zero()) throw InvalidArgument("represent: diagonal must be nonzero");
  if (kind == FormKind::Alternating) throw InvalidArgument("represent: alternating form");
  if (kind == FormKind::Symmetric) return represent_symmetric(c, d, field, seed);
  // Hermitian: conj(z) d z = d (x^2 + y^2) for z = x + iy, so realify.
  if (!c.is_real()) return std::nullopt;
  std::vector<Scalar> real_d;
  for (const auto& x : d) {
    if (!x.is_real()) throw InvalidArgument("represent: hermitian diagonal must be rational");
    real_d.push_back(x);
    real_d.push_back(x);
  }
  auto sol = represent_symmetric(c, real_d, Field::Rational, seed);
  if (!sol) return std::nullopt;
  std::vector<Scalar> z;
  for (std::size_t i = 0; i < d.size(); ++i)
    z.emplace_back((*sol)[2 * i].re(), (*sol)[2 * i + 1].re());
  return z;
}

Matrix symplectic_basis(const Matrix& gram) {
  const std::size_t n = gram.rows();
  if (n % 2) throw InvalidArgument("symplectic_basis: odd dimension");
  std::vector<Matrix> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(Matrix::identity(n, gram.field()).row(i));
  auto pair = [&](const Matrix& x, const Matrix& y) { return (x * gram * y.transpose())(0, 0); };
  std::vector<Matrix> es, fs;
  while (!rest.empty()) {
    Matrix e = rest.front();
    rest.erase(rest.begin());
    std::size_t j = 0;
    while (j < rest.size() && pair(e, rest[j]).is_zero()) ++j;
    if (j == rest.size()) throw InvalidArgument("symplectic_basis: degenerate form");
    Matrix f = rest[j] * pair(e, rest[j]).inverse();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    for (auto& w : rest) w = w + e * pair(f, w) - f * pair(e, w);
    es.push_back(e);
    fs.push_back(f);
  }
  Matrix out(0, n, gram.field());
  for (const auto& e : es) out = Matrix::vstack(out, e);
  for (const auto& f : fs) out = Matrix::vstack(out, f);
  return out;
}

std::optional<Matrix> find_congruence(const Matrix& m1, const Matrix& m2, FormKind kind) {
  if (m1.rows() != m2.rows() || !m1.is_square() || !m2.is_square())
    throw InvalidArgument("find_congruence: shape mismatch");
  const std::size_t k = m1.rows();
  const Field field = common_field(m1, m2);
  if (m1 == m2) return Matrix::identity(k, field);
  if (kind == FormKind::Alternating) {
    auto b1 = inverse(symplectic_basis(m1));
    if (!b1) throw ConsistencyError("symplectic basis is singular");
    return *b1 * symplectic_basis(m2);
  }
  const bool herm = kind == FormKind::Hermitian;
  auto iota = [herm](const Scalar& x) { return herm ? x.conj() : x; };
  // Bounds the total work: a factorization beyond this budget surfaces as
  // WitnessUnavailable instead of an open-ended search.
  const nt::ScopedFactorBudget budget(kCongruenceRhoBudget);

  // Target: rows T1 with Gram diag(a). Source: orthogonal rows W with
  // Gram diag(e). Both are rescaled so the entries stay small.
  Diagonalization d1 = congruence_diagonalize(m1, kind);
  Diagonalization d2 = congruence_diagonalize(m2, kind);
  std::vector<Scalar> a = d1.diagonal, e = d2.diagonal;
  Matrix t1 = d1.transform;
  std::vector<Matrix> w;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].is_zero() || e[i].is_zero()) throw InvalidArgument("find_congruence: degenerate form");
    const Scalar ma = reduce_scale(a[i], kind, field);
    a[i] *= iota(ma) * ma;
    for (std::size_t j = 0; j < k; ++j) t1(i, j) *= ma;
    const Scalar me = reduce_scale(e[i], kind, field);
    e[i] *= iota(me) * me;
    w.push_back(d2.transform.row(i) * me);
  }

  // Peel off one target value at a time. A representing vector x (in the
  // coordinates of W) is folded pair by pair into a single basis vector:
  // {W_p, W_q} -> {x_p W_p + x_q W_q, e_q i(x_q) W_p - e_p i(x_p) W_q}, which
  // keeps W orthogonal with entries beta and e_p e_q beta.
  Matrix v(0, k, field);
  for (std::size_t i = 0; i < k; ++i) {
    // The search is randomized; a miss on one seed is retried on others
    // before the forms are declared incongruent.
    std::optional<std::vector<Scalar>> sol;
      for (std::uint64_t round = 0; round < kRepresentRounds && !sol; ++round)
      sol = represent(a[i], e, kind, field, 0x5eed + i + 7919 * round);
    if (!sol) return std::nullopt;
    std::vector<Scalar> x = *sol;
    for (;;) {
      std::vector<std::size_t> support;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!x[j].is_zero()) support.push_back(j);
      if (support.size() == 1) break;
      bool folded = false;
      for (std::size_t s0 = 0; s0 < support.size() && !folded; ++s0)
        for (std::size_t s1 = s0 + 1; s1 < support.size() && !folded; ++s1) {
          const std::size_t p = support[s0], q = support[s1];
          const Scalar beta = e[p] * iota(x[p]) * x[p] + e[q] * iota(x[q]) * x[q];
          if (beta.is_zero()) continue;  // a hyperbolic pair; another pair works
          Matrix z = w[p] * x[p] + w[q] * x[q];
          Matrix zp = w[p] * (e[q] * iota(x[q])) - w[q] * (e[p] * iota(x[p]));
          Scalar ez = e[p] * e[q] * beta;
          const Scalar mz = reduce_scale(ez, kind, field);
          ez *= iota(mz) * mz;
          w[p] = z;
          e[p] = beta;
          x[p] = Scalar(1);
          w[q] = zp * mz;
          e[q] = ez;
          x[q] = Scalar(0);
          folded = true;
        }
      if (!folded) throw ConsistencyError("find_congruence: no anisotropic pair to fold");
    }
    std::size_t j = 0;
    while (x[j].is_zero()) ++j;
    v = Matrix::vstack(v, w[j] * x[j]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
  }
  auto t1inv = inverse(t1);
  if (!t1inv) throw ConsistencyError("congruence transform is singular");
  Matrix t = *t1inv * v;
  if (gram_rows(t, m2) != m1) throw ConsistencyError("find_congruence produced a non-isometry");
  return t;
}

namespace {

// Unit vectors completing the rows of `k` to a basis of the coefficient space.
Matrix completion(const Matrix& k, std::size_t n, Field field) {
  RrefResult r = rref(k);
  std::vector<bool> piv(n, false);
  for (auto c : r.pivot_cols) piv[c] = true;
  Matrix out(0, n, field);
  Matrix id = Matrix::identity(n, field);
  for (std::size_t c = 0; c < n; ++c)
    if (!piv[c]) out = Matrix::vstack(out, id.row(c));
  return out;
}

// Hyperbolic partners z_j for the radical rows r_j of span(rad; nondeg):
// (r_i, z_j) = delta_ij, (nondeg, z_j) = 0, (z_i, z_j) = 0, z_j isotropic.
Matrix hyperbolic_partners(const Matrix& gram, FormKind kind, const Matrix& rad,
                           const Matrix& nondeg) {
  const std::size_t n = gram.cols();
  const Field field = gram.field();
  Matrix z(0, n, field);
  for (std::size_t j = 0; j < rad.rows(); ++j) {
    Matrix lhs = Matrix::vstack(Matrix::vstack(rad, nondeg), z);
    Matrix a = lhs.involuted() * gram;  // (x, z) = conj(x) G z^T
    Matrix b(a.rows(), 1, field);
    b(j, 0) = Scalar(1);
    auto sol = solve(a, b);
    if (!sol) throw ConsistencyError("Witt extension: no hyperbolic partner");
    Matrix zj = sol->transpose();
    if (kind != FormKind::Alternating) {
      Scalar q = gram_rows(zj, gram)(0, 0);
      zj -= rad.row(j) * (q / Scalar(2));
    }
    z = Matrix::vstack(z, zj);
  }
  return z;
}

Matrix reflection(const Matrix& gram, FormKind kind, const Matrix& v, const Scalar& zeta) {
  // x -> x + (zeta - 1) (v, x) / (v, v) v, as a matrix on column vectors.
  const std::size_t n = gram.rows();
  const Scalar q = gram_rows(v, gram)(0, 0);
  Matrix col = v.transpose();
  Matrix lin = (kind == FormKind::Hermitian ? v.involuted() : v) * gram;
  return Matrix::identity(n, gram.field()) + col * lin * ((zeta - Scalar(1)) / q);
}

}  // namespace

Matrix witt_extend(const Matrix& gram, FormKind kind, const Matrix& domain, const Matrix& image) {
  const std::size_t n = gram.rows();
  const Field field = gram.field();
  if (domain.rows() != image.rows() || domain.cols() != n || image.cols() != n)
    throw InvalidArgument("witt_extend: shape mismatch");
  const Matrix d = domain.with_field(field), y = image.with_field(field);
  const std::size_t k = d.rows();
  if (rank(d) != k || rank(y) != k) throw InvalidArgument("witt_extend: dependent rows");
  const Matrix md = gram_rows(d, gram);
  if (md != gram_rows(y, gram)) throw InvalidArgument("witt_extend: map is not an isometry");
  if (k == 0) return Matrix::identity(n, field);

  // Split coefficients into radical + complement and add hyperbolic partners.
  Matrix radc = kernel(md).transpose();
  Matrix compc = completion(radc, k, field);
  Matrix e = Matrix::vstack(Matrix::vstack(radc * d, compc * d),
                            hyperbolic_partners(gram, kind, radc * d, compc * d));
  Matrix e2 = Matrix::vstack(Matrix::vstack(radc * y, compc * y),
                             hyperbolic_partners(gram, kind, radc * y, compc * y));
  const Matrix me = gram_rows(e, gram);
  if (me != gram_rows(e2, gram)) throw ConsistencyError("Witt extension: partner mismatch");

  Matrix g;
  if (kind == FormKind::Alternating) {
    Matrix sb = symplectic_basis(me);
    Matrix x = sb * e, x2 = sb * e2;
    // Complements: z with (x, z) = 0 for all rows x.
    auto perp = [&](const Matrix& rows) { return kernel(rows.involuted() * gram).transpose(); };
    Matrix c = perp(x), c2 = perp(x2);
    if (c.rows() > 0) {
      c = symplectic_basis(gram_rows(c, gram)) * c;
      c2 = symplectic_basis(gram_rows(c2, gram)) * c2;
    }
    Matrix from = Matrix::vstack(x, c), to = Matrix::vstack(x2, c2);
    auto inv = inverse(from);
    if (!inv) throw ConsistencyError("Witt extension: basis is singular");
    g = (*inv * to).transpose();
  } else {
    Diagonalization dg = congruence_diagonalize(me, kind);
    Matrix xs = dg.transform * e, ys = dg.transform * e2;
    g = Matrix::identity(n, field);
    for (std::size_t i = 0; i < xs.rows(); ++i) {
      Matrix x = xs.row(i) * g.transpose();
      Matrix yv = ys.row(i);
      if (x == yv) continue;
      const Scalar alpha = gram_rows(x, gram)(0, 0);
      if (kind == FormKind::Symmetric) {
        Matrix v = x - yv;
        if (!gram_rows(v, gram)(0, 0).is_zero()) {
          g = reflection(gram, kind, v, Scalar(-1)) * g;
        } else {
          g = reflection(gram, kind, yv, Scalar(-1)) * reflection(gram, kind, x + yv, Scalar(-1)) * g;
        }
      } else {
        const Scalar beta = (yv.involuted() * gram * x.transpose())(0, 0);
        Matrix v = x - yv;
        if (!gram_rows(v, gram)(0, 0).is_zero()) {
          g = reflection(gram, kind, v, (beta.conj() - alpha) / (alpha - beta)) * g;
        } else {
          Matrix w = x + yv;
          g = reflection(gram, kind, yv, Scalar(-1)) *
              reflection(gram, kind, w, (-alpha - beta.conj()) / (alpha + beta)) * g;
        }
      }
    }
  }
  if (g.adjoint() * gram * g != gram) throw ConsistencyError("Witt extension is not an isometry");
  if (d * g.transpose() != y) throw ConsistencyError("Witt extension does not extend the map");
  return g;
}

}  // namespace isograss
