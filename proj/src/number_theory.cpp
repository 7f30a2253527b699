#include "isograss/number_theory.hpp"

#include "isograss/errors.hpp"

#include <algorithm>
#include <map>

namespace isograss::nt {

namespace {

constexpr unsigned long kTrialBound = 1u << 14;
constexpr unsigned long kRhoIterations = kDefaultRhoBudget;

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

// Pollard rho with Brent's cycle detection and batched gcds.
// Returns a nontrivial factor of the odd composite n, or 0 on failure.
mpz_class pollard_brent(const mpz_class& n, unsigned long c_seed, unsigned long budget) {
  const mpz_class c = c_seed;
  auto f = [&](const mpz_class& x) {
    mpz_class y = x * x + c;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
    return y;
  };
  mpz_class y = 2, x, ys, q = 1, g = 1;
  const unsigned long m = 128;
  unsigned long r = 1, iterations = 0;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        mpz_class d = x - y;
        q = q * abs(d);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      iterations += m;
      if (iterations > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time from the saved point.
    do {
      ys = f(ys);
      mpz_class d = abs(mpz_class(x - ys));
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out, unsigned long budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  // Rho cannot split a prime power; take exact roots first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        for (unsigned long j = 0; j < k; ++j) factor_into(root, out, budget);
        return;
      }
    }
  }
  // A full budget tries many polynomials; a reduced one gives up quickly.
  const unsigned long polynomials = budget >= kRhoIterations ? 23 : 3;
  for (unsigned long c = 1; c <= polynomials; ++c) {
    mpz_class d = pollard_brent(n, c, budget);
    if (d != 0) {
      factor_into(d, out, budget);
      factor_into(mpz_class(n / d), out, budget);
      return;
    }
  }
  throw WitnessUnavailable("integer factorization budget exhausted for " + n.get_str());
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class pow_mod(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ConsistencyError("modular inverse does not exist");
  return r;
}

// ---------------------------------------------------------------------------
// Legendre descent, written once for the two Euclidean rings Z and Z[i].

struct IntRing {
  using E = mpz_class;
  static E mul(const E& a, const E& b) { return a * b; }
  static E sub(const E& a, const E& b) { return a - b; }
  static E add(const E& a, const E& b) { return a + b; }
  static E one() { return 1; }
  static E zero() { return 0; }
  static bool is_zero(const E& a) { return sgn(a) == 0; }
  static mpz_class size(const E& a) { return abs(a); }
  static bool is_square(const E& a, E& root) {
    if (sgn(a) < 0 || !mpz_perfect_square_p(a.get_mpz_t())) return false;
    root = sqrt(a);
    return true;
  }
  static void squarefree(const E& a, E& core, E& root) { squarefree_split(a, core, root); }
  static E div_exact(const E& a, const E& b) {
    E q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool small_enough(const E& b) { return abs(b) <= 1; }
  static E gcd(const E& a, const E& b) {
    E g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  // t with t^2 = a (mod b), b squarefree, |t| <= |b|/2.
  static std::optional<E> sqrt_mod(const E& a, const E& b) {
    const mpz_class m = abs(b);
    if (m == 1) return E(0);
    mpz_class t = 0, modulus = 1;
    for (const auto& [p, e] : factor(m)) {
      (void)e;
      mpz_class ap = mod_pos(a, p), r;
      if (ap == 0) {
        r = 0;
      } else if (p == 2) {
        r = ap;
      } else if (!sqrt_mod_prime(ap, p, r)) {
        return std::nullopt;
      }
      // CRT: t = t + modulus * ((r - t) / modulus mod p)
      mpz_class k = mod_pos(mpz_class((r - t) * inv_mod(mod_pos(modulus, p), p)), p);
      t += modulus * k;
      modulus *= p;
    }
    t = mod_pos(t, m);
    if (2 * t > m) t -= m;
    return t;
  }

  static std::optional<std::array<E, 3>> base_case(const E&, const E&) { return std::nullopt; }
};

struct GaussRing {
  using E = GaussInt;
  static E mul(const E& a, const E& b) { return a * b; }
  static E sub(const E& a, const E& b) { return a - b; }
  static E add(const E& a, const E& b) { return a + b; }
  static E one() { return 1; }
  static E zero() { return 0; }
  static bool is_zero(const E& a) { return a.is_zero(); }
  static mpz_class size(const E& a) { return a.norm(); }
  static bool is_square(const E& a, E& root) {
    Scalar r;
    if (!gaussian_sqrt(Scalar(mpq_class(a.re), mpq_class(a.im)), r)) return false;
    if (r.re().get_den() != 1 || r.im().get_den() != 1) return false;
    root = GaussInt(r.re().get_num(), r.im().get_num());
    return true;
  }
  static void squarefree(const E& a, E& core, E& root) { squarefree_split(a, core, root); }
  static E div_exact(const E& a, const E& b) { return exact_div(a, b); }
  static bool small_enough(const E& b) { return b.norm() <= 2; }
  static E gcd(const E& a, const E& b) { return isograss::gcd(a, b); }

  static std::optional<E> sqrt_mod(const E& a, const E& b) {
    if (b.norm() == 1) return E(0);
    GaussInt unit;
    E t = 0, modulus = 1;
    for (const auto& gp : factor_gaussian(b, unit)) {
      const E& pi = gp.prime;
      E r;
      if (divides(pi, a)) {
        r = 0;
      } else {
        auto s = sqrt_mod_gaussian_prime(a, pi);
        if (!s) return std::nullopt;
        r = *s;
      }
      E x, y;
      E g = ext_gcd(modulus, pi, x, y);  // x*modulus + y*pi = g, a unit
      E ginv = g.conj();                  // unit inverse
      E k = mod(mul(mul(sub(r, t), x), ginv), pi);
      t = add(t, mul(modulus, k));
      modulus = mul(modulus, pi);
    }
    return mod(t, modulus);
  }

  // Square root modulo a Gaussian prime pi that does not divide a.
  static std::optional<E> sqrt_mod_gaussian_prime(const E& a, const E& pi) {
    const mpz_class n = pi.norm();
    if (n == 2) return a;  // residue field F_2: every element is its own square
    if (sgn(pi.im) == 0 || sgn(pi.re) == 0) {
      // Inert prime p = 3 mod 4 (up to a unit): residue field F_p[i].
      const mpz_class p = abs(mpz_class(pi.re + pi.im));
      const mpz_class x = mod_pos(a.re, p), y = mod_pos(a.im, p);
      const mpz_class nn = mod_pos(mpz_class(x * x + y * y), p);
      mpz_class s;
      if (!sqrt_mod_prime(nn, p, s)) return std::nullopt;
      const mpz_class half = inv_mod(2, p);
      for (int sign = 0; sign < 2; ++sign) {
        const mpz_class ss = sign ? mod_pos(mpz_class(-s), p) : s;
        mpz_class u2 = mod_pos(mpz_class((x + ss) * half), p), u;
        if (u2 == 0) {
          // u = 0: then -v^2 = x and 2uv = y = 0.
          mpz_class v2 = mod_pos(mpz_class(-x), p), v;
          if (y == 0 && sqrt_mod_prime(v2, p, v)) return E(0, v);
          continue;
        }
        if (!sqrt_mod_prime(u2, p, u)) continue;
        mpz_class v = mod_pos(mpz_class(y * inv_mod(mod_pos(mpz_class(2 * u), p), p)), p);
        return E(u, v);
      }
      return std::nullopt;
    }
    // Split prime: Z[i]/pi = F_p with i -> -re * im^{-1}.
    const mpz_class p = n;
    const mpz_class r = mod_pos(mpz_class(-pi.re * inv_mod(mod_pos(pi.im, p), p)), p);
    const mpz_class v = mod_pos(mpz_class(a.re + a.im * r), p);
    mpz_class s;
    if (!sqrt_mod_prime(v, p, s)) return std::nullopt;
    return E(s);
  }

  static std::optional<std::array<E, 3>> base_case(const E& a, const E& b) {
    // Both coefficients have norm <= 2; a solution, if any, is tiny.
    const int lim = 2;
    for (int x0 = -lim; x0 <= lim; ++x0)
      for (int x1 = -lim; x1 <= lim; ++x1)
        for (int y0 = -lim; y0 <= lim; ++y0)
          for (int y1 = -lim; y1 <= lim; ++y1) {
            E x(x0, x1), y(y0, y1);
            if (x.is_zero() && y.is_zero()) continue;
            E rhs = add(mul(a, mul(x, x)), mul(b, mul(y, y)));
            E z;
            if (rhs.is_zero()) return std::array<E, 3>{x, y, E(0)};
            if (is_square(rhs, z)) return std::array<E, 3>{x, y, z};
          }
    return std::nullopt;
  }
};

// Nontrivial (x, y, z) with a x^2 + b y^2 = z^2, a and b squarefree.
template <class R>
std::optional<std::array<typename R::E, 3>> legendre(const typename R::E& a,
                                                     const typename R::E& b, int depth = 0) {
  using E = typename R::E;
  if (depth > 4096) throw ConsistencyError("Legendre descent did not terminate");
  E s;
  if (R::is_square(a, s)) return std::array<E, 3>{R::one(), R::zero(), s};
  if (R::is_square(b, s)) return std::array<E, 3>{R::zero(), R::one(), s};
  if (R::size(a) > R::size(b)) {
    auto sol = legendre<R>(b, a, depth + 1);
    if (!sol) return std::nullopt;
    return std::array<E, 3>{(*sol)[1], (*sol)[0], (*sol)[2]};
  }
  if (R::small_enough(b)) return R::base_case(a, b);
  auto t = R::sqrt_mod(a, b);
  if (!t) return std::nullopt;
  const E k = R::div_exact(R::sub(R::mul(*t, *t), a), b);
  E k0, m;
  R::squarefree(k, k0, m);
  auto sol = legendre<R>(a, k0, depth + 1);
  if (!sol) return std::nullopt;
  const auto& [X, Y, Z] = *sol;
  // (Z + X sqrt a)(t + sqrt a) has norm (Z^2 - a X^2)(t^2 - a) = b (k0 m Y)^2.
  E x = R::add(Z, R::mul(*t, X));
  E y = R::mul(R::mul(k0, m), Y);
  E z = R::add(R::mul(Z, *t), R::mul(a, X));
  // The solution is projective; dividing out the common factor keeps the
  // entries from compounding over the levels of the descent.
  const E g = R::gcd(R::gcd(x, y), z);
  if (!R::is_zero(g) && R::size(g) > 1) {
    x = R::div_exact(x, g);
    y = R::div_exact(y, g);
    z = R::div_exact(z, g);
  }
  return std::array<E, 3>{x, y, z};
}

}  // namespace

namespace {
thread_local unsigned long scoped_budget = kDefaultRhoBudget;
}  // namespace

ScopedFactorBudget::ScopedFactorBudget(unsigned long budget) : saved_(scoped_budget) {
  scoped_budget = std::min(scoped_budget, budget);
}

ScopedFactorBudget::~ScopedFactorBudget() { scoped_budget = saved_; }

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n_in, unsigned long rho_budget) {
  rho_budget = std::min(rho_budget, scoped_budget);
  if (n_in == 0) throw InvalidArgument("factor(0)");
  mpz_class n = abs(n_in);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out[mpz_class(p)] += e;
    }
    if (n > 1 && mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
      ++out[n];
      n = 1;
    }
  }
  factor_into(n, out, rho_budget);
  return {out.begin(), out.end()};
}

bool sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p, mpz_class& r) {
  const mpz_class a = mod_pos(a_in, p);
  if (a == 0) {
    r = 0;
    return true;
  }
  if (p == 2) {
    r = a;
    return true;
  }
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return false;
  if (mod_pos(p, 4) == 3) {
    r = pow_mod(a, mpz_class((p + 1) / 4), p);
    return true;
  }
  // Tonelli-Shanks.
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c = pow_mod(z, q, p), x = pow_mod(a, mpz_class((q + 1) / 2), p), t = pow_mod(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = mod_pos(mpz_class(tt * tt), p);
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_pos(mpz_class(b * b), p);
    x = mod_pos(mpz_class(x * b), p);
    c = mod_pos(mpz_class(b * b), p);
    t = mod_pos(mpz_class(t * c), p);
    m = i;
  }
  r = x;
  return true;
}

void squarefree_split(const mpz_class& n, mpz_class& core, mpz_class& root) {
  if (n == 0) throw InvalidArgument("squarefree part of 0");
  core = sgn(n) < 0 ? -1 : 1;
  root = 1;
  for (const auto& [p, e] : factor(n)) {
    if (e % 2) core *= p;
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
  }
}

std::vector<GaussPrime> factor_gaussian(const GaussInt& alpha, GaussInt& unit) {
  if (alpha.is_zero()) throw InvalidArgument("factor_gaussian(0)");
  GaussInt rest = alpha;
  std::vector<GaussPrime> out;
  auto strip = [&](const GaussInt& pi) {
    unsigned e = 0;
    while (divides(pi, rest)) {
      rest = exact_div(rest, pi);
      ++e;
    }
    if (e) out.push_back({pi, e});
  };
  for (const auto& [p, e] : factor(alpha.norm())) {
    (void)e;
    if (p == 2) {
      strip(GaussInt(1, 1));
    } else if (mod_pos(p, 4) == 3) {
      strip(GaussInt(p));
    } else {
      mpz_class r;
      sqrt_mod_prime(mpz_class(p - 1), p, r);
      GaussInt pi = gcd(GaussInt(p), GaussInt(r, 1));
      strip(pi);
      strip(pi.conj());
    }
  }
  if (rest.norm() != 1) throw ConsistencyError("Gaussian factorization left a non-unit cofactor");
  unit = rest;
  return out;
}

void squarefree_split(const GaussInt& alpha, GaussInt& core, GaussInt& root) {
  GaussInt unit;
  auto fs = factor_gaussian(alpha, unit);
  core = 1;
  root = 1;
  for (const auto& f : fs) {
    if (f.exp % 2) core = core * f.prime;
    for (unsigned i = 0; i < f.exp / 2; ++i) root = root * f.prime;
  }
  // Units modulo squares are {1, i}: -1 = i^2 and -i = i * i^2.
  if (unit == GaussInt(-1)) {
    root = root * GaussInt(0, 1);
  } else if (unit == GaussInt(0, 1)) {
    core = core * unit;
  } else if (unit == GaussInt(0, -1)) {
    core = core * GaussInt(0, 1);
    root = root * GaussInt(0, 1);
  }
}

GaussInt ext_gcd(const GaussInt& a, const GaussInt& b, GaussInt& x, GaussInt& y) {
  GaussInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    GaussInt q, r;
    divmod(r0, r1, q, r);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  x = s0;
  y = t0;
  return r0;
}

std::optional<std::array<mpq_class, 3>> solve_conic(const mpq_class& a, const mpq_class& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw InvalidArgument("conic coefficients must be nonzero");
  // a = core_a * (root_a / den_a)^2 with core_a a squarefree integer.
  auto reduce = [](const mpq_class& v, mpz_class& core, mpq_class& scale) {
    mpz_class root;
    squarefree_split(mpz_class(v.get_num() * v.get_den()), core, root);
    scale = mpq_class(root, v.get_den());
    scale.canonicalize();
  };
  mpz_class ca, cb;
  mpq_class sa, sb;
  reduce(a, ca, sa);
  reduce(b, cb, sb);
  auto sol = legendre<IntRing>(ca, cb);
  if (!sol) return std::nullopt;
  // a x^2 = ca (sa x)^2, so x = X / sa.
  return std::array<mpq_class, 3>{mpq_class((*sol)[0]) / sa, mpq_class((*sol)[1]) / sb,
                                  mpq_class((*sol)[2])};
}

std::optional<std::array<Scalar, 3>> solve_conic_gaussian(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("conic coefficients must be nonzero");
  auto reduce = [](const Scalar& v, GaussInt& core, Scalar& scale) {
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), v.re().get_den_mpz_t(), v.im().get_den_mpz_t());
    // v * den^2 = (v * den) * den is a Gaussian integer.
    GaussInt num(mpz_class(v.re().get_num() * (den / v.re().get_den())),
                 mpz_class(v.im().get_num() * (den / v.im().get_den())));
    GaussInt root;
    squarefree_split(num * GaussInt(den), core, root);
    scale = Scalar(mpq_class(root.re), mpq_class(root.im)) / Scalar(mpq_class(den));
  };
  GaussInt ca, cb;
  Scalar sa, sb;
  reduce(a, ca, sa);
  reduce(b, cb, sb);
  auto sol = legendre<GaussRing>(ca, cb);
  if (!sol) return std::nullopt;
  auto to_s = [](const GaussInt& g) { return Scalar(mpq_class(g.re), mpq_class(g.im)); };
  return std::array<Scalar, 3>{to_s((*sol)[0]) / sa, to_s((*sol)[1]) / sb, to_s((*sol)[2])};
}

}  // namespace isograss::nt
