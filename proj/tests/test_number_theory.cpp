#include "isograss/form_isometry.hpp"
#include "isograss/number_theory.hpp"

#include <doctest.h>

using namespace isograss;

namespace {

bool locally_solvable_brute(long a, long b) {
  // a x^2 + b y^2 = z^2 has a nontrivial integer point with small entries.
  for (long x = 0; x <= 40; ++x)
    for (long y = 0; y <= 40; ++y) {
      if (x == 0 && y == 0) continue;
      const long v = a * x * x + b * y * y;
      if (v < 0) continue;
      mpz_class z;
      mpz_sqrt(z.get_mpz_t(), mpz_class(v).get_mpz_t());
      if (z * z == v) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("factorization") {
  const auto f = nt::factor(mpz_class(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(mpz_class(2), 3u));
  CHECK(f[1] == std::make_pair(mpz_class(3), 2u));
  CHECK(f[2] == std::make_pair(mpz_class(5), 1u));
  const mpz_class big = mpz_class("1000000007") * mpz_class("998244353");
  const auto g = nt::factor(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == mpz_class("998244353"));
}

TEST_CASE("square roots modulo a prime") {
  mpz_class r;
  CHECK(nt::sqrt_mod_prime(mpz_class(2), mpz_class(7), r));
  CHECK((r * r - 2) % 7 == 0);
  CHECK_FALSE(nt::sqrt_mod_prime(mpz_class(3), mpz_class(7), r));
  CHECK(nt::sqrt_mod_prime(mpz_class(-1), mpz_class(1000000009), r));
  CHECK((r * r + 1) % mpz_class(1000000009) == 0);
}

TEST_CASE("squarefree parts") {
  mpz_class core, root;
  nt::squarefree_split(mpz_class(-72), core, root);
  CHECK(core == -2);
  CHECK(root == 6);
  GaussInt gc, gr;
  nt::squarefree_split(GaussInt(mpz_class(0), mpz_class(-8)), gc, gr);
  CHECK(gc * gr * gr == GaussInt(mpz_class(0), mpz_class(-8)));
}

TEST_CASE("rational conics agree with a brute-force search") {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      const auto sol = nt::solve_conic(mpq_class(a), mpq_class(b));
      if (sol) {
        const auto& [x, y, z] = *sol;
        CHECK(a * x * x + b * y * y == z * z);
        CHECK_FALSE((x == 0 && y == 0 && z == 0));
      }
      CHECK(sol.has_value() == locally_solvable_brute(a, b));
    }
}

TEST_CASE("gaussian conics") {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -2; c <= 2; ++c) {
        if (a == 0 || (b == 0 && c == 0)) continue;
        const Scalar sa{a}, sb{mpq_class(b), mpq_class(c)};
        const auto sol = nt::solve_conic_gaussian(sa, sb);
        if (!sol) continue;
        const auto& [x, y, z] = *sol;
        CHECK(sa * x * x + sb * y * y == z * z);
        CHECK_FALSE((x.is_zero() && y.is_zero() && z.is_zero()));
      }
  // -x^2 - y^2 = z^2 has no rational point but (i, 0, 1) over Q(i).
  CHECK(nt::solve_conic_gaussian(Scalar(-1), Scalar(-1)).has_value());
}

TEST_CASE("representations by diagonal forms") {
  const auto x = represent(Scalar(7), {Scalar(1), Scalar(1), Scalar(1), Scalar(1)},
                           FormKind::Symmetric, Field::Rational);
  REQUIRE(x.has_value());
  Scalar sum(0);
  for (const auto& v : *x) sum += v * v;
  CHECK(sum == Scalar(7));

  // A definite hermitian form whose coefficients share primes that do not
  // divide the target.
  const std::vector<Scalar> d{Scalar(-21229), Scalar(-119209)};
  const auto z = represent(Scalar(-2), d, FormKind::Hermitian, Field::GaussianHermitian, 3);
  REQUIRE(z.has_value());
  Scalar h(0);
  for (std::size_t i = 0; i < d.size(); ++i) h += (*z)[i].conj() * d[i] * (*z)[i];
  CHECK(h == Scalar(-2));

  CHECK_FALSE(represent(Scalar(3), {Scalar(1), Scalar(1)}, FormKind::Symmetric, Field::Rational)
                  .has_value());
}

TEST_CASE("congruence of forms") {
  const Matrix m1 = Matrix::diagonal({2, 3});
  const Matrix m2 = Matrix::diagonal({5, 30});  // 5 = 2 + 3
  const auto t = find_congruence(m1, m2, FormKind::Symmetric);
  REQUIRE(t.has_value());
  CHECK(gram_rows(*t, m2) == m1);
  // Same determinant, different Hasse invariant at 3.
  CHECK_FALSE(find_congruence(m1, Matrix::diagonal({1, 6}), FormKind::Symmetric).has_value());
  CHECK_FALSE(find_congruence(Matrix::diagonal({1, 1}), Matrix::diagonal({1, 2}),
                              FormKind::Symmetric)
                  .has_value());
  const Matrix j{{0, 1}, {-1, 0}};
  const Matrix j2{{0, 3}, {-3, 0}};
  const auto s = find_congruence(j, j2, FormKind::Alternating);
  REQUIRE(s.has_value());
  CHECK(gram_rows(*s, j2) == j);
}
