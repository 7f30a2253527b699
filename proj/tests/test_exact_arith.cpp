#include "isograss/errors.hpp"
#include "isograss/linalg.hpp"
#include "isograss/matrix.hpp"
#include "isograss/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace isograss;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f, long mag) {
  Matrix m(r, c, f);
  auto draw = [&] { return static_cast<long>(rng() % (2 * mag + 1)) - mag; };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const long den = 1 + static_cast<long>(rng() % 3);
      m(i, j) = f == Field::Rational ? Scalar(mpq_class(draw(), den))
                                     : Scalar(mpq_class(draw(), den), mpq_class(draw(), den));
    }
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  const Scalar third = Scalar::ratio(1, 3);
  CHECK(third * Scalar(3) == Scalar(1));
  CHECK(third + third + third == Scalar(1));
  const Scalar z(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK((z * z.conj()).re() == z.norm());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK_THROWS_AS(Scalar(0).inverse(), InvalidArgument);
}

TEST_CASE("conjugation is an involutive automorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Matrix m = random_matrix(rng, 1, 2, Field::GaussianHermitian, 9);
    const Scalar a = m(0, 0), b = m(0, 1);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(involution(a, Field::GaussianBilinear) == a);
  }
}

TEST_CASE("exact square roots") {
  mpq_class r;
  CHECK(rational_sqrt(mpq_class(9, 4), r));
  CHECK(r * r == mpq_class(9, 4));
  CHECK_FALSE(rational_sqrt(mpq_class(2), r));
  CHECK_FALSE(rational_sqrt(mpq_class(-1), r));
  Scalar g;
  CHECK(gaussian_sqrt(Scalar(-1), g));
  CHECK(g * g == Scalar(-1));
  CHECK(gaussian_sqrt(Scalar(mpq_class(0), mpq_class(2)), g));  // (1+i)^2 = 2i
  CHECK(g * g == Scalar(mpq_class(0), mpq_class(2)));
  CHECK_FALSE(gaussian_sqrt(Scalar(2), g));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/8") == mpq_class(-3, 4));
  CHECK(parse_rational("5") == mpq_class(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rref examples") {
  const RrefResult id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.rank == 3);

  const RrefResult zero = rref(Matrix::zero(2, 4));
  CHECK(zero.reduced.is_zero());
  CHECK(zero.rank == 0);

  const RrefResult r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(4)).cols() == 0);
  CHECK(kernel(Matrix::zero(2, 3)).cols() == 3);
  const Matrix m{{1, 1, 0}};
  const Matrix k = kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("subspace sum and intersection") {
  const Matrix a{{1, 0, 0, 0}, {0, 1, 0, 0}};
  CHECK(subspace_sum(a, a) == a);
  CHECK(subspace_intersect(a, a) == a);

  const Matrix b{{0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(subspace_sum(a, b) == Matrix::identity(4));
  CHECK(subspace_intersect(a, b).rows() == 0);

  const Matrix p{{1, 1, 0, 0}, {0, 0, 1, 2}};
  const Matrix q{{1, 1, 1, 2}, {0, 1, 0, 5}};
  CHECK(subspace_intersect(p, q).rows() == 1);
  CHECK(subspace_sum(p, q).rows() == 3);

  CHECK_THROWS_AS(subspace_sum(a, Matrix{{1, 0, 0}}), InvalidArgument);
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::Rational, Field::GaussianHermitian, Field::GaussianBilinear}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      Matrix m = random_matrix(rng, r, c, f, 2);
      if (t % 3 == 0 && r > 1)  // force a dependent row
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Scalar(2);
      const RrefResult rr = rref(m);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      CHECK(rank(m) == rr.rank);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rank_alternate_pivot(m) == rr.rank);
      const Matrix k = kernel(m);
      CHECK(rr.rank + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK((left_kernel(m) * m).is_zero());

      Matrix a = random_matrix(rng, 1 + rng() % 3, 5, f, 1);
      Matrix b = random_matrix(rng, 1 + rng() % 3, 5, f, 1);
      CHECK(rank(a) + rank(b) ==
            subspace_sum(a, b).rows() + subspace_intersect(a, b).rows());
    }
  }
}

TEST_CASE("inverse, determinant and solve") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Matrix m = random_matrix(rng, 3, 3, Field::GaussianBilinear, 3);
    const auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    const Matrix b = random_matrix(rng, 3, 1, Field::GaussianBilinear, 3);
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
  CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == Scalar(-2));
  CHECK_FALSE(solve(Matrix{{1, 0}, {1, 0}}, Matrix{{1}, {2}}).has_value());
}

TEST_CASE("field tags must agree") {
  const Matrix q = Matrix::identity(2);
  const Matrix h = Matrix::identity(2, Field::GaussianHermitian);
  const Matrix b = Matrix::identity(2, Field::GaussianBilinear);
  CHECK((q * h).field() == Field::GaussianHermitian);  // Q embeds in Q(i)
  CHECK_THROWS_AS(h * b, InvalidArgument);
  CHECK(Matrix{{Scalar::i()}}.with_field(Field::GaussianHermitian).involuted()(0, 0) ==
        -Scalar::i());
  CHECK_THROWS_AS(Matrix({{Scalar::i()}}, Field::GaussianBilinear).with_field(Field::Rational),
                  InvalidArgument);
}
