#include "isograss/linalg.hpp"

#include "isograss/errors.hpp"
#include "isograss/gaussint.hpp"

#include <utility>

namespace isograss {

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    if (!a(r, c).is_one()) {
      Scalar inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

Matrix row_basis(const Matrix& m) {
  RrefResult r = rref(m);
  return r.reduced.rows_range(0, r.rank);
}

namespace {

// Clear denominators of one row: multiply by the lcm of every denominator.
mpz_class row_denominator_lcm(const Matrix& m, std::size_t i) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Scalar& x = m(i, j);
    if (x.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    if (!x.is_real()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  return l;
}

bool all_real(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

template <class T, class MulSub, class Div>
std::size_t bareiss_rank(std::vector<std::vector<T>>& a, std::size_t cols, MulSub mul_sub,
                         Div div) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (a[r][c] a[i][j] - a[i][c] a[r][j]) / prev, exactly.
        a[i][j] = div(mul_sub(a[r][c], a[i][j], a[i][c], a[r][j]), prev);
      }
      a[i][c] = T(0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct ZInt {
  mpz_class v;
  ZInt() = default;
  ZInt(long x) : v(x) {}  // NOLINT(google-explicit-constructor)
  ZInt(mpz_class x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  bool is_zero() const { return sgn(v) == 0; }
};

}  // namespace

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  if (all_real(m)) {
    std::vector<std::vector<ZInt>> a(rows, std::vector<ZInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      mpz_class l = row_denominator_lcm(m, i);
      for (std::size_t j = 0; j < cols; ++j) {
        const mpq_class& x = m(i, j).re();
        if (sgn(x) == 0) continue;
        mpz_class t = l / x.get_den();
        a[i][j] = ZInt(mpz_class(t * x.get_num()));
      }
    }
    return bareiss_rank(
        a, cols,
        [](const ZInt& p, const ZInt& x, const ZInt& q, const ZInt& y) {
          return ZInt(mpz_class(p.v * x.v - q.v * y.v));
        },
        [](const ZInt& x, const ZInt& d) {
          mpz_class q;
          mpz_divexact(q.get_mpz_t(), x.v.get_mpz_t(), d.v.get_mpz_t());
          return ZInt(std::move(q));
        });
  }
  std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = row_denominator_lcm(m, i);
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& x = m(i, j);
      if (x.is_zero()) continue;
      mpz_class re = l / x.re().get_den() * x.re().get_num();
      mpz_class im = l / x.im().get_den() * x.im().get_num();
      a[i][j] = GaussInt(re, im);
    }
  }
  return bareiss_rank(
      a, cols,
      [](const GaussInt& p, const GaussInt& x, const GaussInt& q, const GaussInt& y) {
        return p * x - q * y;
      },
      [](const GaussInt& x, const GaussInt& d) { return exact_div(x, d); });
}

std::size_t rank_alternate_pivot(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = rows; i-- > r;)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Matrix kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(cols, free.size(), m.field());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Scalar& x = r.reduced(i, free[f]);
      if (!x.is_zero()) k(r.pivot_cols[i], f) = -x;
    }
  }
  return k;
}

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: row mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  RrefResult r = rref(Matrix::hstack(a, b));
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivot_cols[i] >= n) return std::nullopt;
  Matrix x(n, k, r.reduced.field());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < k; ++j) x(r.pivot_cols[i], j) = r.reduced(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw InvalidArgument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RrefResult r = rref(Matrix::hstack(a, Matrix::identity(n, a.field())));
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw InvalidArgument("determinant: matrix not square");
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidArgument("subspace_sum: ambient dimension mismatch");
  return row_basis(Matrix::vstack(a, b));
}

Matrix subspace_intersect(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidArgument("subspace_intersect: ambient dimension mismatch");
  const std::size_t cols = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, cols, common_field(a, b));
  Matrix ab = row_basis(a), bb = row_basis(b);
  // y * [A; B] = 0 with y = (x, z) gives x A = -z B, a vector of the intersection.
  Matrix y = left_kernel(Matrix::vstack(ab, bb));
  if (y.rows() == 0) return Matrix(0, cols, common_field(a, b));
  Matrix x = y.cols_range(0, ab.rows());
  return row_basis(x * ab);
}

bool rowspace_contains(const Matrix& basis, const Matrix& rows) {
  if (rows.rows() == 0) return true;
  return rank(Matrix::vstack(basis, rows)) == rank(basis);
}

}  // namespace isograss
