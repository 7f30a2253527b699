#include "isograss/matrix.hpp"

#include "isograss/errors.hpp"

#include <sstream>

namespace isograss {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows, Field field)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), field_(field) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d, Field field) {
  Matrix m(d.size(), d.size(), field);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::with_field(Field f) const {
  if (f == Field::Rational)
    for (const auto& x : data_)
      if (!x.is_real()) throw InvalidArgument("non-rational entry in a rational matrix");
  Matrix m = *this;
  m.field_ = f;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::involuted() const {
  if (field_ != Field::GaussianHermitian) return *this;
  Matrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_real()) x = x.conj();
  return m;
}

Matrix Matrix::adjoint() const { return involuted().transpose(); }

Matrix Matrix::row(std::size_t i) const { return rows_range(i, i + 1); }

std::vector<Scalar> Matrix::row_vector(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::rows_range(std::size_t begin, std::size_t end) const {
  return block(begin, 0, end - begin, cols_);
}

Matrix Matrix::cols_range(std::size_t begin, std::size_t end) const {
  return block(0, begin, rows_, end - begin);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InvalidArgument("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::append_row(const std::vector<Scalar>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  if (a.cols_ != b.cols_) throw InvalidArgument("vstack: column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_, common_field(a, b));
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw InvalidArgument("hstack: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_, common_field(a, b));
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_, common_field(a, b));
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                         Field field) {
  Matrix m(0, cols, field);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum: shape mismatch");
  field_ = common_field(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix difference: shape mismatch");
  field_ = common_field(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_, common_field(a, b));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x = -x;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Field common_field(const Matrix& a, const Matrix& b) {
  if (a.field() == b.field()) return a.field();
  // A rational matrix embeds in either Gaussian field.
  if (a.field() == Field::Rational) return b.field();
  if (b.field() == Field::Rational) return a.field();
  throw InvalidArgument("matrices over incompatible fields");
}

}  // namespace isograss
