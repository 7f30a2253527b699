#pragma once

#include "isograss/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace isograss {

/// Dense row-major exact matrix. Every entry is interpreted in `field()`;
/// operations combining two matrices require equal field tags.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Rational)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows, Field field = Field::Rational);

  static Matrix identity(std::size_t n, Field field = Field::Rational);
  static Matrix zero(std::size_t rows, std::size_t cols, Field field = Field::Rational) {
    return {rows, cols, field};
  }
  static Matrix diagonal(const std::vector<Scalar>& d, Field field = Field::Rational);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Re-tag the matrix. Entries are not touched; retagging a matrix with
  /// non-real entries to Rational throws.
  Matrix with_field(Field f) const;

  Matrix transpose() const;
  /// Entry-wise field involution (identity unless GaussianHermitian).
  Matrix involuted() const;
  /// involuted().transpose(): the adjoint with respect to the field.
  Matrix adjoint() const;

  Matrix row(std::size_t i) const;
  std::vector<Scalar> row_vector(std::size_t i) const;
  Matrix rows_range(std::size_t begin, std::size_t end) const;
  Matrix cols_range(std::size_t begin, std::size_t end) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void append_row(const std::vector<Scalar>& r);

  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// Block diagonal diag(a, b).
  static Matrix direct_sum(const Matrix& a, const Matrix& b);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                          Field field);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Rational;
  std::vector<Scalar> data_;
};

/// Common field of two operands; throws InvalidArgument if they differ.
Field common_field(const Matrix& a, const Matrix& b);

}  // namespace isograss
