#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace isograss {

/// Which field a matrix lives over, and what "conjugation" means there.
///
/// Rational: entries in Q, conjugation is the identity.
/// GaussianHermitian: entries in Q(i), conjugation negates the imaginary part.
/// GaussianBilinear: entries in Q(i), conjugation is the identity.
enum class Field : std::uint8_t { Rational, GaussianHermitian, GaussianBilinear };

std::string_view to_string(Field f);

/// An exact Gaussian rational re + im*i. A value with im == 0 is an ordinary
/// rational. Both parts are kept in canonical GMP form (reduced, positive
/// denominator), so structural equality is value equality.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return {mpq_class(0), mpq_class(1)}; }
  static Scalar ratio(long num, long den) { return Scalar(mpq_class(num, den)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Complex conjugate. Use `involution` when the field decides.
  Scalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Arbitrary but total order (real part first), for sorting and maps.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "a/b" for rationals, "a/b+c/di" style for Gaussian values. Debug only;
  /// file formats go through io.hpp.
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// conj(x) under the given field's involution.
inline Scalar involution(const Scalar& x, Field f) {
  return f == Field::GaussianHermitian ? x.conj() : x;
}

/// Parse "a", "a/b" (rational) or the Gaussian form used in debug strings.
/// Throws ParseError on malformed input.
mpq_class parse_rational(std::string_view text);

/// Exact square root in Q, if one exists.
bool rational_sqrt(const mpq_class& x, mpq_class& root);
/// Exact square root in Q(i), if one exists.
bool gaussian_sqrt(const Scalar& x, Scalar& root);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace isograss
