#pragma once

#include <gmpxx.h>

namespace isograss {

/// A Gaussian integer re + im*i. Used by fraction-free elimination and by
/// the number-theoretic routines over Z[i].
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  GaussInt() = default;
  GaussInt(mpz_class r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussInt operator-() const { return {-re, -im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// a / b where b is known to divide a exactly.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

/// Euclidean division a = q b + r with N(r) <= N(b)/2 (nearest-integer
/// rounding of a/b).
void divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r);

GaussInt mod(const GaussInt& a, const GaussInt& b);

/// A gcd (defined up to units).
GaussInt gcd(GaussInt a, GaussInt b);

/// True if b divides a.
bool divides(const GaussInt& b, const GaussInt& a);

}  // namespace isograss
