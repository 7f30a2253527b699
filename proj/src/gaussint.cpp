#include "isograss/gaussint.hpp"

#include "isograss/errors.hpp"

namespace isograss {

namespace {

// Nearest integer to n/d for d > 0, ties rounded down.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class twice = 2 * n + d;
  mpz_class two_d = 2 * d;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), two_d.get_mpz_t());
  return q;
}

}  // namespace

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw InvalidArgument("Gaussian division by zero");
  if (sgn(b.im) == 0) {
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

void divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r) {
  if (b.is_zero()) throw InvalidArgument("Gaussian division by zero");
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  q = GaussInt(round_div(num.re, n), round_div(num.im, n));
  r = a - q * b;
}

GaussInt mod(const GaussInt& a, const GaussInt& b) {
  GaussInt q, r;
  divmod(a, b, q, r);
  return r;
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool divides(const GaussInt& b, const GaussInt& a) {
  if (b.is_zero()) return a.is_zero();
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  return mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()) != 0;
}

}  // namespace isograss
