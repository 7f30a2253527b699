#include "isograss/scalar.hpp"

#include "isograss/errors.hpp"

#include <sstream>

namespace isograss {

std::string_view to_string(Field f) {
  switch (f) {
    case Field::Rational: return "Q";
    case Field::GaussianHermitian: return "Q_i_hermitian";
    case Field::GaussianBilinear: return "Q_i_bilinear";
  }
  return "?";
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  if (is_real()) {
    mpq_class r = 1 / re_;
    return Scalar(r);
  }
  mpq_class n = norm();
  return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::ostringstream os;
  if (sgn(re_) != 0) os << re_.get_str();
  if (sgn(re_) != 0 && sgn(im_) > 0) os << '+';
  if (im_ == 1) {
    os << 'i';
  } else if (im_ == -1) {
    os << "-i";
  } else {
    os << im_.get_str() << 'i';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

bool rational_sqrt(const mpq_class& x, mpq_class& root) {
  if (sgn(x) < 0) return false;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return false;
  mpz_class n = sqrt(x.get_num()), d = sqrt(x.get_den());
  root = mpq_class(n, d);
  root.canonicalize();
  return true;
}

bool gaussian_sqrt(const Scalar& x, Scalar& root) {
  if (x.is_real()) {
    mpq_class r;
    if (rational_sqrt(x.re(), r)) {
      root = Scalar(r);
      return true;
    }
    if (rational_sqrt(-x.re(), r)) {
      root = Scalar(mpq_class(0), r);
      return true;
    }
    return false;
  }
  // (u + vi)^2 = re + im i  =>  u^2 = (re + |x|)/2, v = im / (2u).
  mpq_class mod;
  if (!rational_sqrt(x.norm(), mod)) return false;
  mpq_class u2 = (x.re() + mod) / 2;
  mpq_class u;
  if (!rational_sqrt(u2, u) || sgn(u) == 0) return false;
  mpq_class v = x.im() / (2 * u);
  root = Scalar(u, v);
  return true;
}

}  // namespace isograss
