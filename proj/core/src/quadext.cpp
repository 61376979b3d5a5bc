#include "euler_pencil/quadext.hpp"

#include <cmath>

#include "euler_pencil/error.hpp"

namespace ep {

QuadExt::QuadExt(const Rational& x, const Rational& y, const Rational& d) : x_(x), y_(y), d_(d) {
  normalise();
}

namespace {

constexpr unsigned long kSquareStripLimit = 1000000;

}  // namespace

void QuadExt::normalise() {
  if (y_.is_zero()) {
    d_ = Rational(0);
    return;
  }
  if (auto r = d_.sqrt_exact()) {
    x_ += y_ * *r;
    y_ = Rational(0);
    d_ = Rational(0);
    return;
  }
  // sqrt(n/m) = sqrt(n*m)/m, then pull square factors out of n*m.
  mpz_class m = d_.den();
  mpz_class n = d_.num() * m;
  y_ /= Rational(m, mpz_class(1));
  int s = sgn(n);
  mpz_class a = abs(n);
  mpz_class out = 1;
  for (unsigned long p = 2; p <= kSquareStripLimit; ++p) {
    mpz_class pp = mpz_class(p) * p;
    if (pp > a) break;
    while (mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t())) {
      a /= pp;
      out *= p;
    }
  }
  y_ *= Rational(out, mpz_class(1));
  d_ = Rational(s < 0 ? mpz_class(-a) : a, mpz_class(1));
}

Rational common_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational()) return a.d();
  if (a.d() != b.d())
    throw Error(ErrorKind::radicand_mismatch,
                "quadratic values over sqrt(" + a.d().str() + ") and sqrt(" + b.d().str() + ") do not mix");
  return a.d();
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Rational d = common_radicand(*this, o);
  *this = QuadExt(x_ + o.x_, y_ + o.y_, d);
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Rational d = common_radicand(*this, o);
  *this = QuadExt(x_ - o.x_, y_ - o.y_, d);
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational d = common_radicand(*this, o);
  *this = QuadExt(x_ * o.x_ + d * y_ * o.y_, x_ * o.y_ + y_ * o.x_, d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational d = common_radicand(*this, o);
  Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::pole, "division by zero in Q(sqrt(" + d.str() + "))");
  QuadExt num = *this * o.conj();
  *this = QuadExt(num.x_ / n, num.y_ / n, d);
  return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  return a.y_.is_zero() || a.d_ == b.d_;
}

int QuadExt::sign() const {
  if (!is_real()) throw Error(ErrorKind::domain, "sign of non-real value " + str());
  int sx = x_.sign();
  int sy = y_.sign();
  if (sy == 0 || d_.is_zero()) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  Rational lhs = x_ * x_;
  Rational rhs = y_ * y_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

Cx QuadExt::to_cx() const {
  double dd = d_.to_double();
  Cx root = dd >= 0 ? Cx(std::sqrt(dd), 0.0) : Cx(0.0, std::sqrt(-dd));
  return Cx(x_.to_double(), 0.0) + y_.to_double() * root;
}

double QuadExt::to_double() const {
  if (!is_real()) throw Error(ErrorKind::domain, "value " + str() + " is not real");
  return to_cx().real();
}

std::string QuadExt::str() const {
  if (y_.is_zero()) return x_.str();
  std::string s;
  if (!x_.is_zero()) s = x_.str() + (y_.sign() > 0 ? " + " : " - ");
  else if (y_.sign() < 0) s = "-";
  Rational ay = y_.abs();
  if (ay != Rational(1)) s += ay.str() + "*";
  s += "sqrt(" + d_.str() + ")";
  return s;
}

}  // namespace ep
