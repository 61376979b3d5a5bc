#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "euler_pencil/rational.hpp"

namespace ep {

using Cx = std::complex<double>;

/// x + y*sqrt(d) over Q with a fixed radicand d.
///
/// Values with y == 0 carry no radicand constraint. A perfect-square radicand
/// is folded into x on construction.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadExt(int x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& x, const Rational& y, const Rational& d);

  /// sqrt(d) itself.
  static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  /// Real when y == 0 or the radicand is non-negative.
  bool is_real() const { return y_.is_zero() || d_.sign() >= 0; }
  /// Exact sign of a real value; throws for non-real values.
  int sign() const;

  QuadExt conj() const { return QuadExt(x_, -y_, d_); }
  /// x^2 - d y^2.
  Rational norm() const { return x_ * x_ - d_ * y_ * y_; }

  Cx to_cx() const;
  double to_double() const;
  std::string str() const;

  QuadExt operator-() const { return QuadExt(-x_, -y_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

 private:
  void normalise();

  Rational x_{0};
  Rational y_{0};
  Rational d_{0};
};

/// Radicand shared by a and b, or an error when both carry different ones.
Rational common_radicand(const QuadExt& a, const QuadExt& b);

}  // namespace ep
