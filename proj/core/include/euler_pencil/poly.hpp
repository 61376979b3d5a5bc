#pragma once

#include <string>
#include <vector>

#include "euler_pencil/quadext.hpp"
#include "euler_pencil/rational.hpp"

namespace ep {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  QuadExt eval(const QuadExt& x) const;
  Cx eval(const Cx& x) const;

  std::string str(const std::string& var = "Y") const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Exact Euclidean division; throws on a zero divisor.
DivRem poly_divrem(const Poly& dividend, const Poly& divisor);

/// Roots (-B + sqrt(B^2-4AC))/(2A) then (-B - sqrt(B^2-4AC))/(2A), sharing radicand B^2-4AC.
std::pair<QuadExt, QuadExt> quad_roots(const Rational& A, const Rational& B, const Rational& C);

}  // namespace ep
