#include "euler_pencil/poly.hpp"

#include <algorithm>

#include "euler_pencil/error.hpp"

namespace ep {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadExt Poly::eval(const QuadExt& x) const {
  QuadExt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadExt(*it);
  return acc;
}

Cx Poly::eval(const Cx& x) const {
  Cx acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (s.empty()) s += c.sign() < 0 ? "-" : "";
    else s += c.sign() < 0 ? " - " : " + ";
    bool unit = a == Rational(1);
    if (k == 0) s += a.str();
    else {
      if (!unit) s += a.str() + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Poly Poly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> v(a.c_);
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

DivRem poly_divrem(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::pole, "polynomial division by zero");
  Poly rem = dividend;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {Poly(), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
  Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational f = rem.leading() / lead;
    q[static_cast<size_t>(shift)] = f;
    rem = rem - Poly::monomial(f, shift) * divisor;
  }
  return {Poly(std::move(q)), rem};
}

std::pair<QuadExt, QuadExt> quad_roots(const Rational& A, const Rational& B, const Rational& C) {
  if (A.is_zero()) throw Error(ErrorKind::degenerate, "degenerate quadratic: leading coefficient is zero");
  Rational disc = B * B - Rational(4) * A * C;
  Rational two_a = Rational(2) * A;
  Rational x = -B / two_a;
  Rational y = Rational(1) / two_a;
  return {QuadExt(x, y, disc), QuadExt(x, -y, disc)};
}

}  // namespace ep
