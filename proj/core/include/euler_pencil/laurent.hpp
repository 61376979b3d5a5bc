#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "euler_pencil/quadext.hpp"
#include "euler_pencil/rational.hpp"

namespace ep {

/// Polynomial in u, 1/u and lambda: terms keyed by (u exponent, lambda exponent >= 0).
template <class K>
class LaurentBiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, K>;

  LaurentBiPoly() = default;
  LaurentBiPoly(const K& c) { add_term(c, 0, 0); }  // NOLINT(google-explicit-constructor)
  LaurentBiPoly(long c) : LaurentBiPoly(K(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentBiPoly(int c) : LaurentBiPoly(K(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentBiPoly monomial(const K& c, int u_exp, int lambda_exp) {
    LaurentBiPoly p;
    p.add_term(c, u_exp, lambda_exp);
    return p;
  }
  static LaurentBiPoly u(int e = 1) { return monomial(K(1), e, 0); }
  static LaurentBiPoly lambda(int e = 1) { return monomial(K(1), 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K coeff(int u_exp, int lambda_exp) const {
    auto it = terms_.find({u_exp, lambda_exp});
    return it == terms_.end() ? K(0) : it->second;
  }

  /// lambda_exp -> coefficient of u^u_exp lambda^lambda_exp.
  std::map<int, K> u_coefficient(int u_exp) const {
    std::map<int, K> out;
    for (auto it = terms_.lower_bound({u_exp, 0}); it != terms_.end() && it->first.first == u_exp; ++it)
      out.emplace(it->first.second, it->second);
    return out;
  }

  int min_u() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }
  int max_u() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }
  int max_lambda() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
  }

  /// f(-u).
  LaurentBiPoly reflect_u() const {
    LaurentBiPoly r;
    for (const auto& [k, c] : terms_) r.add_term((k.first % 2 == 0) ? c : -c, k.first, k.second);
    return r;
  }

  void add_term(const K& c, int u_exp, int lambda_exp) {
    if (c.is_zero()) return;
    Key key{u_exp, lambda_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LaurentBiPoly operator-() const {
    LaurentBiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  LaurentBiPoly& operator+=(const LaurentBiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
  }
  LaurentBiPoly& operator-=(const LaurentBiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
    return *this;
  }
  friend LaurentBiPoly operator+(LaurentBiPoly a, const LaurentBiPoly& b) { return a += b; }
  friend LaurentBiPoly operator-(LaurentBiPoly a, const LaurentBiPoly& b) { return a -= b; }
  friend LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b) {
    LaurentBiPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
  }
  LaurentBiPoly& operator*=(const LaurentBiPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentBiPoly& a, const LaurentBiPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second << ")";
      if (it->first.first != 0) os << "*u^" << it->first.first;
      if (it->first.second != 0) os << "*lambda^" << it->first.second;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using RatLaurent = LaurentBiPoly<Rational>;
using QuadLaurent = LaurentBiPoly<QuadExt>;

/// lambda_exp -> coefficient of u^{-1} lambda^lambda_exp.
template <class K>
std::map<int, K> residue_at_zero(const LaurentBiPoly<K>& f) {
  return f.u_coefficient(-1);
}

}  // namespace ep
