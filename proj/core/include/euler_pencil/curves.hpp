#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euler_pencil/quadext.hpp"
#include "euler_pencil/rational.hpp"

namespace ep {

struct WeierstrassInvariants {
  Rational b2, b4, b6, b8, c4, c6, disc, j;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
class WeierstrassCurve {
 public:
  WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
                   std::optional<std::string> label = std::nullopt);
  static WeierstrassCurve from_model(const std::array<long, 5>& a, std::optional<std::string> label = std::nullopt);
  /// y^2 = x^3 + A x + B.
  static WeierstrassCurve short_form(const Rational& A, const Rational& B,
                                     std::optional<std::string> label = std::nullopt);

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  const std::array<Rational, 5>& coefficients() const { return a_; }
  const WeierstrassInvariants& invariants() const { return inv_; }
  const std::optional<std::string>& label() const { return label_; }
  std::string name() const;
  std::string equation() const;

  bool is_short() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero(); }
  /// Bad when p divides the discriminant or a coefficient denominator.
  bool is_bad_prime(long p) const;
  /// CM discriminant implied by j: -4 for j = 1728, -3 for j = 0, none otherwise.
  std::optional<long> cm_discriminant_from_j() const;

 private:
  std::array<Rational, 5> a_;
  WeierstrassInvariants inv_;
  std::optional<std::string> label_;
};

WeierstrassInvariants curve_invariants(const WeierstrassCurve& curve);

bool is_prime(long n);
std::vector<long> primes_up_to(long x);
long prime_count(long x);

/// a mod p in [0, p) for rational a whose denominator is prime to p.
long mod_p(const Rational& a, long p);
long pow_mod(long base, long exp, long p);
/// Legendre symbol via Euler's criterion, with (0/p) = 0.
int legendre_symbol(long a, long p);

/// chi_p over all residues, built from the squares mod p.
class SquareTable {
 public:
  explicit SquareTable(long p);
  int chi(long a) const { return chi_[static_cast<size_t>(a)]; }
  long p() const { return p_; }

 private:
  long p_;
  std::vector<int8_t> chi_;
};

/// a_p = p + 1 - #E(F_p). Bad primes throw unless force is set.
long ap_count(const WeierstrassCurve& curve, long p, bool force = false);
long ap_count(const WeierstrassCurve& curve, const SquareTable& squares, bool force = false);

std::vector<long> good_primes(const WeierstrassCurve& curve, long x);

bool hasse_check(long a_p, long p);

struct ApEntry {
  long p;
  long a_p;
  bool good;
};

struct ApTable {
  std::string label;
  std::vector<ApEntry> entries;
};

/// a_p for every prime <= max_p; bad primes are counted exhaustively and flagged.
ApTable ap_table(const WeierstrassCurve& curve, long max_p, unsigned threads = 1);

struct CornacchiaResult {
  long a;  ///< odd
  long b;  ///< even
  std::array<long, 4> candidates;  ///< 2a, -2a, 2b, -2b
};

CornacchiaResult cornacchia_candidates(long p);

struct QuarticReduction {
  Rational I, J;
  Rational A, B;  ///< Jacobian Y^2 = X^3 + A X + B
  Rational j;
};

/// Plain coefficients a X^4 + b X^3 + c X^2 + d X + e.
QuarticReduction quartic_to_weierstrass(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                        const Rational& e);

/// Integral (A, B) divided by the largest k with k^4 | A and k^6 | B.
std::pair<Rational, Rational> minimise_short(const Rational& A, const Rational& B);

Rational short_j(const Rational& A, const Rational& B);

Rational legendre_j(const Rational& lambda);
Cx legendre_j(const Cx& lambda);

/// Roots of a X^4 + b X^3 + c X^2 + d X + e (Durand-Kerner, double precision).
std::array<Cx, 4> quartic_roots(double a, double b, double c, double d, double e);
/// (z1, z2; z3, z4) = ((z3 - z1)(z4 - z2)) / ((z3 - z2)(z4 - z1)).
Cx cross_ratio(const std::array<Cx, 4>& z);

}  // namespace ep
