#include "euler_pencil/curves.hpp"

#include <cmath>
#include <sstream>

#include "euler_pencil/error.hpp"
#include "euler_pencil/parallel.hpp"

namespace ep {

WeierstrassInvariants curve_invariants(const WeierstrassCurve& curve) { return curve.invariants(); }

namespace {

WeierstrassInvariants compute_invariants(const std::array<Rational, 5>& a) {
  const Rational &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  WeierstrassInvariants v;
  v.b2 = a1 * a1 + Rational(4) * a2;
  v.b4 = Rational(2) * a4 + a1 * a3;
  v.b6 = a3 * a3 + Rational(4) * a6;
  v.b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - Rational(24) * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + Rational(36) * v.b2 * v.b4 - Rational(216) * v.b6;
  v.disc = (v.c4 * v.c4 * v.c4 - v.c6 * v.c6) / Rational(1728);
  if (v.disc.is_zero()) throw Error(ErrorKind::singular, "singular curve: discriminant is zero");
  v.j = v.c4 * v.c4 * v.c4 / v.disc;
  return v;
}

std::string term(const Rational& c, const std::string& mono, bool first) {
  if (c.is_zero()) return "";
  std::string s;
  Rational a = c.abs();
  if (first) s = c.sign() < 0 ? "-" : "";
  else s = c.sign() < 0 ? " - " : " + ";
  if (mono.empty()) return s + a.str();
  if (a != Rational(1)) s += a.str();
  return s + mono;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
                                   std::optional<std::string> label)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      inv_(compute_invariants(a_)),
      label_(std::move(label)) {}

WeierstrassCurve WeierstrassCurve::from_model(const std::array<long, 5>& a, std::optional<std::string> label) {
  return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4], std::move(label));
}

WeierstrassCurve WeierstrassCurve::short_form(const Rational& A, const Rational& B, std::optional<std::string> label) {
  return WeierstrassCurve(0, 0, 0, A, B, std::move(label));
}

std::string WeierstrassCurve::name() const {
  if (label_) return *label_;
  std::ostringstream os;
  os << "[" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << "," << a_[4] << "]";
  return os.str();
}

std::string WeierstrassCurve::equation() const {
  std::string lhs = "y^2" + term(a1(), "xy", false) + term(a3(), "y", false);
  std::string rhs = "x^3" + term(a2(), "x^2", false) + term(a4(), "x", false) + term(a6(), "", false);
  return lhs + " = " + rhs;
}

bool WeierstrassCurve::is_bad_prime(long p) const {
  mpz_class pz(p);
  if (mpz_divisible_p(inv_.disc.num().get_mpz_t(), pz.get_mpz_t())) return true;
  for (const auto& c : a_)
    if (mpz_divisible_p(c.den().get_mpz_t(), pz.get_mpz_t())) return true;
  return false;
}

std::optional<long> WeierstrassCurve::cm_discriminant_from_j() const {
  if (inv_.j == Rational(1728)) return -4;
  if (inv_.j.is_zero()) return -3;
  return std::nullopt;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long x) {
  std::vector<long> out;
  if (x < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(x) + 1, false);
  for (long i = 2; i <= x; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long k = i * i; k <= x; k += i) composite[static_cast<size_t>(k)] = true;
  }
  return out;
}

long prime_count(long x) { return static_cast<long>(primes_up_to(x).size()); }

long mod_p(const Rational& a, long p) {
  mpz_class pz(p);
  mpz_class n, d;
  mpz_mod(n.get_mpz_t(), a.num().get_mpz_t(), pz.get_mpz_t());
  mpz_class den = a.den();
  if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
    throw Error(ErrorKind::bad_reduction, "denominator of " + a.str() + " divisible by " + std::to_string(p));
  mpz_invert(d.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (n * d) % pz;
  return r.get_si();
}

__extension__ using Wide = __int128;

long pow_mod(long base, long exp, long p) {
  Wide result = 1;
  Wide b = ((base % p) + p) % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

int legendre_symbol(long a, long p) {
  long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  if (p == 2) return 1;
  long e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

SquareTable::SquareTable(long p) : p_(p), chi_(static_cast<size_t>(p), -1) {
  chi_[0] = 0;
  for (long y = 1; y < p; ++y) chi_[static_cast<size_t>(y * y % p)] = 1;
}

namespace {

struct ReducedCoeffs {
  long a1, a2, a3, a4, a6;
};

ReducedCoeffs reduce(const WeierstrassCurve& c, long p) {
  return {mod_p(c.a1(), p), mod_p(c.a2(), p), mod_p(c.a3(), p), mod_p(c.a4(), p), mod_p(c.a6(), p)};
}

long count_exhaustive(const ReducedCoeffs& r, long p) {
  long n = 1;
  for (long x = 0; x < p; ++x) {
    long rhs = (((x * x % p) * x) + r.a2 * x % p * x + r.a4 * x + r.a6) % p;
    for (long y = 0; y < p; ++y) {
      long lhs = (y * y + r.a1 * x % p * y + r.a3 * y) % p;
      if (lhs == rhs) ++n;
    }
  }
  return p + 1 - n;
}

template <class Chi>
long count_legendre(const ReducedCoeffs& r, long p, Chi&& chi) {
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    long cubic = ((x * x % p) * x + r.a2 * (x * x % p) + r.a4 * x + r.a6) % p;
    long lin = (r.a1 * x + r.a3) % p;
    long g = (4 * cubic + lin * lin) % p;
    sum += chi(g);
  }
  return -sum;
}

void check_prime(const WeierstrassCurve& curve, long p, bool force) {
  if (!is_prime(p)) throw Error(ErrorKind::domain, std::to_string(p) + " is not prime");
  if (!force && curve.is_bad_prime(p))
    throw Error(ErrorKind::bad_reduction,
                curve.name() + " has bad reduction at " + std::to_string(p) + " (use force to count anyway)");
}

}  // namespace

long ap_count(const WeierstrassCurve& curve, long p, bool force) {
  check_prime(curve, p, force);
  ReducedCoeffs r = reduce(curve, p);
  if (p <= 3) return count_exhaustive(r, p);
  return count_legendre(r, p, [p](long g) { return legendre_symbol(g, p); });
}

long ap_count(const WeierstrassCurve& curve, const SquareTable& squares, bool force) {
  long p = squares.p();
  check_prime(curve, p, force);
  ReducedCoeffs r = reduce(curve, p);
  if (p <= 3) return count_exhaustive(r, p);
  return count_legendre(r, p, [&squares](long g) { return squares.chi(g); });
}

std::vector<long> good_primes(const WeierstrassCurve& curve, long x) {
  std::vector<long> out;
  for (long p : primes_up_to(x))
    if (!curve.is_bad_prime(p)) out.push_back(p);
  return out;
}

bool hasse_check(long a_p, long p) { return a_p * a_p <= 4 * p; }

ApTable ap_table(const WeierstrassCurve& curve, long max_p, unsigned threads) {
  std::vector<long> ps = primes_up_to(max_p);
  ApTable t{curve.name(), std::vector<ApEntry>(ps.size())};
  parallel_for(ps.size(), threads, [&](std::size_t i) {
    long p = ps[i];
    bool good = !curve.is_bad_prime(p);
    long a = ap_count(curve, SquareTable(p), true);
    t.entries[i] = {p, a, good};
  });
  return t;
}

CornacchiaResult cornacchia_candidates(long p) {
  if (!is_prime(p) || p % 4 != 1)
    throw Error(ErrorKind::domain, std::to_string(p) + " is not a prime congruent to 1 mod 4 (inert)");
  long c = 2;
  while (legendre_symbol(c, p) != -1) ++c;
  long x = pow_mod(c, (p - 1) / 4, p);  // x^2 = -1 mod p
  long r0 = p, r1 = x;
  while (r1 * r1 > p) {
    long t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  long a = r1;
  long rest = p - a * a;
  long b = std::lround(std::sqrt(static_cast<double>(rest)));
  while (b * b > rest) --b;
  while ((b + 1) * (b + 1) <= rest) ++b;
  if (a * a + b * b != p) throw Error(ErrorKind::domain, "Cornacchia failed for " + std::to_string(p));
  if (a % 2 == 0) std::swap(a, b);
  return {a, b, {2 * a, -2 * a, 2 * b, -2 * b}};
}

Rational short_j(const Rational& A, const Rational& B) {
  Rational four_a3 = Rational(4) * A * A * A;
  Rational denom = four_a3 + Rational(27) * B * B;
  if (denom.is_zero()) throw Error(ErrorKind::singular, "singular short Weierstrass model");
  return Rational(1728) * four_a3 / denom;
}

QuarticReduction quartic_to_weierstrass(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                        const Rational& e) {
  QuarticReduction q;
  q.I = Rational(12) * a * e - Rational(3) * b * d + c * c;
  q.J = Rational(72) * a * c * e + Rational(9) * b * c * d - Rational(27) * a * d * d - Rational(27) * b * b * e -
        Rational(2) * c * c * c;
  q.A = Rational(-27) * q.I;
  q.B = Rational(-27) * q.J;
  try {
    q.j = short_j(q.A, q.B);
  } catch (const Error&) {
    throw Error(ErrorKind::degenerate, "degenerate quartic: Jacobian is singular");
  }
  return q;
}

std::pair<Rational, Rational> minimise_short(const Rational& A, const Rational& B) {
  if (!A.is_integer() || !B.is_integer()) return {A, B};
  mpz_class a = abs(A.num()), b = abs(B.num());
  mpz_class k = 1;
  for (long q = 2;; ++q) {
    mpz_class q4 = mpz_class(q) * q * q * q;
    if (a != 0 && q4 > a) break;
    if (a == 0 && mpz_class(q4) * q * q > b) break;
    mpz_class q6 = q4 * q * q;
    while ((a == 0 || mpz_divisible_p(a.get_mpz_t(), q4.get_mpz_t())) &&
           (b == 0 || mpz_divisible_p(b.get_mpz_t(), q6.get_mpz_t())) && !(a == 0 && b == 0)) {
      a /= q4;
      b /= q6;
      k *= q;
    }
  }
  mpz_class k4 = k * k * k * k;
  mpz_class k6 = k4 * k * k;
  return {A / Rational(k4, mpz_class(1)), B / Rational(k6, mpz_class(1))};
}

Rational legendre_j(const Rational& l) {
  if (l.is_zero() || l == Rational(1)) throw Error(ErrorKind::pole, "Legendre j has a pole at " + l.str());
  Rational t = l * l - l + Rational(1);
  return Rational(256) * t * t * t / (l * l * (l - Rational(1)) * (l - Rational(1)));
}

Cx legendre_j(const Cx& l) {
  if (std::abs(l) == 0.0 || std::abs(l - 1.0) == 0.0) throw Error(ErrorKind::pole, "Legendre j pole");
  Cx t = l * l - l + 1.0;
  return 256.0 * t * t * t / (l * l * (l - 1.0) * (l - 1.0));
}

std::array<Cx, 4> quartic_roots(double a, double b, double c, double d, double e) {
  if (a == 0.0) throw Error(ErrorKind::degenerate, "quartic with zero leading coefficient");
  std::array<Cx, 5> m{1.0, b / a, c / a, d / a, e / a};
  auto f = [&m](Cx z) { return (((z + m[1]) * z + m[2]) * z + m[3]) * z + m[4]; };
  std::array<Cx, 4> z;
  Cx seed(0.4, 0.9);
  for (int k = 0; k < 4; ++k) z[static_cast<size_t>(k)] = std::pow(seed, k);
  for (int it = 0; it < 500; ++it) {
    double change = 0.0;
    for (size_t i = 0; i < 4; ++i) {
      Cx den = 1.0;
      for (size_t j = 0; j < 4; ++j)
        if (j != i) den *= z[i] - z[j];
      Cx step = f(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return z;
}

Cx cross_ratio(const std::array<Cx, 4>& z) {
  return ((z[2] - z[0]) * (z[3] - z[1])) / ((z[2] - z[1]) * (z[3] - z[0]));
}

}  // namespace ep
