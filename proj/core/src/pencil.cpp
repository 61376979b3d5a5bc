#include "euler_pencil/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "euler_pencil/error.hpp"

namespace ep {

Pencil2 pencil_from_tdd(const Rational& tau, const Rational& delta, const Rational& Delta, const Rational& E) {
  Pencil2 p;
  p.E1 = E;
  p.E2 = -E;
  p.a = (tau + delta) / Rational(2);
  p.d = (tau - delta) / Rational(2);
  p.b_sq = Delta - p.a * p.d;
  return p;
}

Pencil2 pencil_from_params(const PencilParams& q, const Rational& E) { return pencil_from_tdd(q.tau, q.delta, q.Delta, E); }

Pencil2 zco_pencil(const Rational& E) {
  Pencil2 p;
  p.E1 = E;
  p.E2 = -E;
  p.a = 1;
  p.d = -1;
  p.b_sq = 1;
  return p;
}

RatLaurent spectral_poly(const Pencil2& q) {
  RatLaurent P;
  P.add_term(1, 6, 0);
  P.add_term(-(q.E1 + q.E2), 4, 0);
  P.add_term(q.E1 * q.E2, 2, 0);
  P.add_term(-(q.a + q.d), 3, 1);
  P.add_term(q.a * q.E2 + q.d * q.E1, 1, 1);
  P.add_term(q.a * q.d + q.b_sq, 0, 2);
  return P;
}

Matrix2<QuadLaurent> pencil_matrix(const Pencil2& q) {
  QuadExt b = q.b();
  QuadLaurent u2 = QuadLaurent::u(2);
  Matrix2<QuadLaurent> A;
  A.e11 = u2 - QuadLaurent(QuadExt(q.E1)) - QuadLaurent::monomial(QuadExt(q.a), -1, 1);
  A.e12 = -QuadLaurent::monomial(b, -1, 1);
  A.e21 = QuadLaurent::monomial(b, -1, 1);
  A.e22 = u2 - QuadLaurent(QuadExt(q.E2)) - QuadLaurent::monomial(QuadExt(q.d), -1, 1);
  return A;
}

CxMatrix2 pencil_matrix(const Pencil2& q, const Cx& u, const Cx& lambda) {
  Cx b = q.b().to_cx();
  Cx k = lambda / u;
  return {u * u - q.E1.to_double() - k * q.a.to_double(), -k * b, k * b, u * u - q.E2.to_double() - k * q.d.to_double()};
}

AdjugateColumns adjugate_columns(const Pencil2& q) {
  Matrix2<QuadLaurent> adj = pencil_matrix(q).adj();
  return {{adj.e11, adj.e21}, {adj.e12, adj.e22}};
}

namespace {

template <class T>
T eval_P(const Pencil2& q, const T& u, const T& l, T (*conv)(const Rational&)) {
  T u2 = u * u;
  T u3 = u2 * u;
  T u4 = u2 * u2;
  T u6 = u4 * u2;
  return u6 - conv(q.E1 + q.E2) * u4 + conv(q.E1 * q.E2) * u2 - l * (conv(q.tau()) * u3 - conv(q.a * q.E2 + q.d * q.E1) * u) +
         l * l * conv(q.Delta());
}

Cx to_cx(const Rational& r) { return Cx(r.to_double(), 0.0); }
QuadExt to_q(const Rational& r) { return QuadExt(r); }

}  // namespace

TrDet<Cx> resolvent_tr_det(const Pencil2& q, const Cx& u, const Cx& lambda, double on_shell_tol) {
  Cx P = eval_P<Cx>(q, u, lambda, &to_cx);
  double scale = std::max(1.0, std::pow(std::abs(u), 6));
  if (std::abs(P) <= on_shell_tol * scale) throw Error(ErrorKind::on_shell, "resolvent requested on the spectral curve");
  Cx s = to_cx(q.E1 + q.E2);
  Cx tr = u * (2.0 * u * u * u - s * u - to_cx(q.tau()) * lambda) / P;
  Cx det = u * u / P;
  return {tr, det, P};
}

TrDet<QuadExt> resolvent_tr_det(const Pencil2& q, const QuadExt& u, const QuadExt& lambda) {
  QuadExt P = eval_P<QuadExt>(q, u, lambda, &to_q);
  if (P.is_zero()) throw Error(ErrorKind::on_shell, "resolvent requested on the spectral curve");
  QuadExt s(q.E1 + q.E2);
  QuadExt tr = u * (QuadExt(2) * u * u * u - s * u - QuadExt(q.tau()) * lambda) / P;
  QuadExt det = u * u / P;
  return {tr, det, P};
}

TrDet<Cx> resolvent_tr_det_direct(const Pencil2& q, const Cx& u, const Cx& lambda) {
  CxMatrix2 A = pencil_matrix(q, u, lambda);
  Cx det = A.det();
  if (std::abs(det) == 0.0) throw Error(ErrorKind::on_shell, "singular pencil matrix");
  CxMatrix2 R = (Cx(1.0) / det) * A.adj();
  return {R.trace(), R.det(), det * std::pow(u, 2)};
}

QuadExt EtaGram::coeff(int i, int j, int lambda_exp) const {
  const auto& e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  auto it = e.find(lambda_exp);
  return it == e.end() ? QuadExt(0) : it->second;
}

int EtaGram::lambda_degree() const {
  int deg = 0;
  for (const auto& row : entries)
    for (const auto& e : row)
      for (const auto& [k, c] : e) deg = std::max(deg, k);
  return deg;
}

bool EtaGram::is_diagonal() const { return entries[0][1].empty() && entries[1][0].empty(); }

bool EtaGram::is_lambda_independent() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      for (const auto& [k, c] : e)
        if (k != 0) return false;
  return true;
}

EtaGram eta_gram(const Pencil2& q, const Rational& c) {
  AdjugateColumns cols = adjugate_columns(q);
  std::array<const std::array<QuadLaurent, 2>*, 2> phi{&cols.phi1, &cols.phi2};
  EtaGram g;
  g.c = c;
  QuadLaurent inv_u = QuadLaurent::u(-1);
  for (size_t i = 0; i < 2; ++i) {
    std::array<QuadLaurent, 2> left{(*phi[i])[0].reflect_u(), (*phi[i])[1].reflect_u()};
    for (size_t j = 0; j < 2; ++j) {
      QuadLaurent pairing = left[0] * (*phi[j])[0] - left[1] * (*phi[j])[1];
      LambdaPoly res;
      for (auto& [k, v] : residue_at_zero(pairing * inv_u)) {
        QuadExt scaled = QuadExt(c) * v;
        if (!scaled.is_zero()) res.emplace(k, scaled);
      }
      g.entries[i][j] = std::move(res);
    }
  }
  return g;
}

bool lambda_evenness_check(const EtaGram& g) {
  for (const auto& row : g.entries)
    for (const auto& e : row)
      for (const auto& [k, c] : e)
        if (k % 2 != 0 && !c.is_zero()) return false;
  return true;
}

int pontryagin_index(const EtaGram& g) {
  int count = 0;
  for (int i = 0; i < 2; ++i) {
    QuadExt v = g.at_zero(i, i);
    if (v.is_zero()) throw Error(ErrorKind::degenerate, "degenerate Gram: zero diagonal entry at lambda = 0");
    if (v.sign() < 0) ++count;
  }
  return count;
}

namespace {

bool zero(const Rational& r) { return r.is_zero(); }
bool zero(const QuadExt& q) { return q.is_zero(); }

template <class T>
T j_impl(const T& tau_sq, const T& delta, const T& Delta) {
  T mu = (tau_sq - delta * delta) / T(4) - Delta;
  T A = tau_sq - T(4) * Delta;
  T B = delta * delta + T(4) * Delta;
  if (zero(Delta)) throw Error(ErrorKind::singular, "j-formula singular: Delta = 0");
  if (zero(mu)) throw Error(ErrorKind::singular, "j-formula singular: mu = 0");
  if (zero(A)) throw Error(ErrorKind::singular, "j-formula singular: tau^2 - 4 Delta = 0");
  if (zero(B)) throw Error(ErrorKind::singular, "j-formula singular: delta^2 + 4 Delta = 0");
  T n = tau_sq * delta * delta + T(12) * Delta * mu;
  return T(16) * n * n * n / (Delta * Delta * mu * mu * A * B);
}

}  // namespace

Rational j_formula(const Rational& tau, const Rational& delta, const Rational& Delta) {
  return j_impl<Rational>(tau * tau, delta, Delta);
}

Rational j_formula_tau_sq(const Rational& tau_sq, const Rational& delta, const Rational& Delta) {
  return j_impl<Rational>(tau_sq, delta, Delta);
}

QuadExt j_formula_tau_sq(const QuadExt& tau_sq, const QuadExt& delta, const QuadExt& Delta) {
  return j_impl<QuadExt>(tau_sq, delta, Delta);
}

Rational j1728_locus_Q(const Rational& t2, const Rational& d, const Rational& D) {
  Rational d2 = d * d;
  return Rational(-2) * t2 * d2 - Rational(9) * t2 * D + Rational(9) * d2 * D + Rational(36) * D * D;
}

QuadExt j0_locus_Delta(const Rational& tau, const Rational& delta) {
  Rational t2 = tau * tau;
  Rational d2 = delta * delta;
  auto [r1, r2] = quad_roots(Rational(12), Rational(-3) * (t2 - d2), -t2 * d2);
  return r1.sign() > 0 ? r1 : r2;
}

template <std::size_t N>
int exact_rank(std::array<std::array<Rational, N>, N> m) {
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < N && row < N; ++col) {
    std::size_t piv = row;
    while (piv < N && m[piv][col].is_zero()) ++piv;
    if (piv == N) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < N; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < N; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

template int exact_rank<4>(std::array<std::array<Rational, 4>, 4>);
template int exact_rank<8>(std::array<std::array<Rational, 8>, 8>);

Poly charpoly(const std::vector<std::vector<Rational>>& A) {
  std::size_t n = A.size();
  using Mat = std::vector<std::vector<Rational>>;
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat r(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!x[i][k].is_zero())
          for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Mat M(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat AM = mul(A, M);
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Mat AM2 = mul(A, M);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AM2[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return Poly(c);
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class(1000000000000L)) throw Error(ErrorKind::domain, "rational root search: coefficient too large");
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& poly) {
  std::vector<Rational> roots;
  Poly p = poly;
  while (!p.is_zero() && p.degree() > 0 && p.coeff(0).is_zero()) {
    roots.push_back(Rational(0));
    p = poly_divrem(p, Poly{Rational(0), Rational(1)}).quotient;
  }
  if (p.degree() <= 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  Poly ip = Rational(lcm_den, mpz_class(1)) * p;
  auto num_divs = divisors(ip.coeff(0).num());
  auto den_divs = divisors(ip.leading().num());
  std::vector<Rational> candidates;
  for (const auto& a : num_divs)
    for (const auto& b : den_divs) {
      candidates.emplace_back(a, b);
      candidates.emplace_back(mpz_class(-a), b);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    Poly lin{-r, Rational(1)};
    while (p.degree() > 0 && p.eval(r).is_zero()) {
      roots.push_back(r);
      p = poly_divrem(p, lin).quotient;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

MonomialGram8 monomial_gram8(int eps1, int eps2) {
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw Error(ErrorKind::domain, "metric signs must be +1 or -1");
  std::array<int, 2> eps{eps1, eps2};
  MonomialGram8 g;
  for (int k = 0; k < 8; ++k) {
    int i = k % 2, n = k / 2 - 1;
    for (int l = 0; l < 8; ++l) {
      int j = l % 2, m = l / 2 - 1;
      Rational v(0);
      if (i == j && n + m == 0 && n != 0) v = Rational(2 * eps[static_cast<size_t>(i)] * (n % 2 == 0 ? 1 : -1));
      g.gram[static_cast<size_t>(k)][static_cast<size_t>(l)] = v;
    }
  }
  g.rank = exact_rank<8>(g.gram);
  const std::array<size_t, 4> keep{0, 1, 4, 5};
  std::vector<std::vector<Rational>> red(4, std::vector<Rational>(4));
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c) {
      g.reduced[r][c] = g.gram[keep[r]][keep[c]];
      red[r][c] = g.reduced[r][c];
    }
  g.charpoly = charpoly(red);
  g.eigenvalues = rational_roots(g.charpoly);
  return g;
}

}  // namespace ep
