#include "euler_pencil/matching.hpp"

#include <cmath>

#include "euler_pencil/error.hpp"

namespace ep {

const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

const char* sheet_name(Sheet s) {
  switch (s) {
    case Sheet::real: return "real";
    case Sheet::imaginary: return "imaginary";
    case Sheet::complex: return "complex";
  }
  return "complex";
}

Branch parse_branch(const std::string& s) {
  if (s == "plus" || s == "+") return Branch::plus;
  if (s == "minus" || s == "-") return Branch::minus;
  throw Error(ErrorKind::parse, "branch must be plus or minus, got '" + s + "'");
}

MasterQuadratic master_quadratic(const Rational& tau, const Rational& delta, const Rational& Delta, long a_p, long p) {
  if (tau.is_zero()) throw Error(ErrorKind::degenerate, "tau = 0: the master quadratic is undefined, use the ZCO path");
  Rational a(a_p), pr(p);
  MasterQuadratic m;
  m.A = tau * tau - Rational(4) * Delta;
  m.B = -a * m.A / pr + Rational(2) * delta * tau;
  m.C = tau * tau - a * delta * tau / pr - Delta * a * a / (pr * pr) + tau * tau / pr;
  return m;
}

namespace {

Sheet classify(const QuadExt& w) {
  if (!w.is_real()) return Sheet::complex;
  return w.sign() < 0 ? Sheet::imaginary : Sheet::real;
}

void require_hasse(long a_p, long p) {
  if (!hasse_check(a_p, p))
    throw Error(ErrorKind::hasse, "Hasse bound violated: a_p = " + std::to_string(a_p) + ", p = " + std::to_string(p));
}

}  // namespace

Basepoint basepoint_solve(const PencilParams& q, long a_p, long p, Branch branch) {
  MasterQuadratic m = master_quadratic(q.tau, q.delta, q.Delta, a_p, p);
  Basepoint bp;
  bp.branch = branch;
  if (m.A.is_zero()) {
    if (m.B.is_zero()) throw Error(ErrorKind::degenerate, "master quadratic vanishes identically in its leading terms: no basepoint");
    bp.w_exact = QuadExt(-m.C / m.B);
    bp.linear = true;
  } else {
    auto [wp, wm] = quad_roots(m.A, m.B, m.C);
    bp.w_exact = branch == Branch::plus ? wp : wm;
  }
  bp.w = bp.w_exact->to_cx();
  bp.sheet = classify(*bp.w_exact);
  bp.u = std::sqrt(bp.w);
  double tau = q.tau.to_double();
  bp.lambda = 2.0 * bp.u * bp.u * bp.u / tau - static_cast<double>(a_p) * bp.u / (static_cast<double>(p) * tau);
  return bp;
}

Basepoint canonical_basepoint(long a_p, long p, Branch branch) {
  long disc = 4 * p * (p + 1) - a_p * a_p;
  if (disc <= 0) throw Error(ErrorKind::hasse, "canonical discriminant is not positive (Hasse violated)");
  Rational two_p(2 * p);
  Rational s = branch == Branch::plus ? Rational(1) : Rational(-1);
  Basepoint bp;
  bp.branch = branch;
  bp.w_exact = QuadExt(Rational(a_p) / two_p, s / two_p, Rational(disc));
  bp.w = bp.w_exact->to_cx();
  bp.sheet = classify(*bp.w_exact);
  bp.u = std::sqrt(bp.w);
  bp.lambda = bp.u * bp.u * bp.u - static_cast<double>(a_p) / (2.0 * static_cast<double>(p)) * bp.u;
  return bp;
}

namespace {

MatchReport verify_at(const PencilParams& q, const Basepoint& bp, long a_p, long p, double tol, bool canonical) {
  MatchReport r;
  r.p = p;
  r.a_p = a_p;
  r.pencil = q;
  r.canonical = canonical;
  r.basepoint = bp;
  r.tolerance = tol;
  r.euler_poly = {1, -a_p, p};
  Pencil2 pencil = pencil_from_params(q);
  TrDet<Cx> td = resolvent_tr_det(pencil, bp.u, bp.lambda);
  r.tr = td.tr;
  r.det = td.det;
  r.P = td.P;
  r.residual_tr = std::abs(td.tr - static_cast<double>(a_p));
  r.residual_det = std::abs(td.det - static_cast<double>(p));
  r.residual_P = std::abs(td.P - bp.w / static_cast<double>(p));
  r.offshell_distance = offshell_distance(bp.w, p);
  r.pass = r.residual_tr <= tol && r.residual_det <= tol && r.residual_P <= tol;
  return r;
}

ExactMatch exact_from_w(const PencilParams& q, const QuadExt& w, long a_p, long p) {
  ExactMatch e;
  e.w = w;
  QuadExt tau(q.tau), delta(q.delta), Delta(q.Delta);
  QuadExt nu = (QuadExt(2) * w - QuadExt(Rational(a_p, p))) / tau;
  e.P = w * w * w - tau * nu * w * w - w - delta * nu * w + Delta * nu * nu * w;
  if (e.P.is_zero()) throw Error(ErrorKind::on_shell, "basepoint lies on the spectral curve");
  e.tr = (QuadExt(2) * w * w - tau * nu * w) / e.P;
  e.det = w / e.P;
  e.holds = e.tr == QuadExt(a_p) && e.det == QuadExt(p) && e.P == w / QuadExt(p);
  return e;
}

}  // namespace

MatchReport euler_match_verify(const PencilParams& q, long a_p, long p, Branch branch, double tol) {
  require_hasse(a_p, p);
  return verify_at(q, basepoint_solve(q, a_p, p, branch), a_p, p, tol, false);
}

MatchReport euler_match_verify_canonical(long a_p, long p, Branch branch, double tol) {
  require_hasse(a_p, p);
  return verify_at(PencilParams::canonical(), canonical_basepoint(a_p, p, branch), a_p, p, tol, true);
}

ExactMatch euler_match_exact(const PencilParams& q, long a_p, long p, Branch branch) {
  Basepoint bp = basepoint_solve(q, a_p, p, branch);
  return exact_from_w(q, *bp.w_exact, a_p, p);
}

ExactMatch euler_match_exact_canonical(long a_p, long p, Branch branch) {
  Basepoint bp = canonical_basepoint(a_p, p, branch);
  return exact_from_w(PencilParams::canonical(), *bp.w_exact, a_p, p);
}

ReductionCheck symbolic_reduction_detail(const PencilParams& q, long a_p, long p) {
  if (q.tau.is_zero()) throw Error(ErrorKind::degenerate, "tau = 0: lambda cannot be eliminated");
  Rational pr(p), a(a_p);
  RatLaurent P = spectral_poly(pencil_from_params(q));
  RatLaurent lam;
  lam.add_term(Rational(2) / q.tau, 3, 0);
  lam.add_term(-a / (pr * q.tau), 1, 0);

  int max_l = P.max_lambda();
  std::vector<RatLaurent> lam_pow{RatLaurent(1)};
  for (int k = 1; k <= max_l; ++k) lam_pow.push_back(lam_pow.back() * lam);

  RatLaurent sub;
  for (const auto& [key, c] : P.terms()) sub += RatLaurent::monomial(c, key.first, 0) * lam_pow[static_cast<size_t>(key.second)];
  sub.add_term(-Rational(1) / pr, 2, 0);
  Rational scale = q.tau * q.tau * pr * pr;

  std::vector<Rational> ycoef;
  for (const auto& [key, c] : sub.terms()) {
    if (key.first < 0 || key.first % 2 != 0)
      throw Error(ErrorKind::degenerate, "substituted spectral polynomial is not a polynomial in u^2");
    size_t k = static_cast<size_t>(key.first / 2);
    if (ycoef.size() <= k) ycoef.resize(k + 1, Rational(0));
    ycoef[k] = c * scale;
  }
  ReductionCheck r;
  r.reduced = Poly(ycoef);
  MasterQuadratic m = master_quadratic(q.tau, q.delta, q.Delta, a_p, p);
  r.quadratic = Poly{m.C, m.B, m.A};
  if (r.quadratic.is_zero()) throw Error(ErrorKind::degenerate, "master quadratic is identically zero");
  DivRem dr = poly_divrem(r.reduced, r.quadratic);
  r.quotient = dr.quotient;
  r.remainder = dr.remainder;
  r.holds = r.remainder.is_zero() && r.quotient.degree() == 1 && r.quotient.coeff(0).is_zero();
  return r;
}

bool symbolic_reduction_check(const PencilParams& q, long a_p, long p) {
  ReductionCheck r = symbolic_reduction_detail(q, a_p, p);
  if (!r.holds)
    throw Error(ErrorKind::degenerate, "symbolic reduction failed: remainder " + r.remainder.str() + ", quotient " +
                                            r.quotient.str());
  return true;
}

DiscriminantIdentity discriminant_identity(long a_p, long p) {
  DiscriminantIdentity d;
  d.Delta_p = 4 * p * (p + 1) - a_p * a_p;
  d.D_p = a_p * a_p - 4 * p;
  d.sum = d.Delta_p + d.D_p;
  d.holds = d.sum == 4 * p * p;
  return d;
}

Rational offshell_distance(const Rational& w, long p) {
  if (w == Rational(-1)) throw Error(ErrorKind::pole, "off-shell distance has a pole at w = -1");
  return w / (Rational(p) * (w + Rational(1)));
}

QuadExt offshell_distance(const QuadExt& w, long p) {
  if (w == QuadExt(-1)) throw Error(ErrorKind::pole, "off-shell distance has a pole at w = -1");
  return w / (QuadExt(p) * (w + QuadExt(1)));
}

Cx offshell_distance(const Cx& w, long p) {
  if (w == Cx(-1.0, 0.0)) throw Error(ErrorKind::pole, "off-shell distance has a pole at w = -1");
  return w / (static_cast<double>(p) * (w + 1.0));
}

CdRatio cd_matching_ratio(long a_p, long p) {
  if (a_p == 2 * p) throw Error(ErrorKind::pole, "matching ratio undefined at a_p = 2p");
  Rational den(a_p - 2 * p);
  Rational R = Rational(p) * Rational(p + 1 - a_p) / (den * den);
  return {R, Rational(9) - Rational(60) * R};
}

TcoBasepoint tco_basepoint(long a_p, long p) {
  Rational Y = Rational(a_p - p) / Rational(2 * p);
  return {Y, Y * Y * Y + Y * Y + Y, hasse_check(a_p, p)};
}

ZcoBasepoint zco_basepoint() {
  ZcoBasepoint z;
  z.u = 1.0 / std::sqrt(2.0);
  z.lambda = -3.0 / (8.0 * std::sqrt(2.0));
  z.A = pencil_matrix(zco_pencil(1), Cx(z.u), Cx(z.lambda));
  z.det = z.A.det();
  z.tr = z.A.trace();
  z.pinv = pseudoinverse2(z.A);
  z.pinv_trace = z.pinv.trace();
  z.penrose_residual = penrose_residual(z.A, z.pinv);
  z.group_inverse_trace = group_inverse2(z.A).trace();
  return z;
}

Cx zco_euler_factor(const Cx& tau) { return 1.0 - tau * zco_basepoint().pinv_trace; }

CxMatrix2 zco_c_matrix(const Rational& c, const Cx& u, const Cx& lambda) {
  if (std::abs(u) == 0.0) throw Error(ErrorKind::pole, "ZCO_c matrix needs u != 0");
  CxMatrix2 A = pencil_matrix(zco_pencil(1), u, lambda);
  Cx k = c.to_double() / (u * u);
  A.e11 += k;
  A.e22 -= k;
  return A;
}

bool zco_c_trace_invariance(const Rational& c, const Cx& u, double tol) {
  CxMatrix2 A = zco_c_matrix(c, u, Cx(-3.0 / (8.0 * std::sqrt(2.0))));
  return std::abs(A.trace() - 2.0 * u * u) <= tol * std::max(1.0, std::norm(u));
}

GoldenSpectrum golden_ratio_spectrum() {
  Matrix2<Rational> M{Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)};
  GoldenSpectrum g;
  g.charpoly = Poly{M.det(), -M.trace(), Rational(1)};
  auto [a, b] = quad_roots(Rational(1), -M.trace(), M.det());
  g.plus = a;
  g.minus = b;
  return g;
}

ObstructionWitness interpolation_obstruction(const WeierstrassCurve& curve, int K) {
  if (K < 2) throw Error(ErrorKind::domain, "interpolation obstruction needs K >= 2");
  ObstructionWitness w;
  std::vector<std::pair<long, long>> seen;
  for (long p = 2; static_cast<int>(seen.size()) < K; ++p) {
    if (!is_prime(p) || curve.is_bad_prime(p)) continue;
    long a = ap_count(curve, p);
    for (const auto& [q, aq] : seen) {
      if (aq != a) {
        w.found = true;
        w.p = q;
        w.a_p = aq;
        w.q = p;
        w.a_q = a;
        w.slope_p = -aq;
        w.slope_q = -a;
        return w;
      }
    }
    seen.emplace_back(p, a);
  }
  return w;
}

}  // namespace ep
