#include "euler_pencil/continuum.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "euler_pencil/error.hpp"

namespace ep {

using std::numbers::pi;

std::string Dispersion::name() const { return kind == DispersionKind::tanh ? "tanh" : "algebraic"; }

double Dispersion::a(double xi) const {
  return kind == DispersionKind::tanh ? std::tanh(xi) : xi / std::sqrt(1.0 + xi * xi);
}

double Dispersion::da(double xi) const {
  if (kind == DispersionKind::tanh) {
    double c = 1.0 / std::cosh(xi);
    return c * c;
  }
  return std::pow(1.0 + xi * xi, -1.5);
}

double Dispersion::co(double xi) const {
  return kind == DispersionKind::tanh ? 1.0 / std::cosh(xi) : 1.0 / std::sqrt(1.0 + xi * xi);
}

Dispersion Dispersion::parse(const std::string& name) {
  if (name == "tanh") return {DispersionKind::tanh};
  if (name == "algebraic") return {DispersionKind::algebraic};
  throw Error(ErrorKind::parse, "dispersion must be tanh or algebraic, got '" + name + "'");
}

namespace {

bool on_cut(const Cx& z) { return z.imag() == 0.0 && std::abs(z.real()) <= 1.0; }

}  // namespace

QuadratureResult universality_integral(const Dispersion& disp, const Cx& z, double tol) {
  if (on_cut(z)) throw Error(ErrorKind::branch, "z lies on the cut [-1, 1]");
  if (z.real() <= 0.0) throw Error(ErrorKind::domain, "universality integral needs Re z > 0");
  Cx z2 = z * z;
  long evals = 0;
  auto integrand = [&](double r) -> Cx {
    ++evals;
    if (r >= 1.0) return Cx(0.0);
    double xi = r / (1.0 - r);
    double jac = 1.0 / ((1.0 - r) * (1.0 - r));
    double co = disp.co(xi);
    if (co == 0.0) return Cx(0.0);
    double a = disp.a(xi);
    double w = disp.da(xi) / (pi * co);
    return w * a / (z2 - a * a) * jac;
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double err_re = 0, err_im = 0;
  double re = GK::integrate([&](double r) { return integrand(r).real(); }, 0.0, 1.0, 20, tol, &err_re);
  double im = GK::integrate([&](double r) { return integrand(r).imag(); }, 0.0, 1.0, 20, tol, &err_im);
  double scale = std::max(1.0, std::abs(Cx(re, im)));
  double err = std::hypot(err_re, err_im) * scale;
  if (!std::isfinite(re) || !std::isfinite(im) || err > std::max(1e-8, 1e4 * tol))
    throw Error(ErrorKind::quadrature, "universality quadrature did not converge");
  return {Cx(re, im), err, evals};
}

Cx principal_asin(const Cx& w) {
  const Cx i(0.0, 1.0);
  return -i * std::log(i * w + std::sqrt(1.0 - w * w));
}

Cx arcsine_closed_form(const Cx& z) {
  if (on_cut(z)) throw Error(ErrorKind::branch, "z lies on the cut [-1, 1]");
  return principal_asin(1.0 / z) / (pi * std::sqrt(z * z - 1.0));
}

double arcsine_pdf(double t) {
  if (!(std::abs(t) < 1.0)) throw Error(ErrorKind::domain, "arcsine density needs |t| < 1");
  return 1.0 / (pi * std::sqrt(1.0 - t * t));
}

double arcsine_cdf(double t) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return 0.5 + std::asin(t) / pi;
}

double arcsine_pdf_mass() {
  // t = 1 - s^2 on each half removes the endpoint singularity.
  // With 1 - t = s^2 and 1 + t = 2 - s^2 the density times dt/ds is 2/(pi sqrt(2 - s^2)).
  auto smooth = [](double s) { return 2.0 / (pi * std::sqrt(2.0 - s * s)); };
  return 2.0 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(smooth, 0.0, 1.0, 15, 1e-14);
}

int chi4(long n) {
  long r = ((n % 4) + 4) % 4;
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

namespace {

double averaged_sum(double s, long n, double* lower, double* upper) {
  std::vector<double> S(static_cast<size_t>(n) + 1);
  double acc = 0;
  for (long k = 0; k <= n; ++k) {
    double t = std::pow(static_cast<double>(2 * k + 1), -s);
    acc += (k % 2 == 0) ? t : -t;
    S[static_cast<size_t>(k)] = acc;
  }
  if (lower && upper) {
    *lower = std::min(S[static_cast<size_t>(n - 1)], S[static_cast<size_t>(n)]);
    *upper = std::max(S[static_cast<size_t>(n - 1)], S[static_cast<size_t>(n)]);
  }
  for (long len = n; len > 0; --len)
    for (long k = 0; k < len; ++k) S[static_cast<size_t>(k)] = 0.5 * (S[static_cast<size_t>(k)] + S[static_cast<size_t>(k + 1)]);
  return S[0];
}

}  // namespace

LSeriesResult dirichlet_L_chi4(double s, double tol) {
  if (!(s > 0.0)) throw Error(ErrorKind::not_implemented, "L(s, chi_-4) series path needs s > 0");
  LSeriesResult r;
  long n = 16;
  double prev = averaged_sum(s, n, nullptr, nullptr);
  for (;;) {
    long next = 2 * n;
    double cur = averaged_sum(s, next, &r.lower, &r.upper);
    if (std::abs(cur - prev) <= tol || next >= 1024) {
      r.value = cur;
      r.terms = next + 1;
      break;
    }
    prev = cur;
    n = next;
  }
  r.eta = 2.0 * r.value;
  return r;
}

double eta_functional_equation_residual(double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorKind::domain, "functional-equation residual needs 0 < s < 1");
  double eta = dirichlet_L_chi4(s).eta;
  double rhs = 2.0 * std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) * std::tgamma(1.0 - s) *
               dirichlet_L_chi4(1.0 - s).value;
  return std::abs(eta - rhs);
}

double eta_functional_equation_residual_completed(double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorKind::domain, "functional-equation residual needs 0 < s < 1");
  double eta = dirichlet_L_chi4(s).eta;
  double rhs = 2.0 * std::pow(2.0, 1.0 - s) * std::pow(pi, s - 1.0) * std::cos(pi * s / 2.0) * std::tgamma(1.0 - s) *
               dirichlet_L_chi4(1.0 - s).value;
  return std::abs(eta - rhs);
}

}  // namespace ep
