#pragma once

#include <string>

#include "euler_pencil/quadext.hpp"

namespace ep {

enum class DispersionKind { tanh, algebraic };

/// Odd increasing surjection a: R -> (-1, 1) with its derivative and sqrt(1 - a^2).
struct Dispersion {
  DispersionKind kind;

  std::string name() const;
  double a(double xi) const;
  double da(double xi) const;
  /// sqrt(1 - a(xi)^2), evaluated without cancellation.
  double co(double xi) const;

  static Dispersion parse(const std::string& name);
};

struct QuadratureResult {
  Cx value;
  double estimated_error = 0;
  long evaluations = 0;
};

/// Integral over xi in [0, inf) of w a/(z^2 - a^2), w = a'/(pi sqrt(1 - a^2)).
QuadratureResult universality_integral(const Dispersion& disp, const Cx& z, double tol = 1e-12);

/// arcsin(1/z)/(pi sqrt(z^2 - 1)) on principal branches.
Cx arcsine_closed_form(const Cx& z);
/// Principal arcsin through -i log(i w + sqrt(1 - w^2)).
Cx principal_asin(const Cx& w);

double arcsine_pdf(double t);
double arcsine_cdf(double t);
/// Integral of the arcsine density over (-1, 1).
double arcsine_pdf_mass();

int chi4(long n);

struct LSeriesResult {
  double value = 0;
  double eta = 0;  ///< 2 L
  long terms = 0;
  double lower = 0;  ///< bracketing raw partial sums
  double upper = 0;
};

/// L(s, chi_-4) for s > 0 via repeated averaging of the alternating partial sums.
LSeriesResult dirichlet_L_chi4(double s, double tol = 1e-13);

/// |eta(s) - 2 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) L(1-s)|.
double eta_functional_equation_residual(double s);
/// |eta(s) - 2 2^(1-s) pi^(s-1) cos(pi s/2) Gamma(1-s) L(1-s)|, the completed-L form.
double eta_functional_equation_residual_completed(double s);

}  // namespace ep
