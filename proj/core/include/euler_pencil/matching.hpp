#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "euler_pencil/catalogue.hpp"
#include "euler_pencil/curves.hpp"
#include "euler_pencil/matrix2.hpp"
#include "euler_pencil/pencil.hpp"
#include "euler_pencil/quadext.hpp"

namespace ep {

enum class Branch { plus, minus };
enum class Sheet { real, imaginary, complex };

const char* branch_name(Branch b);
const char* sheet_name(Sheet s);
Branch parse_branch(const std::string& s);

struct MasterQuadratic {
  Rational A, B, C;
};

/// A = tau^2 - 4 Delta, B = -a_p A/p + 2 delta tau, C = tau^2 - a_p delta tau/p - Delta a_p^2/p^2 + tau^2/p.
MasterQuadratic master_quadratic(const Rational& tau, const Rational& delta, const Rational& Delta, long a_p, long p);

struct Basepoint {
  std::optional<QuadExt> w_exact;
  Cx w;
  Cx u;
  Cx lambda;
  Branch branch = Branch::plus;
  Sheet sheet = Sheet::real;
  bool linear = false;  ///< solved from the linear fallback A = 0
};

/// w = (-B +/- sqrt(B^2 - 4AC))/(2A), u = principal sqrt(w), lambda = 2u^3/tau - a_p u/(p tau).
Basepoint basepoint_solve(const PencilParams& pencil, long a_p, long p, Branch branch);

/// w = (a_p +/- sqrt(Delta_p))/(2p) with Delta_p = 4p(p+1) - a_p^2, lambda = u^3 - a_p u/(2p).
Basepoint canonical_basepoint(long a_p, long p, Branch branch);

struct MatchReport {
  long p = 0;
  long a_p = 0;
  PencilParams pencil;
  bool canonical = false;
  Basepoint basepoint;
  Cx tr, det, P;
  double residual_tr = 0, residual_det = 0, residual_P = 0;
  Cx offshell_distance;
  std::array<long, 3> euler_poly{1, 0, 0};
  double tolerance = 1e-10;
  bool pass = false;
};

MatchReport euler_match_verify(const PencilParams& pencil, long a_p, long p, Branch branch, double tol = 1e-10);
MatchReport euler_match_verify_canonical(long a_p, long p, Branch branch, double tol = 1e-10);

struct ExactMatch {
  QuadExt w, tr, det, P;
  bool holds = false;
};

/// Matching in Q(sqrt(disc)) through w = u^2 and nu = lambda/u, where tr, det and P are exact.
ExactMatch euler_match_exact(const PencilParams& pencil, long a_p, long p, Branch branch);
ExactMatch euler_match_exact_canonical(long a_p, long p, Branch branch);

struct ReductionCheck {
  Poly reduced;   ///< tau^2 p^2 (P - u^2/p) after lambda(u) substitution, in Y = u^2
  Poly quadratic; ///< A Y^2 + B Y + C
  Poly quotient;
  Poly remainder;
  bool holds = false;
};

ReductionCheck symbolic_reduction_detail(const PencilParams& pencil, long a_p, long p);
bool symbolic_reduction_check(const PencilParams& pencil, long a_p, long p);

struct DiscriminantIdentity {
  long Delta_p, D_p, sum;
  bool holds;
};

DiscriminantIdentity discriminant_identity(long a_p, long p);

Rational offshell_distance(const Rational& w, long p);
QuadExt offshell_distance(const QuadExt& w, long p);
Cx offshell_distance(const Cx& w, long p);

struct CdRatio {
  Rational R_A, Delta_CD;
};

CdRatio cd_matching_ratio(long a_p, long p);

struct TcoBasepoint {
  Rational Y, lambda_sq;
  bool hasse_ok;
};

TcoBasepoint tco_basepoint(long a_p, long p);

struct ZcoBasepoint {
  double u;
  double lambda;
  CxMatrix2 A;
  Cx det;
  Cx tr;
  CxMatrix2 pinv;
  Cx pinv_trace;
  double penrose_residual;
  Cx group_inverse_trace;
};

ZcoBasepoint zco_basepoint();
/// 1 - tau tr(A^+) with the Moore-Penrose pseudoinverse at the basepoint.
Cx zco_euler_factor(const Cx& tau);

/// ZCO matrix plus diag(c, -c)/u^2.
CxMatrix2 zco_c_matrix(const Rational& c, const Cx& u, const Cx& lambda);
bool zco_c_trace_invariance(const Rational& c, const Cx& u, double tol = 1e-12);

struct GoldenSpectrum {
  QuadExt plus, minus;
  Poly charpoly;
};

GoldenSpectrum golden_ratio_spectrum();

struct ObstructionWitness {
  bool found = false;
  long p = 0, q = 0;
  long a_p = 0, a_q = 0;
  long slope_p = 0, slope_q = 0;  ///< f'(0) = -a
};

ObstructionWitness interpolation_obstruction(const WeierstrassCurve& curve, int K);

}  // namespace ep
