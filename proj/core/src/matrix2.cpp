#include "euler_pencil/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "euler_pencil/error.hpp"

namespace ep {

CxMatrix2 conj_transpose(const CxMatrix2& m) {
  return {std::conj(m.e11), std::conj(m.e21), std::conj(m.e12), std::conj(m.e22)};
}

double frobenius_norm(const CxMatrix2& m) {
  return std::sqrt(std::norm(m.e11) + std::norm(m.e12) + std::norm(m.e21) + std::norm(m.e22));
}

namespace {

int numeric_rank(const CxMatrix2& m, double rank_tol) {
  double f2 = std::pow(frobenius_norm(m), 2);
  if (f2 == 0.0) return 0;
  return std::abs(m.det()) <= rank_tol * f2 ? 1 : 2;
}

}  // namespace

CxMatrix2 pseudoinverse2(const CxMatrix2& m, double rank_tol) {
  switch (numeric_rank(m, rank_tol)) {
    case 0:
      return {};
    case 1: {
      double f2 = std::pow(frobenius_norm(m), 2);
      return Cx(1.0 / f2) * conj_transpose(m);
    }
    default:
      return (Cx(1.0) / m.det()) * m.adj();
  }
}

CxMatrix2 group_inverse2(const CxMatrix2& m, double rank_tol) {
  switch (numeric_rank(m, rank_tol)) {
    case 0:
      return {};
    case 1: {
      Cx t = m.trace();
      if (std::abs(t) <= rank_tol * frobenius_norm(m))
        throw Error(ErrorKind::singular, "nilpotent rank-1 matrix has no group inverse");
      return (Cx(1.0) / (t * t)) * m;
    }
    default:
      return (Cx(1.0) / m.det()) * m.adj();
  }
}

double penrose_residual(const CxMatrix2& a, const CxMatrix2& x) {
  double r1 = frobenius_norm(a * x * a - a);
  double r2 = frobenius_norm(x * a * x - x);
  CxMatrix2 ax = a * x;
  CxMatrix2 xa = x * a;
  double r3 = frobenius_norm(conj_transpose(ax) - ax);
  double r4 = frobenius_norm(conj_transpose(xa) - xa);
  return std::max({r1, r2, r3, r4});
}

}  // namespace ep
