#pragma once

#include <array>
#include <map>
#include <vector>

#include "euler_pencil/catalogue.hpp"
#include "euler_pencil/laurent.hpp"
#include "euler_pencil/matrix2.hpp"
#include "euler_pencil/poly.hpp"
#include "euler_pencil/quadext.hpp"
#include "euler_pencil/rational.hpp"

namespace ep {

/// A(u, lambda) = u^2 I - diag(E1, E2) - (lambda/u) ((a, b), (-b, d)) with J = diag(1, -1).
struct Pencil2 {
  Rational E1{1}, E2{-1};
  Rational a, d;
  Rational b_sq;  ///< may be negative (complex coupling)

  Rational tau() const { return a + d; }
  Rational delta() const { return a - d; }
  Rational Delta() const { return a * d + b_sq; }
  /// (tau^2 - delta^2)/4 - Delta, which equals -b^2.
  Rational mu() const { return (tau() * tau() - delta() * delta()) / Rational(4) - Delta(); }
  QuadExt b() const { return QuadExt::sqrt_of(b_sq); }
  bool complex_coupling() const { return b_sq.sign() < 0; }
  PencilParams params() const { return {tau(), delta(), Delta()}; }
};

Pencil2 pencil_from_tdd(const Rational& tau, const Rational& delta, const Rational& Delta, const Rational& E = 1);
Pencil2 pencil_from_params(const PencilParams& p, const Rational& E = 1);
/// a = 1, b = 1, d = -1 with background diag(E, -E).
Pencil2 zco_pencil(const Rational& E = 1);

/// u^6 - (E1+E2)u^4 + E1E2 u^2 - lambda[(a+d)u^3 - (aE2+dE1)u] + lambda^2(ad + b^2).
RatLaurent spectral_poly(const Pencil2& pencil);

/// Symbolic pencil matrix, entries in Q(b)[u, 1/u, lambda].
Matrix2<QuadLaurent> pencil_matrix(const Pencil2& pencil);
/// Numeric pencil matrix at (u, lambda).
CxMatrix2 pencil_matrix(const Pencil2& pencil, const Cx& u, const Cx& lambda);

struct AdjugateColumns {
  std::array<QuadLaurent, 2> phi1;
  std::array<QuadLaurent, 2> phi2;
};

/// Columns of the cofactor adjugate of the pencil matrix.
AdjugateColumns adjugate_columns(const Pencil2& pencil);

template <class T>
struct TrDet {
  T tr;
  T det;
  T P;
};

/// tr R = u(2u^3 - tau lambda)/P and det R = u^2/P for the background diag(E, -E).
TrDet<Cx> resolvent_tr_det(const Pencil2& pencil, const Cx& u, const Cx& lambda, double on_shell_tol = 1e-14);
TrDet<QuadExt> resolvent_tr_det(const Pencil2& pencil, const QuadExt& u, const QuadExt& lambda);
/// Trace and determinant of A^{-1} by direct 2x2 inversion.
TrDet<Cx> resolvent_tr_det_direct(const Pencil2& pencil, const Cx& u, const Cx& lambda);

using LambdaPoly = std::map<int, QuadExt>;

struct EtaGram {
  std::array<std::array<LambdaPoly, 2>, 2> entries;
  Rational c{1};

  QuadExt coeff(int i, int j, int lambda_exp) const;
  QuadExt at_zero(int i, int j) const { return coeff(i, j, 0); }
  int lambda_degree() const;
  bool is_diagonal() const;
  bool is_lambda_independent() const;
};

/// G_ij = c * [u^0 coefficient of phi_i(-u)^T J phi_j(u)].
EtaGram eta_gram(const Pencil2& pencil, const Rational& c = 1);
bool lambda_evenness_check(const EtaGram& gram);
/// Number of strictly negative diagonal entries of G at lambda = 0.
int pontryagin_index(const EtaGram& gram);

/// j-invariant of the pencil moduli with mu = (tau^2 - delta^2)/4 - Delta.
Rational j_formula(const Rational& tau, const Rational& delta, const Rational& Delta);
Rational j_formula_tau_sq(const Rational& tau_sq, const Rational& delta, const Rational& Delta);
QuadExt j_formula_tau_sq(const QuadExt& tau_sq, const QuadExt& delta, const QuadExt& Delta);

Rational j1728_locus_Q(const Rational& tau_sq, const Rational& delta, const Rational& Delta);

/// Positive root of 12 Delta^2 - 3(tau^2 - delta^2) Delta - tau^2 delta^2 = 0, where j vanishes.
QuadExt j0_locus_Delta(const Rational& tau, const Rational& delta);

struct MonomialGram8 {
  std::array<std::array<Rational, 8>, 8> gram;
  int rank = 0;
  std::array<std::array<Rational, 4>, 4> reduced;
  Poly charpoly;
  std::vector<Rational> eigenvalues;  ///< with multiplicity, ascending
};

/// Pairing of e_i u^n with e_j u^m on the basis (e1/u, e2/u, e1, e2, e1 u, e2 u, e1 u^2, e2 u^2).
MonomialGram8 monomial_gram8(int eps1, int eps2);

/// Exact rank by Gaussian elimination.
template <std::size_t N>
int exact_rank(std::array<std::array<Rational, N>, N> m);
/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
Poly charpoly(const std::vector<std::vector<Rational>>& m);
/// Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace ep
