#include <cmath>
#include <random>

#include "doctest.h"
#include "euler_pencil/euler_pencil.hpp"

using namespace ep;

namespace {

Rational rnd(std::mt19937_64& rng, int span = 7) {
  std::uniform_int_distribution<long> n(-span, span), d(1, 4);
  return Rational(n(rng), d(rng));
}

Pencil2 random_pencil(std::mt19937_64& rng) {
  Rational E = rnd(rng);
  if (E.is_zero()) E = 1;
  return pencil_from_tdd(rnd(rng), rnd(rng), rnd(rng), E);
}

}  // namespace

TEST_CASE("pencil_from_tdd") {
  auto c = pencil_from_tdd(2, 0, 2, 1);
  CHECK(c.a == Rational(1));
  CHECK(c.d == Rational(1));
  CHECK(c.b_sq == Rational(1));
  CHECK(c.mu() == Rational(-1));
  auto x = pencil_from_tdd(2, 2, Rational(-5, 4), 1);
  CHECK(x.a == Rational(2));
  CHECK(x.d == Rational(0));
  CHECK(x.b_sq == Rational(-5, 4));
  CHECK(x.mu() == Rational(5, 4));
  CHECK(x.complex_coupling());
  auto z = pencil_from_tdd(0, 0, 0, 1);
  CHECK(z.a.is_zero());
  CHECK(z.d.is_zero());
  CHECK(z.b_sq.is_zero());
}

TEST_CASE("parameter table columns A and mu are consistent with the derived mu") {
  struct Row { const char* tau; const char* delta; const char* Delta; double A; double mu; };
  const Row rows[] = {{"-9.0", "-1.0", "20.35", -0.39, -0.35}, {"2", "0", "2", -4, -1},
                      {"-2.04", "-2.28", "1.05", -0.04, -1.31}, {"-2.67", "-7.33", "-7.41", 36.75, -4.24},
                      {"2", "2", "-1.25", 9.0, 1.25},           {"2", "2", "-1.05", 8.2, 1.05},
                      {"3.0", "4.0", "2.50", -1.01, -4.25}};
  for (const auto& r : rows) {
    Pencil2 p = pencil_from_params({Rational::parse(r.tau), Rational::parse(r.delta), Rational::parse(r.Delta)});
    double A = (p.tau() * p.tau() - Rational(4) * p.Delta()).to_double();
    CHECK(std::abs(A - r.A) <= 0.06);
    CHECK(std::abs(p.mu().to_double() - r.mu) <= 0.011);
  }
}

TEST_CASE("spectral_poly") {
  RatLaurent expected;
  expected.add_term(1, 6, 0);
  expected.add_term(-2, 3, 1);
  expected.add_term(-1, 2, 0);
  expected.add_term(2, 0, 2);
  CHECK(spectral_poly(pencil_from_tdd(2, 0, 2)) == expected);

  RatLaurent zco;
  zco.add_term(1, 6, 0);
  zco.add_term(-1, 2, 0);
  zco.add_term(-2, 1, 1);
  CHECK(spectral_poly(zco_pencil(1)) == zco);

  RatLaurent free;
  free.add_term(1, 6, 0);
  free.add_term(-1, 2, 0);
  CHECK(spectral_poly(pencil_from_tdd(0, 0, 0)) == free);
}

TEST_CASE("adjugate columns") {
  auto z = adjugate_columns(zco_pencil(1));
  QuadLaurent top = QuadLaurent::u(2) + QuadLaurent(1) + QuadLaurent::monomial(QuadExt(1), -1, 1);
  CHECK(z.phi1[0] == top);
  CHECK(z.phi1[1] == QuadLaurent::monomial(QuadExt(-1), -1, 1));

  auto f = adjugate_columns(pencil_from_tdd(0, 0, 0));
  CHECK(f.phi1[0] == QuadLaurent::u(2) + QuadLaurent(1));
  CHECK(f.phi1[1].is_zero());

  auto c = adjugate_columns(pencil_from_tdd(2, 0, 2));
  for (const auto* col : {&c.phi1, &c.phi2})
    for (const auto& e : *col) {
      CHECK(e.min_u() >= -1);
      CHECK(e.max_u() <= 2);
      CHECK(e.max_lambda() <= 1);
    }
}

TEST_CASE("adj(A) A = (P/u^2) I for random pencils") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    Pencil2 p = random_pencil(rng);
    auto A = pencil_matrix(p);
    auto prod = A.adj() * A;
    QuadLaurent det;
    RatLaurent P = spectral_poly(p);
    for (const auto& [k, c] : P.terms()) det.add_term(QuadExt(c), k.first - 2, k.second);
    CHECK(prod == Matrix2<QuadLaurent>::scalar(det));
  }
}

TEST_CASE("resolvent trace and determinant") {
  // canonical p = 3: w = 2/sqrt(3), lambda = u^3
  double w = 2.0 / std::sqrt(3.0);
  Cx u(std::sqrt(w), 0.0);
  auto td = resolvent_tr_det(pencil_from_tdd(2, 0, 2), u, u * u * u);
  CHECK(std::abs(td.tr) < 1e-12);
  CHECK(std::abs(td.det - 3.0) < 1e-12);

  auto b5 = canonical_basepoint(-4, 5, Branch::plus);
  auto t5 = resolvent_tr_det(pencil_from_tdd(2, 0, 2), b5.u, b5.lambda);
  CHECK(std::abs(t5.tr + 4.0) < 1e-12);
  CHECK(std::abs(t5.det - 5.0) < 1e-12);

  auto ex = resolvent_tr_det(pencil_from_tdd(0, 0, 0), QuadExt(2), QuadExt(0));
  CHECK(ex.tr == QuadExt(Rational(8, 15)));
  CHECK(ex.det == QuadExt(Rational(1, 15)));

  CHECK_THROWS_AS(resolvent_tr_det(pencil_from_tdd(0, 0, 0), QuadExt(1), QuadExt(0)), Error);
}

TEST_CASE("closed-form determinant matches direct inversion") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> U(-2, 2);
  int done = 0;
  while (done < 120) {
    Pencil2 p = random_pencil(rng);
    Cx u(U(rng), U(rng)), l(U(rng), U(rng));
    if (std::abs(u) < 0.2) continue;
    TrDet<Cx> a, b;
    try {
      a = resolvent_tr_det(p, u, l);
      b = resolvent_tr_det_direct(p, u, l);
    } catch (const Error&) {
      continue;
    }
    if (std::abs(a.P) < 1e-3) continue;
    CHECK(std::abs(a.det - b.det) <= 1e-12 * std::max(1.0, std::abs(b.det)));
    CHECK(std::abs(a.tr - b.tr) <= 1e-12 * std::max(1.0, std::abs(b.tr)));
    ++done;
  }
}

TEST_CASE("eta-Gram") {
  for (int E : {1, 2, 3}) {
    auto g = eta_gram(zco_pencil(E));
    CHECK(g.is_diagonal());
    CHECK(g.is_lambda_independent());
    CHECK(g.at_zero(0, 0) == QuadExt(E * E));
    CHECK(g.at_zero(1, 1) == QuadExt(-E * E));
    CHECK(lambda_evenness_check(g));
    CHECK(pontryagin_index(g) == 1);
  }
  auto scaled = eta_gram(zco_pencil(1), Rational(1, 2));
  CHECK(scaled.at_zero(0, 0) == QuadExt(Rational(1, 2)));

  auto g1 = eta_gram(pencil_from_tdd(1, 1, 1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 1; k <= 3; k += 2) CHECK(g1.coeff(i, j, k).is_zero());
}

TEST_CASE("eta-Gram properties over random pencils") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    Pencil2 p = random_pencil(rng);
    auto g = eta_gram(p);
    CHECK(lambda_evenness_check(g));
    CHECK(g.is_diagonal());
    CHECK(g.lambda_degree() <= 2);
    CHECK(g.at_zero(0, 0) == QuadExt(p.E2 * p.E2));
    CHECK(g.at_zero(1, 1) == QuadExt(-p.E1 * p.E1));
    CHECK(pontryagin_index(g) == 1);
  }
}

TEST_CASE("lambda evenness and Pontryagin on hand-built grams") {
  EtaGram odd;
  odd.entries[0][0] = {{0, QuadExt(1)}, {1, QuadExt(1)}};
  odd.entries[1][1] = {{0, QuadExt(-1)}};
  CHECK_FALSE(lambda_evenness_check(odd));

  EtaGram toy;
  toy.entries[0][0] = {{0, QuadExt(4)}};
  toy.entries[1][1] = {{0, QuadExt(-4)}};
  CHECK(pontryagin_index(toy) == 1);

  EtaGram pos;
  pos.entries[0][0] = {{0, QuadExt(1)}};
  pos.entries[1][1] = {{0, QuadExt(1)}};
  CHECK(pontryagin_index(pos) == 0);

  EtaGram degenerate;
  degenerate.entries[0][0] = {{0, QuadExt(1)}};
  CHECK_THROWS_AS(pontryagin_index(degenerate), Error);
}

TEST_CASE("tensor products of diagonal eta-Grams stay diagonal") {
  std::mt19937_64 rng(43);
  std::vector<std::vector<Rational>> acc{{Rational(1)}};
  for (int k = 1; k <= 4; ++k) {
    auto g = eta_gram(random_pencil(rng));
    std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2, Rational(0)));
    m[0][0] = g.at_zero(0, 0).x();
    m[1][1] = g.at_zero(1, 1).x();
    std::size_t n = acc.size();
    std::vector<std::vector<Rational>> next(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) next[i * 2 + a][j * 2 + b] = acc[i][j] * m[a][b];
    acc = next;
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < acc.size(); ++j)
        if (i != j) CHECK(acc[i][j].is_zero());
  }
}

TEST_CASE("j-formula") {
  CHECK(j_formula(2, 0, 2) == Rational(1728));
  CHECK(j_formula_tau_sq(Rational(45, 11), 1, 1) == Rational(1728));
  CHECK(pencil_from_tdd(0, 1, 1).mu() == Rational(-5, 4));
  CHECK((Rational(45, 11) - 1) / Rational(4) - 1 == Rational(-5, 22));
  QuadExt D0 = j0_locus_Delta(-9, -1);
  CHECK(D0.sign() > 0);
  CHECK((QuadExt(12) * D0 * D0 - QuadExt(240) * D0 - QuadExt(81)).is_zero());
  CHECK(j_formula_tau_sq(QuadExt(81), QuadExt(-1), D0).is_zero());
  CHECK_THROWS_AS(j_formula(2, 0, 0), Error);
  CHECK_THROWS_AS(j_formula(2, 0, 1), Error);
}

TEST_CASE("j = 1728 on the delta = 0 and Q = 0 components") {
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 20) {
    Rational t2 = rnd(rng), D = rnd(rng);
    Rational j;
    try {
      j = j_formula_tau_sq(t2, 0, D);
    } catch (const Error&) {
      continue;
    }
    CHECK(j == Rational(1728));
    ++done;
  }
  // Q is linear in tau^2 for fixed (delta, Delta): tau^2 = (9 d^2 D + 36 D^2)/(2 d^2 + 9 D).
  done = 0;
  while (done < 20) {
    Rational d = rnd(rng), D = rnd(rng);
    Rational den = Rational(2) * d * d + Rational(9) * D;
    if (den.is_zero()) continue;
    Rational t2 = (Rational(9) * d * d * D + Rational(36) * D * D) / den;
    CHECK(j1728_locus_Q(t2, d, D).is_zero());
    Rational j;
    try {
      j = j_formula_tau_sq(t2, d, D);
    } catch (const Error&) {
      continue;
    }
    CHECK(j == Rational(1728));
    ++done;
  }
}

TEST_CASE("j1728_locus_Q") {
  CHECK(j1728_locus_Q(Rational(45, 11), 1, 1) == Rational(0));
  CHECK(j1728_locus_Q(4, 0, 2) == Rational(72));
  CHECK(j1728_locus_Q(0, 1, 1) == Rational(45));
}

TEST_CASE("monomial_gram8") {
  auto g = monomial_gram8(1, -1);
  CHECK(g.rank == 4);
  CHECK(g.eigenvalues == std::vector<Rational>{-2, -2, 2, 2});
  CHECK(g.charpoly == Poly{16, 0, -8, 0, 1});
  for (int k : {2, 3, 6, 7})
    for (int l = 0; l < 8; ++l) CHECK(g.gram[static_cast<size_t>(k)][static_cast<size_t>(l)].is_zero());
  CHECK(g.gram[0][4] == Rational(-2));
  CHECK(g.gram[1][5] == Rational(2));

  auto h = monomial_gram8(1, 1);
  CHECK(h.rank == 4);
  CHECK(h.eigenvalues == std::vector<Rational>{-2, -2, 2, 2});
  CHECK_THROWS_AS(monomial_gram8(2, 1), Error);
}
