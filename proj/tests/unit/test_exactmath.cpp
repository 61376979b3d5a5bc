#include <random>

#include "doctest.h"
#include "euler_pencil/euler_pencil.hpp"

using namespace ep;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational normalisation and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("20.35") == Rational(407, 20));
  CHECK(Rational::parse("-9.0") == Rational(-9));
  CHECK(Rational::parse("-1.55") == Rational(-31, 20));
  CHECK(Rational::parse("35152/9") == Rational(35152, 9));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK_FALSE(Rational(2).sqrt_exact().has_value());
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("quadratic extension normal form") {
  QuadExt a(Rational(1), Rational(1), Rational(4));
  CHECK(a.is_rational());
  CHECK(a == QuadExt(3));
  QuadExt b(Rational(0), Rational(1, 50), Rational(2600));
  CHECK(b == QuadExt(Rational(0), Rational(1, 5), Rational(26)));
  QuadExt c(Rational(0), Rational(1), Rational(1, 3));
  CHECK(c == QuadExt(Rational(0), Rational(1, 3), Rational(3)));
  CHECK_THROWS_AS(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3), Error);
  CHECK((QuadExt::sqrt_of(2) + QuadExt(5)).d() == Rational(2));
  CHECK(QuadExt(Rational(1), Rational(-1), Rational(2)).sign() == -1);
  CHECK(QuadExt(Rational(2), Rational(-1), Rational(3)).sign() == 1);
  CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), Rational(-1)).sign(), Error);
}

TEST_CASE("quadratic extension is a field") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational d(std::uniform_int_distribution<long>(2, 40)(rng));
    if (d.sqrt_exact()) continue;
    QuadExt x(random_rational(rng), random_rational(rng), d);
    QuadExt y(random_rational(rng), random_rational(rng), d);
    CHECK((x * x.conj()) == QuadExt(x.norm()));
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x * (y + QuadExt(1)) == x * y + x);
  }
}

TEST_CASE("quad_roots") {
  auto [g1, g2] = quad_roots(1, -1, -1);
  CHECK(g1 == QuadExt(Rational(1, 2), Rational(1, 2), Rational(5)));
  CHECK(g2 == QuadExt(Rational(1, 2), Rational(-1, 2), Rational(5)));
  auto [z1, z2] = quad_roots(1, 0, 0);
  CHECK(z1.is_zero());
  CHECK(z2.is_zero());
  CHECK(z1.d() == Rational(0));
  auto [r1, r2] = quad_roots(25, 20, -22);
  CHECK(r1 == QuadExt(Rational(-2, 5), Rational(1, 5), Rational(26)));
  CHECK(r2 == QuadExt(Rational(-2, 5), Rational(-1, 5), Rational(26)));
  CHECK_THROWS_AS(quad_roots(0, 1, 1), Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational A = random_rational(rng), B = random_rational(rng), C = random_rational(rng);
    if (A.is_zero()) continue;
    auto [x1, x2] = quad_roots(A, B, C);
    CHECK((QuadExt(A) * x1 * x1 + QuadExt(B) * x1 + QuadExt(C)).is_zero());
    CHECK((QuadExt(A) * x2 * x2 + QuadExt(B) * x2 + QuadExt(C)).is_zero());
  }
}

TEST_CASE("residue_at_zero") {
  RatLaurent f;
  f.add_term(3, -1, 0);
  f.add_term(2, 0, 0);
  f.add_term(1, 2, 1);
  auto r = residue_at_zero(f);
  CHECK(r.size() == 1);
  CHECK(r.at(0) == Rational(3));

  RatLaurent g = RatLaurent::u(2) + RatLaurent(2);
  auto r2 = residue_at_zero(g * g * RatLaurent::u(-1));
  CHECK(r2.size() == 1);
  CHECK(r2.at(0) == Rational(4));

  CHECK(residue_at_zero(RatLaurent::monomial(1, -2, 1)).empty());
}

TEST_CASE("laurent algebra laws") {
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    RatLaurent p;
    for (int k = 0; k < 4; ++k)
      p.add_term(random_rational(rng), std::uniform_int_distribution<int>(-2, 3)(rng),
                 std::uniform_int_distribution<int>(0, 2)(rng));
    return p;
  };
  for (int i = 0; i < 200; ++i) {
    RatLaurent a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto lhs = residue_at_zero(a + b);
    auto ra = residue_at_zero(a), rb = residue_at_zero(b);
    for (int k = 0; k <= 4; ++k) {
      Rational sum(0);
      if (ra.count(k)) sum += ra.at(k);
      if (rb.count(k)) sum += rb.at(k);
      Rational got = lhs.count(k) ? lhs.at(k) : Rational(0);
      CHECK(got == sum);
    }
  }
}

TEST_CASE("poly_divrem") {
  Poly y3my{0, -1, 0, 1};
  auto d1 = poly_divrem(y3my, Poly{-1, 1});
  CHECK(d1.quotient == Poly{0, 1, 1});
  CHECK(d1.remainder.is_zero());
  auto d2 = poly_divrem(Poly{1, 0, 1}, Poly{0, 1});
  CHECK(d2.quotient == Poly{0, 1});
  CHECK(d2.remainder == Poly{1});
  Rational C0 = Rational(4) + Rational(4, 3);
  Poly q{C0, Rational(0), Rational(-4)};
  auto d3 = poly_divrem(Poly{0, 1} * q, q);
  CHECK(d3.quotient == Poly{0, 1});
  CHECK(d3.remainder.is_zero());
  CHECK_THROWS_AS(poly_divrem(Poly{1}, Poly()), Error);
}

TEST_CASE("adjugate identity over exact rings") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Matrix2<Rational> m{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
    CHECK(m.adj() * m == Matrix2<Rational>::scalar(m.det()));
  }
  Matrix2<QuadExt> q{QuadExt::sqrt_of(2), QuadExt(1), QuadExt(Rational(1), Rational(3), Rational(2)), QuadExt(-4)};
  CHECK(q.adj() * q == Matrix2<QuadExt>::scalar(q.det()));
}

TEST_CASE("pseudoinverse2") {
  auto I = CxMatrix2::identity();
  auto pI = pseudoinverse2(I);
  CHECK(frobenius_norm(pI - I) < 1e-15);
  CxMatrix2 d{2.0, 0.0, 0.0, 0.0};
  auto pd = pseudoinverse2(d);
  CHECK(std::abs(pd.e11 - 0.5) < 1e-15);
  CHECK(std::abs(pd.e22) < 1e-15);
  CHECK(frobenius_norm(pseudoinverse2(CxMatrix2{})) == 0.0);

  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0, 1);
  for (int i = 0; i < 200; ++i) {
    CxMatrix2 m{Cx(n(rng), n(rng)), Cx(n(rng), n(rng)), Cx(n(rng), n(rng)), Cx(n(rng), n(rng))};
    if (i % 2 == 0) m.e22 = m.e12 * m.e21 / m.e11;  // rank 1
    CHECK(penrose_residual(m, pseudoinverse2(m)) < 1e-12);
  }
}
