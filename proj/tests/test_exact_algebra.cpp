#include <doctest.h>

#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"
#include "isolab/rational.hpp"
#include "isolab/resultant.hpp"
#include "support.hpp"

using namespace isolab;
using testing_support::Gen;
using testing_support::leibniz_det;
using testing_support::poly_from_roots;
using testing_support::zpoly;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse(" 0/5 ").is_zero());
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("abc"), ValidationError);
  CHECK_THROWS_AS(Rational::parse(""), ValidationError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ValidationError);
}

TEST_CASE("rational square roots") {
  CHECK(sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK(is_perfect_square(Rational(0)));
  CHECK_FALSE(is_perfect_square(Rational(2)));
  CHECK_FALSE(is_perfect_square(Rational(-4)));
  CHECK_THROWS_AS(sqrt_exact(Rational(2)), InexactError);
}

TEST_CASE("polynomial arithmetic") {
  ZPoly p = zpoly({-1, 0, 1});
  ZPoly q = zpoly({1, 1});
  CHECK(divide_exact(p, q) == zpoly({-1, 1}));
  CHECK_THROWS_AS(divide_exact(p, zpoly({2, 1})), InexactError);
  auto [quo, rem] = divmod(zpoly({1, 0, 1}), q);
  CHECK(quo == zpoly({-1, 1}));
  CHECK(rem == zpoly({2}));
  CHECK(ZPoly().degree() == -1);
  CHECK(p.derivative() == zpoly({0, 2}));
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK(compose(p, q) == zpoly({0, 2, 1}));
  CHECK(zpoly({1, 2, 3}).reflect() == zpoly({1, -2, 3}));
  CHECK(gcd(zpoly({-1, 0, 1}), zpoly({1, 2, 1})) == zpoly({1, 1}));
  CHECK(gcd(ZPoly(), ZPoly()).is_zero());
}

TEST_CASE("polynomial square roots") {
  CHECK(sqrt_exact(zpoly({1, 2, 1})) == zpoly({1, 1}));
  CHECK_THROWS_AS(sqrt_exact(zpoly({1, 3, 1})), InexactError);
  CHECK_THROWS_AS(sqrt_exact(zpoly({0, 1})), InexactError);

  Gen g(11);
  for (int i = 0; i < 40; ++i) {
    ZPoly s = g.zpoly(4);
    if (s.is_zero()) continue;
    if (s.leading().sign() < 0) s = -s;
    CHECK(sqrt_exact(s * s) == s);
  }
}

TEST_CASE("interpolation recovers the polynomial") {
  Gen g(5);
  for (int i = 0; i < 30; ++i) {
    ZPoly p = g.zpoly(6);
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= 6; ++k) {
      xs.emplace_back(k - 3);
      ys.push_back(p.eval(xs.back()));
    }
    CHECK(interpolate(xs, ys) == p);
  }
}

TEST_CASE("resultant examples") {
  // roots of x^2 - 1 are ±1; g(1) g(-1) = (-3)(-3)
  CHECK(resultant(zpoly({-1, 0, 1}), zpoly({-4, 0, 1})) == Rational(9));
  CHECK(resultant(zpoly({-1, 0, 1}), zpoly({-1, 1})) == Rational(0));
  CHECK(discriminant(zpoly({-1, 0, 1})) == Rational(4));
  CHECK_THROWS_AS(resultant(ZPoly(), zpoly({1, 1})), ValidationError);
}

TEST_CASE("resultant matches the product over roots") {
  Gen g(21);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> roots;
    int n = static_cast<int>(g.integer(1, 4));
    for (int k = 0; k < n; ++k) roots.push_back(g.rational());
    ZPoly f = poly_from_roots(roots);
    ZPoly h = g.zpoly(4);
    if (h.is_zero()) continue;
    Rational expected(1);
    for (const auto& r : roots) expected *= h.eval(r);
    CHECK(resultant(f, h) == expected);
  }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
  Gen g(3);
  for (int i = 0; i < 40; ++i) {
    ZPoly common = zpoly({0, 1}) - ZPoly(g.rational());
    ZPoly u = g.zpoly(3) + ZPoly::monomial(Rational(1), 4);
    ZPoly v = g.zpoly(2) + ZPoly::monomial(Rational(1), 3);
    CHECK(resultant(common * u, common * v).is_zero());
    ZPoly a = g.zpoly(3) + ZPoly::monomial(Rational(1), 4);
    ZPoly b = g.zpoly(3) + ZPoly::monomial(Rational(1), 4);
    CHECK(resultant(a, b).is_zero() == (gcd(a, b).degree() > 0));
  }
}

TEST_CASE("quadratic discriminant") {
  Gen g(8);
  for (int i = 0; i < 30; ++i) {
    Rational b = g.rational(), c = g.rational();
    ZPoly f(std::vector<Rational>{c, b, Rational(1)});
    CHECK(discriminant(f) == b * b - Rational(4) * c);
  }
}

TEST_CASE("resultant over nested rings") {
  // Res_η(η^2 - z, η - z) = z^2 - z
  CurvePoly f = testing_support::eta_poly({-zpoly({0, 1}), ZPoly(1)});
  CurvePoly h = testing_support::eta_poly({-zpoly({0, 1}), ZPoly(1)});
  (void)h;
  CurvePoly lin = testing_support::eta_poly({-zpoly({0, 1}), ZPoly(1)});
  CurvePoly quad = testing_support::eta_poly({-zpoly({0, 1}), ZPoly(0), ZPoly(1)});
  CHECK(resultant(quad, lin) == zpoly({0, -1, 1}));
  CHECK(resultant(f, lin).is_zero());
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  Gen g(1);
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < 6; ++i) {
      QMatrix a = g.qmatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      CHECK(determinant(a) == leibniz_det(a));
    }
  QMatrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 5}};
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("fraction-free determinant over polynomials") {
  Gen g(2);
  for (int i = 0; i < 10; ++i) {
    ZMatrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = g.zpoly(2);
    CHECK(determinant(a) == leibniz_det(a));
  }
  ZMatrix zero_pivot{{ZPoly(0), ZPoly(1)}, {ZPoly(1), zpoly({0, 1})}};
  CHECK(determinant(zero_pivot) == ZPoly(-1));
}

TEST_CASE("characteristic polynomial") {
  QMatrix d = QMatrix::diagonal({Rational(3), Rational(-1), Rational(1), Rational(-3)});
  CHECK(char_poly(d) == poly_from_roots({Rational(3), Rational(-1), Rational(1), Rational(-3)}));
  QMatrix jordan{{2, 1}, {0, 2}};
  CHECK(char_poly(jordan) == zpoly({4, -4, 1}));

  Gen g(4);
  for (int n = 1; n <= 6; ++n) {
    QMatrix a = g.qmatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    ZPoly p = char_poly(a);
    CHECK(p.degree() == n);
    CHECK(p.leading() == Rational(1));
    CHECK(eval_at_matrix(p, a).is_zero());
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(p.coeff(0) == sign * determinant(a));
    CHECK(p.coeff(static_cast<std::size_t>(n - 1)) == -a.trace());
  }
}

TEST_CASE("characteristic polynomial over ℚ[z] specializes") {
  Gen g(9);
  ZMatrix a(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) a(r, c) = g.zpoly(2);
  CurvePoly p = char_poly(a);
  for (int t = -2; t <= 2; ++t) {
    Rational at(t);
    QMatrix specialized = a.map([&](const ZPoly& e) { return e.eval(at); });
    ZPoly expected = char_poly(specialized);
    ZPoly got = p.map([&](const ZPoly& c) { return c.eval(at); });
    CHECK(got == expected);
  }
}

TEST_CASE("pfaffian") {
  CHECK(pfaffian(QMatrix{{0, 1}, {-1, 0}}) == Rational(1));
  // Pf = af - be + cd for entries a=12 b=13 c=14 d=23 e=24 f=34
  QMatrix a{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
  CHECK(pfaffian(a) == Rational(1 * 6 - 2 * 5 + 3 * 4));
  CHECK_THROWS_AS(pfaffian(QMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(pfaffian(QMatrix{{0, 1}, {1, 0}}), ValidationError);

  Gen g(6);
  for (std::size_t n : {2u, 4u, 6u, 8u})
    for (int i = 0; i < 5; ++i) {
      QMatrix m = g.antisymmetric(n);
      Rational pf = pfaffian(m);
      CHECK(pf * pf == determinant(m));
      QMatrix b = g.qmatrix(n, n);
      CHECK(pfaffian(b * m * b.transpose()) == determinant(b) * pf);
    }
}

TEST_CASE("kronecker product") {
  QMatrix a{{1, 2}, {3, 4}};
  QMatrix b{{0, 1}, {1, 0}};
  QMatrix expected{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
  CHECK(kronecker(a, b) == expected);
  Gen g(10);
  for (int i = 0; i < 10; ++i) {
    QMatrix a1 = g.qmatrix(2, 2), a2 = g.qmatrix(2, 2), b1 = g.qmatrix(2, 2), b2 = g.qmatrix(2, 2);
    CHECK(kronecker(a1, b1) * kronecker(a2, b2) == kronecker(a1 * a2, b1 * b2));
  }
}

TEST_CASE("exterior square") {
  CHECK(exterior_square(QMatrix::identity(4)) == QMatrix::identity(6));
  QMatrix d = QMatrix::diagonal({Rational(1), Rational(2), Rational(3), Rational(5)});
  CHECK(exterior_square(d) ==
        QMatrix::diagonal({Rational(2), Rational(3), Rational(5), Rational(6), Rational(10), Rational(15)}));
  CHECK_THROWS_AS(exterior_square(QMatrix::identity(3)), ValidationError);

  Gen g(12);
  for (int i = 0; i < 10; ++i) {
    QMatrix a = g.qmatrix(4, 4), b = g.qmatrix(4, 4);
    CHECK(exterior_square(a * b) == exterior_square(a) * exterior_square(b));
    Rational da = determinant(a);
    CHECK(determinant(exterior_square(a)) == da * da * da);
  }
}

TEST_CASE("linear algebra helpers") {
  QMatrix a{{1, 2}, {3, 4}};
  CHECK(a * inverse(a) == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(QMatrix{{1, 2}, {2, 4}}), ValidationError);
  QMatrix s{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(s) == 1);
  auto ns = null_space(s);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    QMatrix col = from_columns(std::vector<std::vector<Rational>>{v});
    CHECK((s * col).is_zero());
  }
  auto eb = echelon_basis({{Rational(2), Rational(4)}, {Rational(1), Rational(3)}});
  REQUIRE(eb.size() == 2);
  CHECK(eb[0] == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(eb[1] == std::vector<Rational>{Rational(0), Rational(1)});
}
