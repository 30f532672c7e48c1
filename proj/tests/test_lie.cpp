#include <doctest.h>

#include "isolab/lie.hpp"
#include "support.hpp"

using namespace isolab;
using namespace isolab::lie;
using testing_support::Gen;
using testing_support::poly_from_roots;

namespace {

QMatrix antidiagonal(const std::vector<long>& d) {
  const std::size_t n = d.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Rational(d[i]);
  return m;
}

QMatrix diag(std::initializer_list<Rational> d) { return QMatrix::diagonal(std::vector<Rational>(d)); }

// Ȧ⊗I + I⊗Ȧ on ℂ⁴⊗ℂ⁴ applied to e_k⊗e_l − e_l⊗e_k, read back in the
// e_i∧e_j coordinates (i<j). Independent of the wedge-based construction.
QMatrix d_iso3_via_tensor(const QMatrix& a) {
  const QMatrix id = QMatrix::identity(4);
  const QMatrix big = kronecker(a, id) + kronecker(id, a);
  const auto pairs = wedge_pairs(4);
  QMatrix out(6, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    auto [k, l] = pairs[c];
    std::vector<Rational> v(16, Rational(0));
    v[4 * k + l] = Rational(1);
    v[4 * l + k] = Rational(-1);
    for (std::size_t r = 0; r < 6; ++r) {
      auto [i, j] = pairs[r];
      Rational s(0);
      for (std::size_t t = 0; t < 16; ++t) s += big(4 * i + j, t) * v[t];
      out(r, c) = s;
    }
  }
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

} // namespace

TEST_CASE("fixed quadratic forms") {
  CHECK(q4().gram == antidiagonal({1, -1, -1, 1}));
  CHECK(q6().gram == antidiagonal({1, -1, 1, 1, -1, 1}));
  CHECK(determinant(q6().gram) == Rational(-1));
  CHECK(determinant(q4().gram) == Rational(1));
}

TEST_CASE("group isogenies on examples") {
  const QMatrix i2 = QMatrix::identity(2);
  CHECK(iso2_group(i2, i2) == QMatrix::identity(4));
  CHECK(iso2_group(-i2, -i2) == QMatrix::identity(4));
  QMatrix x = iso2_group(diag({Rational(2), Rational(1, 2)}), i2);
  CHECK(x == diag({Rational(2), Rational(2), Rational(1, 2), Rational(1, 2)}));
  CHECK(preserves_form(x, q4().gram));

  CHECK(iso3_group(QMatrix::identity(4)) == QMatrix::identity(6));
  CHECK(iso3_group(-QMatrix::identity(4)) == QMatrix::identity(6));
  CHECK(iso3_group(diag({Rational(1), Rational(-1), Rational(2), Rational(-1, 2)})) ==
        diag({Rational(-1), Rational(2), Rational(-1, 2), Rational(-2), Rational(1, 2), Rational(-1)}));

  CHECK_THROWS_AS(iso2_group(diag({Rational(2), Rational(1)}), i2), ValidationError);
  CHECK_THROWS_AS(iso3_group(QMatrix::identity(3)), ValidationError);
  CHECK_THROWS_AS(iso3_group(2 * QMatrix::identity(4)), ValidationError);
}

TEST_CASE("group isogenies preserve forms and compose") {
  Gen g(31);
  for (int i = 0; i < 30; ++i) {
    QMatrix a1 = g.special_linear(2), a2 = g.special_linear(2);
    QMatrix b1 = g.special_linear(2), b2 = g.special_linear(2);
    QMatrix x = iso2_group(a1, a2);
    CHECK(preserves_form(x, q4().gram));
    CHECK(determinant(x).is_one());
    CHECK(iso2_group(a1 * b1, a2 * b2) == x * iso2_group(b1, b2));
    CHECK(iso2_group(-a1, -a2) == x);

    QMatrix a = g.special_linear(4), b = g.special_linear(4);
    QMatrix y = iso3_group(a);
    CHECK(preserves_form(y, q6().gram));
    CHECK(determinant(y).is_one());
    CHECK(iso3_group(a * b) == y * iso3_group(b));
    CHECK(iso3_group(-a) == y);
  }
}

TEST_CASE("Lie algebra maps on examples") {
  QMatrix z2(2, 2);
  CHECK(d_iso2(diag({Rational(1), Rational(-1)}), diag({Rational(2), Rational(-2)})) ==
        diag({Rational(3), Rational(-1), Rational(1), Rational(-3)}));
  CHECK(d_iso2(z2, z2).is_zero());
  CHECK(d_iso3(diag({Rational(1), Rational(-1), Rational(2), Rational(-2)})) ==
        diag({Rational(0), Rational(3), Rational(-1), Rational(1), Rational(-3), Rational(0)}));
  CHECK(d_iso3(QMatrix(4, 4)).is_zero());
  CHECK_THROWS_AS(d_iso2(QMatrix::identity(2), z2), ValidationError);
  CHECK_THROWS_AS(d_iso3(QMatrix::identity(4)), ValidationError);
}

TEST_CASE("Lie algebra maps land in the orthogonal algebras") {
  Gen g(32);
  for (int i = 0; i < 30; ++i) {
    QMatrix a1 = g.traceless(2), a2 = g.traceless(2);
    QMatrix x = d_iso2(a1, a2);
    CHECK(is_skew_for(x, q4().gram));
    CHECK(x.trace().is_zero());
    CHECK(LieElement{x, Algebra::SO4}.is_member());

    QMatrix a = g.traceless(4), b = g.traceless(4);
    QMatrix y = d_iso3(a);
    CHECK(is_skew_for(y, q6().gram));
    CHECK(LieElement{y, Algebra::SO6}.is_member());
    CHECK(y == d_iso3_via_tensor(a));
    CHECK(d_iso3(commutator(a, b)) == commutator(y, d_iso3(b)));
  }
}

TEST_CASE("eigenvalues add under the Lie algebra maps") {
  Gen g(33);
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> l;
    Rational sum(0);
    for (int k = 0; k < 3; ++k) {
      l.push_back(g.rational());
      sum += l.back();
    }
    l.push_back(-sum);
    // conjugate a diagonal matrix so the check is not trivially diagonal
    QMatrix p = g.special_linear(4);
    QMatrix a = p * QMatrix::diagonal(l) * inverse(p);
    std::vector<Rational> pair_sums;
    for (std::size_t s = 0; s < 4; ++s)
      for (std::size_t t = s + 1; t < 4; ++t) pair_sums.push_back(l[s] + l[t]);
    CHECK(char_poly(d_iso3(a)) == poly_from_roots(pair_sums));
  }
}

TEST_CASE("alpha block") {
  CHECK(alpha_block(diag({Rational(1), Rational(1), Rational(-1), Rational(-1)})) ==
        QMatrix{{0, 0, 2}, {0, 0, 0}, {0, 0, 0}});
  CHECK(alpha_block(QMatrix(4, 4)).is_zero());
  QMatrix asym(4, 4);
  asym(0, 1) = Rational(1);
  CHECK_THROWS_AS(alpha_block(asym), ValidationError);
  CHECK_THROWS_AS(alpha_block(QMatrix::identity(4)), ValidationError);
}

TEST_CASE("split basis puts the forms in signature form") {
  const QMatrix p6 = split_basis_so33();
  CHECK(p6.transpose() * q6().gram * p6 ==
        diag({Rational(2), Rational(2), Rational(2), Rational(-2), Rational(-2), Rational(-2)}));
  const QMatrix p4 = split_basis_so22();
  CHECK(p4.transpose() * q4().gram * p4 == diag({Rational(2), Rational(2), Rational(-2), Rational(-2)}));
}

TEST_CASE("split-basis conjugate is off-diagonal with alpha and its transpose") {
  Gen g(34);
  for (int i = 0; i < 30; ++i) {
    QMatrix a = g.symmetric_traceless(4);
    QMatrix al = alpha_block(a);
    QMatrix x = to_split_basis(d_iso3(a));
    CHECK(x.block(0, 0, 3, 3).is_zero());
    CHECK(x.block(3, 3, 3, 3).is_zero());
    CHECK(x.block(0, 3, 3, 3) == al);
    CHECK(x.block(3, 0, 3, 3) == al.transpose());
    Rational pf = pfaffian(q6().gram * d_iso3(a));
    Rational da = determinant(al);
    CHECK(pf * pf == da * da);
  }
}

TEST_CASE("Hodge star for the standard form") {
  HodgeSplit h = hodge_split({QMatrix::identity(4), Orientation::Positive}, Orientation::Positive);
  std::vector<Rational> e12(6, Rational(0)), e34(6, Rational(0));
  e12[0] = Rational(1);
  e34[5] = Rational(1);
  QMatrix col = from_columns(std::vector<std::vector<Rational>>{e12});
  CHECK(h.star * col == from_columns(std::vector<std::vector<Rational>>{e34}));
  std::vector<std::vector<Rational>> self_dual{
      {1, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, -1, 0},
      {0, 0, 1, 1, 0, 0},
  };
  CHECK(h.plus_basis == self_dual);
  CHECK(h.q_plus.gram == diag({Rational(2), Rational(2), Rational(2)}));
  CHECK(h.q_minus.gram == diag({Rational(-2), Rational(-2), Rational(-2)}));

  HodgeSplit n = hodge_split({QMatrix::identity(4), Orientation::Negative}, Orientation::Negative);
  CHECK(n.plus_basis == h.minus_basis);
  CHECK(n.minus_basis == h.plus_basis);
}

TEST_CASE("Hodge star on random oriented forms") {
  Gen g(35);
  int checked = 0;
  while (checked < 20) {
    QMatrix b = g.qmatrix(4, 4);
    if (determinant(b).is_zero()) continue;
    QuadraticForm q{b.transpose() * b, Orientation::Positive};
    for (Orientation o : {Orientation::Positive, Orientation::Negative}) {
      HodgeSplit h = hodge_split(q, o);
      CHECK(h.star * h.star == QMatrix::identity(6));
      CHECK(h.plus_basis.size() == 3);
      CHECK(h.minus_basis.size() == 3);
      CHECK_FALSE(determinant(h.q_plus.gram).is_zero());
      CHECK_FALSE(determinant(h.q_minus.gram).is_zero());
    }
    ++checked;
  }
  CHECK_THROWS_AS(hodge_split({diag({Rational(2), Rational(1), Rational(1), Rational(1)}), Orientation::Positive},
                              Orientation::Positive),
                  ValidationError);
  CHECK_THROWS_AS(hodge_split({QMatrix(4, 4), Orientation::Positive}, Orientation::Positive), ValidationError);
}

TEST_CASE("block Higgs field in signature (3,3)") {
  Gen g(36);
  for (int i = 0; i < 10; ++i) {
    ZMatrix a = g.symmetric_traceless_z(4, 2);
    HiggsBlockField f = build_block_higgs_so33(a);
    CHECK(f.alpha() == alpha_block(a));
    CHECK(f.diagonal_blocks_zero());
    CHECK(f.is_block_antisymmetric());
    CHECK(char_poly(f.phi) == char_poly(d_iso3(a)));
  }
  HiggsBlockField zero = build_block_higgs_so33(ZMatrix(4, 4));
  CHECK(zero.phi.is_zero());
}
