#include "isolab/spectral.hpp"

#include <algorithm>

#include "isolab/resultant.hpp"

namespace isolab::spectral {

namespace {

CurvePoly eta() { return CurvePoly::x(); }
CurvePoly lift_z(const ZPoly& p) { return CurvePoly(p); }
ZPoly zsign(Orientation o) { return ZPoly(Rational(lie::sign_of(o))); }

BranchLocus locus_of(const CurvePoly& curve) {
  BranchLocus b;
  b.discriminant = discriminant(curve);
  b.non_reduced = b.discriminant.is_zero();
  return b;
}

// P(η − x) as a polynomial in x with coefficients in ℚ[η].
Poly<ZPoly> shifted(const ZPoly& p) {
  const Poly<ZPoly> y(std::vector<ZPoly>{ZPoly::x(), ZPoly(-1)});
  Poly<ZPoly> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * y + Poly<ZPoly>(ZPoly(*it));
  return acc;
}

// ∏_{a<b}(η − λₐ − λ_b) for a quartic x⁴ + c₂x² + c₃x + c₄ over ℚ.
ZPoly pair_sum_sextic(const Rational& c2, const Rational& c3, const Rational& c4) {
  const ZPoly p4(std::vector<Rational>{c4, c3, c2, Rational(0), Rational(1)});
  const ZPoly full = resultant(lift<ZPoly>(p4), shifted(p4));
  const ZPoly diagonal = Rational(16) * compose(p4, ZPoly::monomial(Rational(1, 2), 1));
  return sqrt_exact(divide_exact(full, diagonal));
}

} // namespace

CurvePoly BaseSL4::quartic() const {
  return CurvePoly(std::vector<ZPoly>{a4, a3, a2, ZPoly(), ZPoly(1)});
}

CurvePoly BaseSO4::quartic() const {
  return CurvePoly(std::vector<ZPoly>{pf * pf, ZPoly(), b1, ZPoly(), ZPoly(1)});
}

CurvePoly BaseSO6::sextic() const {
  return CurvePoly(std::vector<ZPoly>{-(pf * pf), ZPoly(), b2, ZPoly(), b1, ZPoly(), ZPoly(1)});
}

BaseSO4 so4_base(const BaseSL2Pair& b, Orientation sign) {
  return {Rational(2) * (b.a1 + b.a2), zsign(sign) * (b.a1 - b.a2), sign};
}

BaseSO6 so6_base(const BaseSL4& b, Orientation sign) {
  return {Rational(2) * b.a2, b.a2 * b.a2 - Rational(4) * b.a4, zsign(sign) * b.a3, sign};
}

CurvePoly so4_oracle(const BaseSL2Pair& b) {
  const Poly<CurvePoly> f(std::vector<CurvePoly>{lift_z(b.a1), CurvePoly(), CurvePoly(1)});
  const Poly<CurvePoly> g(std::vector<CurvePoly>{eta() * eta() + lift_z(b.a2), CurvePoly(-2) * eta(), CurvePoly(1)});
  return resultant(f, g);
}

CurvePoly so6_oracle(const BaseSL4& b) {
  const int d = std::max({b.a2.degree(), b.a3.degree(), b.a4.degree(), 0});
  // the η^{6−k} coefficient is weighted homogeneous of weight k ≤ 6 in
  // (a₂, a₃, a₄) of weights (2, 3, 4), hence of z-degree at most 3d
  const int points = 3 * d + 1;
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> ys(7);
  try {
    for (int t = 0; t < points; ++t) {
      const Rational z0(t);
      xs.push_back(z0);
      const ZPoly s = pair_sum_sextic(b.a2.eval(z0), b.a3.eval(z0), b.a4.eval(z0));
      if (s.degree() != 6) throw InternalError("so6_oracle: specialised sextic has wrong degree");
      for (std::size_t k = 0; k < 7; ++k) ys[k].push_back(s.coeff(k));
    }
  } catch (const InexactError& e) {
    throw InternalError(std::string("so6_oracle: ") + e.what());
  }
  std::vector<ZPoly> coeffs;
  for (std::size_t k = 0; k < 7; ++k) coeffs.push_back(interpolate(xs, ys[k]));
  return CurvePoly(std::move(coeffs));
}

ZMatrix companion(const CurvePoly& monic) {
  if (monic.degree() < 1 || !monic.leading().is_one())
    throw ValidationError("companion: expected a monic polynomial of positive degree");
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  ZMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = ZPoly(1);
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
  return c;
}

BranchLocus branch_locus_sl2(const ZPoly& a) {
  return locus_of(CurvePoly(std::vector<ZPoly>{a, ZPoly(), ZPoly(1)}));
}

BranchLocus branch_locus(const BaseSL2Pair& b) {
  BranchLocus l1 = branch_locus_sl2(b.a1), l2 = branch_locus_sl2(b.a2);
  BranchLocus out;
  out.discriminant = l1.discriminant * l2.discriminant;
  out.non_reduced = out.discriminant.is_zero();
  return out;
}

BranchLocus branch_locus(const BaseSL4& b) { return locus_of(b.quartic()); }
BranchLocus branch_locus(const BaseSO4& b) { return locus_of(b.quartic()); }
BranchLocus branch_locus(const BaseSO6& b) { return locus_of(b.sextic()); }

GenericityReport genericity_report(const BaseSL4& b) {
  GenericityReport r;
  const ZPoly a2sq = b.a2 * b.a2;
  r.gcd_with_a2sq_minus_a4 = gcd(b.a3, a2sq - b.a4);
  r.gcd_with_a2sq_minus_4a4 = gcd(b.a3, a2sq - Rational(4) * b.a4);
  r.a3_identically_zero = b.a3.is_zero();

  // variables nested as u (outer), v, z (inner)
  auto c = [](const ZPoly& p) { return TriPoly(CurvePoly(p)); };
  const TriPoly u = TriPoly::x();
  const TriPoly v = c(ZPoly()) + TriPoly(CurvePoly::x());
  const TriPoly a2 = c(b.a2), a3 = c(b.a3), a4 = c(b.a4);
  const TriPoly n2(2), n4(4), n8(8);

  const TriPoly f1 = n8 * u * u * u - n4 * u * v + n2 * a2 * u + a3;
  const TriPoly f2 = n8 * u * u * u * u + n2 * a2 * u * u - n8 * u * u * v - a2 * v + a3 * u + v * v + a4;

  auto d_u = [](const TriPoly& f) { return f.derivative(); };
  auto d_v = [](const TriPoly& f) { return f.map([](const CurvePoly& p) { return p.derivative(); }); };
  auto d_z = [](const TriPoly& f) {
    return f.map([](const CurvePoly& p) { return p.map([](const ZPoly& q) { return q.derivative(); }); });
  };
  auto row = [&](const TriPoly& f) {
    return std::vector<CurvePoly>{d_u(f).coeff(0), d_v(f).coeff(0), d_z(f).coeff(0)};
  };
  const auto j1 = row(f1), j2 = row(f2);

  const CurvePoly g(std::vector<ZPoly>{b.a4, -b.a2, ZPoly(1)});
  std::vector<ZPoly> rs, ss;
  for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const CurvePoly minor = j1[p] * j2[q] - j1[q] * j2[p];
    const CurvePoly red = remainder(minor, g);
    rs.push_back(red.coeff(1));
    ss.push_back(red.coeff(0));
  }

  ZPoly locus = b.a3;
  for (std::size_t k = 0; k < 3; ++k)
    locus = gcd(locus, ss[k] * ss[k] + b.a2 * ss[k] * rs[k] + b.a4 * rs[k] * rs[k]);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) locus = gcd(locus, rs[j] * ss[k] - rs[k] * ss[j]);
  r.rank_drop_locus = locus;

  r.jacobian_full_rank = !r.a3_identically_zero && locus.degree() == 0;
  r.generic = r.jacobian_full_rank;
  return r;
}

} // namespace isolab::spectral
