#include "isolab/poly.hpp"

namespace isolab {

ZPoly make_monic(const ZPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  while (!b.is_zero()) {
    ZPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

ZPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw ValidationError("interpolate: point/value count mismatch");
  const std::size_t n = xs.size();
  // divided differences, in place
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational gap = xs[i] - xs[i - level];
      if (gap.is_zero()) throw ValidationError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  ZPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * ZPoly(std::vector<Rational>{-xs[i], Rational(1)}) + ZPoly(dd[i]);
  return acc;
}

} // namespace isolab
