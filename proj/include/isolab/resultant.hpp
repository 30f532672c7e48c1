#pragma once

#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"

namespace isolab {

/// Sylvester matrix of f (deg m) and g (deg n): n shifted rows of f followed
/// by m shifted rows of g, coefficients highest degree first.
template <class R>
Matrix<R> sylvester(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() || g.is_zero()) throw ValidationError("resultant: zero polynomial input");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  Matrix<R> s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return s;
}

/**
 * Res(f, g) with respect to the outermost variable, as the Sylvester
 * determinant. The result lives in the coefficient ring R.
 */
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
  return determinant(sylvester(f, g));
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
  if (f.degree() < 1) throw ValidationError("discriminant: need a polynomial of positive degree");
  if (f.degree() == 1) return R(1);
  const int n = f.degree();
  R r = divide_exact(resultant(f, f.derivative()), f.leading());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

} // namespace isolab
