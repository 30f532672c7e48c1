#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's elimination or Berkowitz code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"
#include "isolab/rational.hpp"

namespace testing_support {

using isolab::Matrix;
using isolab::Poly;
using isolab::QMatrix;
using isolab::Rational;
using isolab::ZMatrix;
using isolab::ZPoly;

inline ZPoly zpoly(std::initializer_list<long> coeffs_lowest_first) {
  std::vector<Rational> c;
  for (long v : coeffs_lowest_first) c.emplace_back(v);
  return ZPoly(std::move(c));
}

inline ZPoly z() { return ZPoly::x(); }

/// Polynomial in η over ℚ[z] with the given ℚ[z] coefficients, lowest first.
inline isolab::CurvePoly eta_poly(std::initializer_list<ZPoly> coeffs) {
  return isolab::CurvePoly(std::vector<ZPoly>(coeffs));
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 9, long max_den = 5) {
    return Rational(integer(-span, span), integer(1, max_den));
  }

  ZPoly zpoly(int max_degree) {
    int d = static_cast<int>(integer(0, max_degree));
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.push_back(rational());
    return ZPoly(std::move(c));
  }

  QMatrix qmatrix(std::size_t n, std::size_t m) {
    QMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = rational();
    return a;
  }

  QMatrix traceless(std::size_t n) {
    QMatrix a = qmatrix(n, n);
    Rational t = a.trace();
    a(n - 1, n - 1) -= t;
    return a;
  }

  QMatrix symmetric_traceless(std::size_t n) {
    QMatrix a = qmatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
    a(n - 1, n - 1) -= a.trace();
    return a;
  }

  ZMatrix symmetric_traceless_z(std::size_t n, int max_degree) {
    ZMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = zpoly(max_degree);
    a(n - 1, n - 1) -= a.trace();
    return a;
  }

  QMatrix antisymmetric(std::size_t n) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = rational();
        a(j, i) = -a(i, j);
      }
    return a;
  }

  /// Unit-determinant matrix as a product of random elementary shears.
  QMatrix special_linear(std::size_t n, int shears = 8) {
    QMatrix a = QMatrix::identity(n);
    for (int s = 0; s < shears; ++s) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      QMatrix e = QMatrix::identity(n);
      e(i, j) = rational(3, 2);
      a = a * e;
    }
    return a;
  }

private:
  std::mt19937_64 rng_;
};

/// Leibniz expansion over all permutations. Independent determinant oracle
/// for sizes up to ~7.
template <class R>
R leibniz_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) total += term;
    else total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// ∏(η − λ_i) by repeated multiplication.
inline Poly<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  Poly<Rational> p(Rational(1));
  for (const auto& r : roots) p = p * Poly<Rational>(std::vector<Rational>{-r, Rational(1)});
  return p;
}

} // namespace testing_support
