#include "isolab/sampling.hpp"

namespace isolab::sampling {

long long integer(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(integer(rng, -9, 9));
  const long den = static_cast<long>(integer(rng, 1, 5));
  return Rational(num, den);
}

ZPoly zpoly(std::mt19937_64& rng, int max_degree) {
  const int d = static_cast<int>(integer(rng, 0, max_degree));
  std::vector<Rational> c;
  for (int k = 0; k <= d; ++k) c.push_back(rational(rng));
  return ZPoly(std::move(c));
}

QMatrix qmatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  QMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rational(rng);
  return a;
}

QMatrix traceless(std::mt19937_64& rng, std::size_t n) {
  QMatrix a = qmatrix(rng, n, n);
  const Rational t = a.trace();
  a(n - 1, n - 1) -= t;
  return a;
}

QMatrix symmetric_traceless(std::mt19937_64& rng, std::size_t n) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rational(rng);
  const Rational t = a.trace();
  a(n - 1, n - 1) -= t;
  return a;
}

ZMatrix symmetric_traceless_z(std::mt19937_64& rng, std::size_t n, int max_degree) {
  ZMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = zpoly(rng, max_degree);
  const ZPoly t = a.trace();
  a(n - 1, n - 1) -= t;
  return a;
}

QMatrix special_linear(std::mt19937_64& rng, std::size_t n) {
  QMatrix a = QMatrix::identity(n);
  for (int s = 0; s < 8; ++s) {
    const auto i = static_cast<std::size_t>(integer(rng, 0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(rng, 0, static_cast<long long>(n) - 2));
    if (j >= i) ++j;
    QMatrix e = QMatrix::identity(n);
    e(i, j) = rational(rng);
    a = a * e;
  }
  return a;
}

} // namespace isolab::sampling
