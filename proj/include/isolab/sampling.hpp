#pragma once

#include <random>

#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"
#include "isolab/rational.hpp"

namespace isolab::sampling {

// Random exact inputs: numerators in [-9, 9], denominators in [1, 5].

Rational rational(std::mt19937_64& rng);
long long integer(std::mt19937_64& rng, long long lo, long long hi);
ZPoly zpoly(std::mt19937_64& rng, int max_degree);
QMatrix qmatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);
QMatrix traceless(std::mt19937_64& rng, std::size_t n);
QMatrix symmetric_traceless(std::mt19937_64& rng, std::size_t n);
ZMatrix symmetric_traceless_z(std::mt19937_64& rng, std::size_t n, int max_degree);
/// Product of random elementary shears, so the determinant is exactly 1.
QMatrix special_linear(std::mt19937_64& rng, std::size_t n);

} // namespace isolab::sampling
