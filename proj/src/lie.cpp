#include "isolab/lie.hpp"

#include <algorithm>
#include <array>

namespace isolab::lie {

Orientation orientation_from_int(int s) {
  if (s == 1) return Orientation::Positive;
  if (s == -1) return Orientation::Negative;
  throw ValidationError("orientation must be +1 or -1");
}

void QuadraticForm::validate() const {
  if (!gram.is_square()) throw ValidationError("quadratic form: Gram matrix is not square");
  if (!is_symmetric(gram)) throw ValidationError("quadratic form: Gram matrix is not symmetric");
  if (determinant(gram).is_zero()) throw ValidationError("quadratic form: Gram matrix is degenerate");
}

std::string to_string(Algebra a) {
  switch (a) {
  case Algebra::SL2xSL2: return "sl2xsl2";
  case Algebra::SL4: return "sl4";
  case Algebra::SO4: return "so4";
  case Algebra::SO6: return "so6";
  }
  return "?";
}

bool LieElement::is_member() const {
  switch (algebra) {
  case Algebra::SL2xSL2:
    if (matrix.rows() != 4 || matrix.cols() != 4) return false;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 4; ++j)
        if (!matrix(i, j).is_zero() || !matrix(j, i).is_zero()) return false;
    return matrix.block(0, 0, 2, 2).trace().is_zero() && matrix.block(2, 2, 2, 2).trace().is_zero();
  case Algebra::SL4:
    return matrix.rows() == 4 && matrix.is_square() && matrix.trace().is_zero();
  case Algebra::SO4:
    return matrix.rows() == 4 && matrix.is_square() && is_skew_for(matrix, q4().gram);
  case Algebra::SO6:
    return matrix.rows() == 6 && matrix.is_square() && is_skew_for(matrix, q6().gram);
  }
  return false;
}

QMatrix omega() { return QMatrix{{0, 1}, {-1, 0}}; }

QuadraticForm q4() { return {kronecker(omega(), omega()), Orientation::Positive}; }

namespace {

int permutation_sign(std::array<std::size_t, 4> p) {
  int sign = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

void require_unit_det(const QMatrix& a, std::size_t n, const char* what) {
  if (a.rows() != n || a.cols() != n)
    throw ValidationError(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (!determinant(a).is_one()) throw ValidationError(std::string(what) + ": determinant is not 1");
}

} // namespace

QuadraticForm q6() {
  const auto pairs = wedge_pairs(4);
  QMatrix g(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      g(r, c) = Rational(permutation_sign({pairs[r].first, pairs[r].second, pairs[c].first, pairs[c].second}));
  return {g, Orientation::Positive};
}

QMatrix iso2_group(const QMatrix& a1, const QMatrix& a2) {
  require_unit_det(a1, 2, "iso2_group");
  require_unit_det(a2, 2, "iso2_group");
  return kronecker(a1, a2);
}

QMatrix iso3_group(const QMatrix& a) {
  require_unit_det(a, 4, "iso3_group");
  return exterior_square(a);
}

QMatrix split_basis_so33() {
  // lexicographic Λ² basis: 0=e12 1=e13 2=e14 3=e23 4=e24 5=e34
  return from_columns<Rational>({
      {1, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, -1, 0},
      {0, 0, 1, 1, 0, 0},
      {0, 0, 1, -1, 0, 0},
      {0, 1, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, -1},
  });
}

QMatrix split_basis_so22() {
  return from_columns<Rational>({
      {1, 0, 0, 1},
      {0, 1, -1, 0},
      {0, 1, 1, 0},
      {1, 0, 0, -1},
  });
}

HodgeSplit hodge_split(const QuadraticForm& q, Orientation orientation) {
  q.validate();
  if (q.gram.rows() != 4) throw ValidationError("hodge_split: expected a form on a rank 4 space");
  const Rational det_q = determinant(q.gram);
  if (det_q.sign() <= 0 || !is_perfect_square(det_q))
    throw ValidationError("hodge_split: det q = " + det_q.str() + " is not a positive rational square");
  const Rational scale = Rational(sign_of(orientation)) * sqrt_exact(det_q);
  const QMatrix Q6 = q6().gram;

  HodgeSplit h;
  h.star = scale * (inverse(exterior_square(q.gram)) * Q6);
  if (!(h.star * h.star == QMatrix::identity(6))) throw InternalError("hodge_split: star does not square to the identity");

  const auto id = QMatrix::identity(6);
  h.plus_basis = echelon_basis(null_space(h.star - id));
  h.minus_basis = echelon_basis(null_space(h.star + id));
  if (h.plus_basis.size() + h.minus_basis.size() != 6)
    throw InternalError("hodge_split: eigenspaces do not span Λ²");

  auto restrict_q6 = [&](const std::vector<std::vector<Rational>>& basis) {
    const QMatrix b = from_columns(basis);
    return QuadraticForm{b.transpose() * Q6 * b, orientation};
  };
  h.q_plus = restrict_q6(h.plus_basis);
  h.q_minus = restrict_q6(h.minus_basis);
  return h;
}

HiggsBlockField build_block_higgs_so33(const ZMatrix& adot) {
  const ZMatrix alpha = alpha_block(adot);
  HiggsBlockField f;
  f.phi = to_split_basis(d_iso3(adot));
  f.split = 3;
  const QMatrix p = split_basis_so33();
  const QMatrix form = p.transpose() * q6().gram * p;
  f.q1 = form.block(0, 0, 3, 3);
  f.q2 = form.block(3, 3, 3, 3);
  if (!f.diagonal_blocks_zero()) throw InternalError("build_block_higgs_so33: diagonal blocks are not zero");
  if (!(f.alpha() == alpha)) throw InternalError("build_block_higgs_so33: upper block differs from alpha");
  if (!f.is_block_antisymmetric()) throw InternalError("build_block_higgs_so33: lower block is not -alpha^T");
  return f;
}

} // namespace isolab::lie
