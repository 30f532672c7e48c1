#include "isolab/higgs.hpp"

namespace isolab {

ZMatrix HiggsBlockField::orthogonal_transpose_neg() const {
  const ZMatrix a_t = alpha().transpose();
  return -(lift<ZPoly>(inverse(q2)) * a_t * lift<ZPoly>(q1));
}

bool HiggsBlockField::diagonal_blocks_zero() const {
  const std::size_t n = rank();
  return phi.block(0, 0, split, split).is_zero() && phi.block(split, split, n - split, n - split).is_zero();
}

bool HiggsBlockField::is_block_antisymmetric() const {
  return diagonal_blocks_zero() && lower_block() == orthogonal_transpose_neg();
}

} // namespace isolab
