#pragma once

#include <string>
#include <vector>

#include "isolab/matrix.hpp"

namespace isolab {

/**
 * Higgs field on W1 ⊕ W2 written in blocks
 *
 *     Φ = [ Φ11  Φ12 ]      Φ12 = α,  Φ21 = −αᵀ,  αᵀ = q2⁻¹·α*·q1
 *         [ Φ21  Φ22 ]
 *
 * with the forms q1, q2 the restrictions of the ambient orthogonal
 * structure to the two summands. Entries are sections on the affine chart.
 */
struct HiggsBlockField {
  ZMatrix phi;
  std::size_t split = 0;  // rank of W1
  QMatrix q1;
  QMatrix q2;
  std::vector<std::pair<std::string, long long>> degree_labels;

  std::size_t rank() const { return phi.rows(); }
  ZMatrix alpha() const { return phi.block(0, split, split, rank() - split); }
  ZMatrix lower_block() const { return phi.block(split, 0, rank() - split, split); }

  /// −q2⁻¹·αᵗ·q1, the block the lower-left corner must equal.
  ZMatrix orthogonal_transpose_neg() const;

  bool diagonal_blocks_zero() const;
  bool is_block_antisymmetric() const;
};

} // namespace isolab
