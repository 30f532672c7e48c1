#pragma once

#include <string>

#include "isolab/lie.hpp"
#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"

namespace isolab::spectral {

using lie::Orientation;

// The base surface is one affine chart with coordinate z; a section of K^i
// is a polynomial in z. Curve polynomials live in ℚ[z][η].

/// Pair of SL(2) spectral data, curves η² + aᵢ = 0.
struct BaseSL2Pair {
  ZPoly a1, a2;
};

/// SL(4) spectral data, curve η⁴ + a₂η² + a₃η + a₄ = 0.
struct BaseSL4 {
  ZPoly a2, a3, a4;
  CurvePoly quartic() const;
};

/// SO(4) data: curve η⁴ + b₁η² + pf², pf the Pfaffian.
struct BaseSO4 {
  ZPoly b1, pf;
  Orientation sign = Orientation::Positive;
  CurvePoly quartic() const;
};

/// SO(6) data: curve η⁶ + b₁η⁴ + b₂η² − pf² (constant term for det Q6 = −1).
struct BaseSO6 {
  ZPoly b1, b2, pf;
  Orientation sign = Orientation::Positive;
  CurvePoly sextic() const;
};

/// b₁ = 2(a₁+a₂), pf = sign·(a₁−a₂).
BaseSO4 so4_base(const BaseSL2Pair& b, Orientation sign = Orientation::Positive);

/// b₁ = 2a₂, b₂ = a₂²−4a₄, pf = sign·a₃.
BaseSO6 so6_base(const BaseSL4& b, Orientation sign = Orientation::Positive);

/// Res_x(x² + a₁, (η−x)² + a₂), computed directly over ℚ[z][η].
CurvePoly so4_oracle(const BaseSL2Pair& b);

/**
 * ∏_{a<b}(η − λₐ − λ_b) for the roots λ of P₄ = x⁴ + a₂x² + a₃x + a₄.
 * For each sample point z₀ it forms Res_x(P₄(x), P₄(η−x)) over ℚ[η],
 * divides by 16·P₄(η/2) and takes the monic square root; the η-coefficients
 * are then interpolated in z. InternalError if a step is inexact.
 */
CurvePoly so6_oracle(const BaseSL4& b);

/// Monic companion matrix of a monic curve polynomial (ones on the
/// subdiagonal, −c₀..−c_{n−1} in the last column), so char_poly returns it.
ZMatrix companion(const CurvePoly& monic);

struct BranchLocus {
  ZPoly discriminant;  // in z
  bool non_reduced = false;  // discriminant vanishes identically
};

BranchLocus branch_locus_sl2(const ZPoly& a);
/// Product of the two SL(2) discriminants.
BranchLocus branch_locus(const BaseSL2Pair& b);
BranchLocus branch_locus(const BaseSL4& b);
BranchLocus branch_locus(const BaseSO4& b);
BranchLocus branch_locus(const BaseSO6& b);

/**
 * Smoothness of the SO(6) curve over the locus u = 0 of the map
 *   ℱ(u,v,z) = (8u³ − 4uv + 2a₂u + a₃,
 *               8u⁴ + 2a₂u² − 8u²v − a₂v + a₃u + v² + a₄).
 * On u = 0 the zero set is a₃(z) = 0, G = v² − a₂v + a₄ = 0. Each 2×2
 * minor of the Jacobian is reduced mod G to r·v + s; the rank drops somewhere
 * iff a₃ shares a root with every r²a₄ + r·s·a₂ + s² and every r_j s_k − r_k s_j.
 */
struct GenericityReport {
  ZPoly gcd_with_a2sq_minus_a4;       // gcd(a₃, a₂² − a₄)
  ZPoly gcd_with_a2sq_minus_4a4;      // gcd(a₃, a₂² − 4a₄)
  ZPoly rank_drop_locus;              // gcd of a₃ with the minor conditions
  bool a3_identically_zero = false;
  bool jacobian_full_rank = false;
  bool generic = false;
};

GenericityReport genericity_report(const BaseSL4& b);

} // namespace isolab::spectral
