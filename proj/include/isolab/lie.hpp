#pragma once

#include <array>
#include <string>
#include <vector>

#include "isolab/higgs.hpp"
#include "isolab/matrix.hpp"

namespace isolab::lie {

/// +1 or -1; selects a trivialisation of the determinant line.
enum class Orientation : int { Positive = 1, Negative = -1 };

Orientation orientation_from_int(int s);
inline int sign_of(Orientation o) { return static_cast<int>(o); }

/// Nondegenerate symmetric bilinear form with a recorded orientation sign.
struct QuadraticForm {
  QMatrix gram;
  Orientation orientation = Orientation::Positive;

  /// ValidationError unless gram is square, symmetric and invertible.
  void validate() const;
};

enum class Algebra { SL2xSL2, SL4, SO4, SO6 };

std::string to_string(Algebra a);

/// A Lie algebra element together with the algebra it is claimed to lie in.
/// For SL2xSL2 the matrix is block diagonal diag(A1, A2).
struct LieElement {
  QMatrix matrix;
  Algebra algebra;

  /// Trace zero for sl tags, Q-skew for so tags (Q4 resp. Q6).
  bool is_member() const;
};

/// ω = [[0,1],[-1,0]], the symplectic form preserved by SL(2).
QMatrix omega();

/// Q4 = ω ⊗ ω on ℂ²⊗ℂ² with the lexicographic tensor basis.
QuadraticForm q4();

/// Wedge pairing on Λ²ℂ⁴: Q6((i,j),(k,l)) is the coefficient of e₁∧e₂∧e₃∧e₄
/// in e_i∧e_j∧e_k∧e_l. In the lexicographic basis this is antidiagonal
/// (1,-1,1,1,-1,1) with determinant -1.
QuadraticForm q6();

// Group level ------------------------------------------------------------

QMatrix iso2_group(const QMatrix& a1, const QMatrix& a2);
QMatrix iso3_group(const QMatrix& a);

/// XᵀQX == Q.
template <class R>
bool preserves_form(const Matrix<R>& x, const QMatrix& q) {
  const auto qq = lift<R>(q);
  return x.transpose() * qq * x == qq;
}

/// XᵀQ + QX == 0.
template <class R>
bool is_skew_for(const Matrix<R>& x, const QMatrix& q) {
  const auto qq = lift<R>(q);
  return (x.transpose() * qq + qq * x).is_zero();
}

// Lie algebra level --------------------------------------------------------

namespace detail {
template <class R>
void require_traceless(const Matrix<R>& a, std::size_t n, const char* what) {
  if (a.rows() != n || a.cols() != n)
    throw ValidationError(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (!a.trace().is_zero()) throw ValidationError(std::string(what) + ": input has nonzero trace");
}
} // namespace detail

/// Ȧ₁⊗I + I⊗Ȧ₂ for traceless 2×2 inputs.
template <class R>
Matrix<R> d_iso2(const Matrix<R>& a1dot, const Matrix<R>& a2dot) {
  detail::require_traceless(a1dot, 2, "d_iso2");
  detail::require_traceless(a2dot, 2, "d_iso2");
  const auto id = Matrix<R>::identity(2);
  return kronecker(a1dot, id) + kronecker(id, a2dot);
}

/// The action (v∧w) ↦ Ȧv∧w + v∧Ȧw of a traceless 4×4 matrix on Λ²,
/// in the lexicographic basis.
template <class R>
Matrix<R> d_iso3(const Matrix<R>& adot) {
  detail::require_traceless(adot, 4, "d_iso3");
  Matrix<R> out(6, 6);
  const auto pairs = wedge_pairs(4);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [k, l] = pairs[c];
    std::vector<R> ek(4, R(0)), el(4, R(0));
    ek[k] = R(1);
    el[l] = R(1);
    auto col = wedge(column(adot, k), el);
    auto col2 = wedge(ek, column(adot, l));
    for (std::size_t r = 0; r < 6; ++r) out(r, c) = col[r] + col2[r];
  }
  return out;
}

/**
 * Fixed change of basis on Λ²ℂ⁴ putting Q6 in split form 2·diag(I,−I).
 * Columns: e12+e34, e13−e24, e14+e23 (positive) then e14−e23, e13+e24,
 * e12−e34 (negative); each has positive first nonzero entry.
 */
QMatrix split_basis_so33();

/// Same convention for Q4 on ℂ²⊗ℂ²: e1+e4, e2−e3 then e2+e3, e1−e4,
/// giving 2·diag(I,−I).
QMatrix split_basis_so22();

/// The 3×3 block α of a symmetric traceless ȧ, entrywise:
///   [ a13+a24   −a14+a23   a11+a22 ]
///   [ −a12+a34   a11+a33   a14+a23 ]
///   [ −a22−a33   a12+a34  −a13+a24 ]
template <class R>
Matrix<R> alpha_block(const Matrix<R>& a) {
  detail::require_traceless(a, 4, "alpha_block");
  if (!is_symmetric(a)) throw ValidationError("alpha_block: input is not symmetric");
  auto e = [&](int i, int j) { return a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
  Matrix<R> al(3, 3);
  al(0, 0) = e(1, 3) + e(2, 4);
  al(0, 1) = -e(1, 4) + e(2, 3);
  al(0, 2) = e(1, 1) + e(2, 2);
  al(1, 0) = -e(1, 2) + e(3, 4);
  al(1, 1) = e(1, 1) + e(3, 3);
  al(1, 2) = e(1, 4) + e(2, 3);
  al(2, 0) = -e(2, 2) - e(3, 3);
  al(2, 1) = e(1, 2) + e(3, 4);
  al(2, 2) = -e(1, 3) + e(2, 4);
  return al;
}

/// P⁻¹·X·P for the split basis P of the matching size (6 or 4).
template <class R>
Matrix<R> to_split_basis(const Matrix<R>& x) {
  QMatrix p;
  if (x.rows() == 6) p = split_basis_so33();
  else if (x.rows() == 4) p = split_basis_so22();
  else throw ValidationError("to_split_basis: expected a 4x4 or 6x6 matrix");
  return lift<R>(inverse(p)) * x * lift<R>(p);
}

/// The Hodge star of an oriented form q on ℂ⁴ acting on Λ², with its ±1
/// eigenspaces and the restrictions of Q6 to them.
struct HodgeSplit {
  QMatrix star;
  std::vector<std::vector<Rational>> plus_basis;
  std::vector<std::vector<Rational>> minus_basis;
  QuadraticForm q_plus;
  QuadraticForm q_minus;
};

/**
 * ⋆ = s·(Λ²q)⁻¹·Q6 with s = orientation·√det q, so that ⋆² = I.
 * Needs det q to be a positive rational square (true for any oriented
 * orthonormal frame); otherwise ValidationError.
 */
HodgeSplit hodge_split(const QuadraticForm& q, Orientation orientation);

/**
 * SO₀(3,3)-shaped field from a symmetric traceless ȧ with entries in ℚ[z]:
 * d_iso3(ȧ) conjugated into the split basis, where the off-diagonal blocks
 * are α and −αᵀ (orthogonal transpose for q1 = 2I, q2 = −2I).
 * InternalError if the assembled blocks disagree with alpha_block.
 */
HiggsBlockField build_block_higgs_so33(const ZMatrix& adot);

} // namespace isolab::lie
