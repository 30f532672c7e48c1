#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "isolab/errors.hpp"
#include "isolab/poly.hpp"
#include "isolab/rational.hpp"

namespace isolab {

/// Rectangular row-major matrix over a commutative ring R.
template <class R>
class Matrix {
public:
  using value_type = R;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ValidationError("ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw ValidationError("matrix rows have different lengths");
      m.a_.insert(m.a_.end(), r.begin(), r.end());
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  R trace() const {
    require_square("trace");
    R t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ValidationError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.a_) v = -v;
    return a;
  }
  friend Matrix operator*(const R& s, Matrix m) {
    for (auto& v : m.a_) v = s * v;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const R&>()));
    Matrix<T> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw ValidationError(std::string(what) + ": matrix is not square");
  }

private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> a_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<ZPoly>;

/// Embeds a matrix over R into one over S entrywise.
template <class S, class R>
Matrix<S> lift(const Matrix<R>& m) {
  return m.map([](const R& v) { return S(v); });
}

template <class R>
Matrix<R> kronecker(const Matrix<R>& m, const Matrix<R>& n) {
  Matrix<R> k(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < n.rows(); ++p)
        for (std::size_t q = 0; q < n.cols(); ++q) k(i * n.rows() + p, j * n.cols() + q) = m(i, j) * n(p, q);
    }
  return k;
}

/**
 * Determinant. Gaussian elimination over ℚ; fraction-free Bareiss elimination
 * (exact divisions only) over any other integral domain.
 */
template <class R>
R determinant(Matrix<R> m) {
  m.require_square("determinant");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  auto pivot = [&](std::size_t k) {
    if (!m(k, k).is_zero()) return true;
    for (std::size_t i = k + 1; i < n; ++i)
      if (!m(i, k).is_zero()) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(i, j));
        negate = !negate;
        return true;
      }
    return false;
  };
  if constexpr (std::is_same_v<R, Rational>) {
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (!pivot(k)) return Rational(0);
      det *= m(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        Rational f = m(i, k) / m(k, k);
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
      }
    }
    return negate ? -det : det;
  } else {
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!pivot(k)) return R(0);
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
  }
}

/**
 * det(ηI − M) by Berkowitz's algorithm: ring operations only, so it works
 * for entries in ℚ[z] as well as ℚ. Result is monic of degree n.
 */
template <class R>
Poly<R> char_poly(const Matrix<R>& m) {
  m.require_square("char_poly");
  const std::size_t n = m.rows();
  if (n == 0) return Poly<R>(R(1));
  // v holds coefficients highest degree first
  std::vector<R> v{R(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<R> t(r + 2, R(0));
    t[0] = R(1);
    t[1] = -m(r, r);
    std::vector<R> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot(0);
      for (std::size_t i = 0; i < r; ++i)
        if (!x[i].is_zero() && !m(r, i).is_zero()) dot += m(r, i) * x[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<R> y(r, R(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (!x[j].is_zero() && !m(i, j).is_zero()) y[i] += m(i, j) * x[j];
        x = std::move(y);
      }
    }
    std::vector<R> nv(r + 2, R(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (!v[j].is_zero()) nv[i] += t[i - j] * v[j];
    v = std::move(nv);
  }
  std::vector<R> lowest_first(v.rbegin(), v.rend());
  return Poly<R>(std::move(lowest_first));
}

/// Evaluates p at a square matrix (Horner), used for Cayley–Hamilton checks.
template <class R>
Matrix<R> eval_at_matrix(const Poly<R>& p, const Matrix<R>& m) {
  m.require_square("eval_at_matrix");
  Matrix<R> acc(m.rows(), m.cols());
  const auto id = Matrix<R>::identity(m.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

template <class R>
bool is_antisymmetric(const Matrix<R>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == -a(j, i))) return false;
  return true;
}

template <class R>
bool is_symmetric(const Matrix<R>& a) {
  return a.is_square() && a == a.transpose();
}

namespace detail {

template <class R>
R pfaffian_rec(const Matrix<R>& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return R(1);
  const std::size_t first = idx.front();
  R total(0);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const R& entry = a(first, idx[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    R sub = pfaffian_rec(a, rest);
    if (k % 2 == 1) total += entry * sub;
    else total -= entry * sub;
  }
  return total;
}

} // namespace detail

/// Pfaffian by expansion along the first row, normalised so that
/// Pf([[0,1],[-1,0]]) = 1. Sizes up to 8.
template <class R>
R pfaffian(const Matrix<R>& a) {
  if (!a.is_square() || a.rows() % 2 != 0) throw ValidationError("pfaffian: need an even-size square matrix");
  if (a.rows() > 8) throw ValidationError("pfaffian: size above 8 is not supported");
  if (!is_antisymmetric(a)) throw ValidationError("pfaffian: matrix is not antisymmetric");
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(a, idx);
}

/// Index pairs (i,j), i<j, in lexicographic order: the basis e_i ∧ e_j.
std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n);

/// v ∧ w in the lexicographic basis of Λ².
template <class R>
std::vector<R> wedge(const std::vector<R>& v, const std::vector<R>& w) {
  const auto pairs = wedge_pairs(v.size());
  std::vector<R> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) out.push_back(v[i] * w[j] - v[j] * w[i]);
  return out;
}

/**
 * Matrix of Λ²M on the basis e₁∧e₂, e₁∧e₃, e₁∧e₄, e₂∧e₃, e₂∧e₄, e₃∧e₄.
 * Entry ((i,j),(k,l)) is the 2×2 minor M_ik M_jl − M_il M_jk.
 */
template <class R>
Matrix<R> exterior_square(const Matrix<R>& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ValidationError("exterior_square: expected a 4x4 matrix");
  const auto pairs = wedge_pairs(4);
  Matrix<R> out(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      auto [i, j] = pairs[r];
      auto [k, l] = pairs[c];
      out(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  return out;
}

/// Inverse over ℚ by Gauss–Jordan; ValidationError if singular.
QMatrix inverse(const QMatrix& m);

/// Basis of the right null space over ℚ, in reduced echelon form.
std::vector<std::vector<Rational>> null_space(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Canonical basis of span(vectors): the nonzero rows of its reduced row
/// echelon form, so each vector has a leading 1 and the leads increase.
std::vector<std::vector<Rational>> echelon_basis(const std::vector<std::vector<Rational>>& vectors);

/// Column vector helpers.
template <class R>
std::vector<R> column(const Matrix<R>& m, std::size_t j) {
  std::vector<R> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

template <class R>
Matrix<R> from_columns(const std::vector<std::vector<R>>& cols) {
  if (cols.empty()) return Matrix<R>();
  Matrix<R> m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw ValidationError("from_columns: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

} // namespace isolab
