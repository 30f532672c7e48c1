#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "isolab/errors.hpp"
#include "isolab/rational.hpp"

namespace isolab {

/**
 * Dense univariate polynomial with coefficients in a commutative ring R,
 * stored lowest degree first and always trimmed (no trailing zeros).
 *
 * Nesting gives the multivariate rings the library needs:
 *   Poly<Rational>        ℚ[z]           sections on the affine chart
 *   Poly<Poly<Rational>>  ℚ[z][η]        spectral curve polynomials
 *   Poly<Poly<Poly<...>>> one more variable, used for eliminations.
 */
template <class R>
class Poly {
public:
  using coeff_type = R;

  Poly() = default;
  Poly(int c) : Poly(R(c)) {}
  Poly(const R& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw ValidationError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly q = p;
    for (auto& c : q.c_) c = s * c;
    q.trim();
    return q;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a point of any ring S that R embeds into.
  template <class S>
  S eval(const S& at) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + S(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> d(c_.size() - 1, R(0));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = R(static_cast<int>(k)) * c_[k];
    return Poly(std::move(d));
  }

  /// p(x) -> p(-x).
  Poly reflect() const {
    Poly q = *this;
    for (std::size_t k = 1; k < q.c_.size(); k += 2) q.c_[k] = -q.c_[k];
    return q;
  }

  /// True when only even powers occur.
  bool is_even() const {
    for (std::size_t k = 1; k < c_.size(); k += 2)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const R&>()));
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<T>(std::move(out));
  }

  std::string str(const std::string& var = "x") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

using ZPoly = Poly<Rational>;     // ℚ[z]
using CurvePoly = Poly<ZPoly>;    // ℚ[z][η]
using TriPoly = Poly<CurvePoly>;  // ℚ[z][η][x]

namespace detail {

template <class R>
void write_coeff(std::ostream& os, const R& c) {
  if constexpr (std::is_same_v<R, Rational>) {
    os << c;
  } else {
    os << '(' << c.str("z") << ')';
  }
}

} // namespace detail

template <class R>
std::string Poly<R>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || !(c_[k] == R(1))) {
      detail::write_coeff(os, c_[k]);
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

/// Exact quotient a / b; throws InexactError if b does not divide a.
template <class R>
Poly<R> divide_exact(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InexactError("polynomial division by zero");
  if (a.is_zero()) return Poly<R>();
  if (a.degree() < b.degree()) throw InexactError("polynomial division leaves a remainder");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  const R& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    R q = divide_exact(top, lb);
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw InexactError("polynomial division leaves a remainder");
  return Poly<R>(std::move(quo));
}

/// Quotient and remainder. Needs the divisor's leading coefficient to divide
/// every intermediate leading term: always true over ℚ or for monic divisors.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InexactError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    R q = divide_exact(top, b.leading());
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> remainder(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).second;
}

/// Monic gcd over ℚ. gcd(0, 0) = 0.
ZPoly gcd(ZPoly a, ZPoly b);

ZPoly make_monic(const ZPoly& p);

/**
 * Square root with the sign fixed by a positive (recursively positive)
 * leading coefficient. Throws InexactError if `p` is not a perfect square.
 */
template <class R>
Poly<R> sqrt_exact(const Poly<R>& p) {
  if (p.is_zero()) return Poly<R>();
  if (p.degree() % 2 != 0) throw InexactError("odd-degree polynomial is not a square");
  const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
  std::vector<R> s(m + 1, R(0));
  s[m] = sqrt_exact(p.leading());
  const R two_lead = R(2) * s[m];
  for (std::size_t k = 1; k <= m; ++k) {
    // coefficient of x^(2m-k) in s^2 fixes s[m-k]
    R acc = p.coeff(2 * m - k);
    for (std::size_t i = m - k + 1; i < m; ++i) {
      std::size_t j = 2 * m - k - i;
      if (j > m || j <= m - k) continue;
      acc -= s[i] * s[j];
    }
    s[m - k] = divide_exact(acc, two_lead);
  }
  Poly<R> root(std::move(s));
  if (!(root * root == p)) throw InexactError("polynomial is not a perfect square");
  return root;
}

/// p(q(x)) by Horner.
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly<R>(*it);
  return acc;
}

/// Embeds p ∈ R[x] into S[x] coefficientwise (R ⊂ S via S's constructor).
template <class S, class R>
Poly<S> lift(const Poly<R>& p) {
  return p.map([](const R& c) { return S(c); });
}

/// Newton interpolation over ℚ: the unique polynomial of degree < n through
/// the n points (xs[i], ys[i]). The xs must be distinct.
ZPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace isolab
