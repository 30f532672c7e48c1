#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace isolab::covers {

/// Formal integer combination of labeled points. Zero weights are dropped,
/// so two divisors compare equal iff they agree pointwise.
class Divisor {
public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const std::string, long long>> init);

  long long weight(const std::string& label) const;
  void add(const std::string& label, long long w);
  long long degree() const;
  bool is_zero() const { return w_.empty(); }
  const std::map<std::string, long long>& weights() const { return w_; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(long long s, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.w_ == b.w_; }

  std::string str() const;

private:
  std::map<std::string, long long> w_;
};

enum class FiberKind { Regular, GenericBranch };

std::string to_string(FiberKind k);
FiberKind fiber_kind_from_string(const std::string& s);

struct FiberPoint {
  std::string label;
  int mult = 1;
  bool operator==(const FiberPoint&) const = default;
};

/**
 * Fiber of a finite cover over one base point. Multiplicities are local
 * degrees over the base. Only the generic profiles are supported: all ones
 * (Regular) or a single double point with the rest simple (GenericBranch).
 */
struct FiberModel {
  std::string base_label;
  FiberKind kind = FiberKind::Regular;
  std::vector<FiberPoint> points;
  std::string curve;  // optional identity of the covering curve

  int degree() const;
  int mult(const std::string& label) const;
  bool contains(const std::string& label) const;

  /// ValidationError("non-generic fiber ...") if the profile does not match
  /// the kind, or on duplicate/empty labels or non-positive multiplicities.
  void validate() const;

  /// Labels <prefix>1..<prefix>n, all simple.
  static FiberModel regular(std::string base, int degree, std::string curve = "", std::string prefix = "y");
  /// y1 double, then y2..y_{degree-1} simple.
  static FiberModel generic_branch(std::string base, int degree, std::string curve = "", std::string prefix = "y");

  /// Index of the double point of a GenericBranch fiber.
  std::size_t double_point() const;
};

struct PairPoint {
  std::string first, second;
  int mult = 1;
  std::string label() const { return "(" + first + "," + second + ")"; }
};

/// Points of a fiber product. `involution[i]` is the image of point i when
/// the product carries an involution (empty otherwise).
struct PairFiber {
  std::string base_label;
  std::vector<PairPoint> points;
  bool diagonal_removed = false;
  std::vector<std::size_t> involution;
  std::vector<FiberModel> factors;

  int degree() const;
  std::vector<std::string> labels() const;
};

struct SymPoint {
  std::string first, second;  // first precedes second in the base fiber
  int mult = 1;
  std::string label() const { return "Sym[" + first + "," + second + "]"; }
};

/// Unordered pairs with the involution σ sending a pair to its complement.
struct SymFiber {
  std::string base_label;
  FiberKind kind = FiberKind::Regular;
  std::vector<SymPoint> points;
  std::vector<std::size_t> sigma;

  int degree() const;
  std::vector<std::string> labels() const;
  bool sigma_is_involution() const;
  bool sigma_fixed_point_free() const;
};

/// Label-level involution, shared by the norm and Prym helpers.
using Involution = std::map<std::string, std::string>;

Involution involution_of(const SymFiber& f);
Involution involution_of(const PairFiber& f);

/// S₁ ×_Σ S₂ over one base point for two double covers, with σ̂ = (σ₁, σ₂).
/// Two branched factors at the same point is a non-generic configuration.
PairFiber fiber_product(const FiberModel& f1, const FiberModel& f2);

/// (S ×_Σ S) minus the diagonal, for a degree 4 fiber.
PairFiber self_product_minus_diagonal(const FiberModel& f);

/// Quotient by (x,y) ↦ (y,x), with σ attached.
SymFiber symmetrize(const PairFiber& pf);

/// Covering map between two fibers given pointwise, with the local degree at
/// a source point equal to mult(source)/mult(image).
struct FiberMap {
  std::map<std::string, std::string> image;
  std::map<std::string, int> source_mult;
  std::map<std::string, int> target_mult;

  int local_degree(const std::string& source) const;
  Divisor pullback(const Divisor& d) const;
  Divisor push(const Divisor& d) const;
  Divisor ramification() const;  // Σ (e − 1)·P
};

FiberMap projection(const PairFiber& pf, int which);  // which = 1 or 2
FiberMap quotient_map(const PairFiber& pf, const SymFiber& sf);
FiberMap to_base(const FiberModel& f);

/// Ramification divisor of the cover over the base: Σ (mult − 1)·P.
Divisor ramification_divisor(const FiberModel& f);
Divisor ramification_divisor(const SymFiber& f);

/// Both sides of p₁*R + p₂*R = π̂_τ*R̂₆ + 2R₀ on the pair fiber.
struct RamificationCheck {
  bool holds = false;
  Divisor lhs, rhs;
  Divisor p1_pullback, p2_pullback, sym_pullback, r0;
  std::vector<std::string> ledger;
};

RamificationCheck ramification_check(const FiberModel& f);

/// C_D on the Sym fiber: Regular Sym[yᵢ,yⱼ] ↦ D(yᵢ)+D(yⱼ); at a branch fiber
/// Sym[y₁,y₁] ↦ D(y₁), Sym[y₂,y₃] ↦ D(y₂)+D(y₃), Sym[y₁,yᵢ] ↦ D(y₁)+2D(yᵢ).
Divisor correspondence_push(const FiberModel& f, const Divisor& d);

enum class Covering { Pi, Sigma, Sigma4 };
Covering covering_from_string(const std::string& s);
std::string to_string(Covering c);

/// Norms along S → Σ, Ŝ₆ → Ŝ₆/σ and Ŝ₄ → Ŝ₄/σ̂. Orbits are labeled
/// "[[a,b]]" after their first point.
Divisor norm_pi(const FiberModel& f, const Divisor& d);
Divisor norm_sigma(const SymFiber& f, const Divisor& d);
Divisor norm_sigma4(const PairFiber& f, const Divisor& d);
std::string orbit_label(const std::string& first, const std::string& second);

bool prym_test(const std::vector<std::pair<FiberModel, Divisor>>& family);
bool prym_test(const std::vector<std::pair<SymFiber, Divisor>>& family);
bool prym_test(const std::vector<std::pair<PairFiber, Divisor>>& family);

struct MumfordDivisor {
  Divisor divisor;  // N − σ(N)
  int parity = 0;   // deg N mod 2
};

/// ValidationError if N meets a fixed point of σ or a label σ does not know.
MumfordDivisor mumford_divisor(const Divisor& n, const Involution& sigma);

Divisor apply_involution(const Involution& sigma, const Divisor& d);

/// Integer split D = invariant + defect with invariant(p) = invariant(σp) =
/// ⌊(D(p) + D(σp))/2⌋.
std::pair<Divisor, Divisor> sigma_orbit_split(const Divisor& d, const Involution& sigma);

enum class TwistContext { SL4, SO4, SO6 };
TwistContext twist_context_from_string(const std::string& s);

struct TwistLedger {
  std::vector<std::pair<std::string, long long>> entries;
  bool balanced = false;
  long long entry(const std::string& name) const;
};

/// Per-fiber degree bookkeeping of the canonical twists, computed from the
/// fibers of the given kind.
TwistLedger twist_ledger(TwistContext ctx, FiberKind kind);

} // namespace isolab::covers
