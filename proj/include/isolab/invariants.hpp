#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isolab/higgs.hpp"
#include "isolab/lie.hpp"
#include "isolab/spectral.hpp"

namespace isolab::invariants {

/// Degree pair, either (d₁,d₂) of the SL(2,ℝ) line bundles or (c₁,c₂) of
/// the SO₀(2,2) ones, together with the genus of the base curve.
struct ToledoPair {
  long long first = 0, second = 0;
  int genus = 2;
};

/// w₂ labels in ℤ/2.
struct W2Label {
  int b1 = 0, b2 = 0;
  void validate() const;
};

/// A point of Jac(Σ)[2] ≅ (ℤ/2)^{2g}.
struct TorsionVector {
  std::vector<std::uint8_t> bits;
  void validate(int genus) const;
};

enum class Group { SL2xSL2, SO22, SO33 };
Group group_from_string(const std::string& s);
std::string to_string(Group g);

/// (d₁,d₂) ↦ (d₁+d₂, d₁−d₂).
ToledoPair toledo_map(const ToledoPair& d);

/// Inverse on the parity-matched lattice; ValidationError if c₁ ≢ c₂ mod 2.
ToledoPair toledo_preimage(const ToledoPair& c);

/// |dᵢ| ≤ g−1 for SL2xSL2, |cᵢ| ≤ 2g−2 for SO22. ValidationError if g < 2
/// or the group has no bound here.
bool milnor_wood_check(const ToledoPair& p, Group which);

/// SO22: c₁ ≡ c₂ mod 2 and |cᵢ| ≤ 2g−2.
bool liftable(const ToledoPair& c);
/// SO33: b₁ = b₂.
bool liftable(const W2Label& b);

enum class Isogeny { I2, I3 };
Isogeny isogeny_from_string(const std::string& s);

/// Enumerations run over the model group A = (ℤ/4)^{2g}, in which "L² = M"
/// reads 2L = M; A[2] plays the role of Jac(Σ)[2].
constexpr int max_enumeration_genus = 3;

/// #{ε ∈ A : 2ε = 0}.
std::uint64_t count_two_torsion_serial(int genus);
std::uint64_t count_two_torsion_parallel(int genus);

/// #{(L₁,L₂) ∈ A² : 2L₁ = M₁+M₂, 2L₂ = M₁−M₂} for M₁ = M₂ = 0.
std::uint64_t count_square_roots_serial(int genus);
std::uint64_t count_square_roots_parallel(int genus);

struct PreimageCount {
  Isogeny which = Isogeny::I3;
  int genus = 2;
  std::uint64_t stated = 0;                      // covering degree in the statement
  std::optional<std::uint64_t> proof_sentence;   // I2 only: count named in the proof
  std::optional<std::uint64_t> enumerated;       // absent for genus > 3
  std::vector<TorsionVector> witnesses;          // I3 only: the twists ε
  bool consistent() const { return enumerated && *enumerated == stated; }
};

PreimageCount preimage_count(Isogeny which, int genus);

/// SO₀(2,2) field built from SL(2,ℝ) data Φᵢ = [[0,βᵢ],[γᵢ,0]] on Nᵢ ⊕ Nᵢ⁻¹.
/// Basis (N₁N₂, N₁⁻¹N₂⁻¹ | N₁N₂⁻¹, N₁⁻¹N₂); α = [[β₂,β₁],[γ₁,γ₂]].
struct So22Assembly {
  HiggsBlockField field;
  spectral::BaseSO4 base;
  ZPoly pfaffian;  // Pf(Q4·(Φ₁⊗I + I⊗Φ₂))
};

So22Assembly assemble_so22(long long n1_degree, long long n2_degree, const ZPoly& beta1, const ZPoly& gamma1,
                           const ZPoly& beta2, const ZPoly& gamma2,
                           lie::Orientation sign = lie::Orientation::Positive);

struct CensusRow {
  std::string label;
  bool in_image = false;
};

struct Census {
  Group group = Group::SO33;
  int genus = 2;
  std::vector<CensusRow> rows;
  std::uint64_t hitchin_source = 0;  // Hitchin components upstairs
  std::uint64_t hitchin_target = 0;
  std::uint64_t total_components = 0;
};

/// SO33: w₂ labels (b₁,b₂) plus the Hitchin tally. SO22: parity classes of
/// (c₁,c₂).
Census component_census(Group which, int genus);

} // namespace isolab::invariants
