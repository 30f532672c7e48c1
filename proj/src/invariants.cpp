#include "isolab/invariants.hpp"

#include <cstdlib>

#include "isolab/errors.hpp"

namespace isolab::invariants {

namespace {

void require_genus(int g) {
  if (g < 2) throw ValidationError("genus must be at least 2 (got " + std::to_string(g) + ")");
  if (g > 31) throw ValidationError("genus above 31 overflows the counting range");
}

bool even(long long v) { return v % 2 == 0; }

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

// every base-4 digit of `x` (n digits) is 0 or 2, i.e. 2x = 0 in (ℤ/4)^n
bool doubles_to_zero(std::uint64_t x, int n) {
  for (int k = 0; k < n; ++k, x >>= 2)
    if ((x & 1u) != 0) return false;
  return true;
}

void require_enumerable(int g) {
  require_genus(g);
  if (g > max_enumeration_genus)
    throw ValidationError("enumeration is only run for genus <= " + std::to_string(max_enumeration_genus));
}

} // namespace

void W2Label::validate() const {
  if ((b1 != 0 && b1 != 1) || (b2 != 0 && b2 != 1)) throw ValidationError("w2 labels must be 0 or 1");
}

void TorsionVector::validate(int genus) const {
  if (bits.size() != static_cast<std::size_t>(2 * genus))
    throw ValidationError("torsion vector must have length 2g = " + std::to_string(2 * genus));
  for (auto b : bits)
    if (b > 1) throw ValidationError("torsion vector entries must be 0 or 1");
}

Group group_from_string(const std::string& s) {
  if (s == "SL2xSL2" || s == "sl2xsl2") return Group::SL2xSL2;
  if (s == "SO22" || s == "SO0(2,2)" || s == "so22") return Group::SO22;
  if (s == "SO33" || s == "SO0(3,3)" || s == "so33") return Group::SO33;
  throw ValidationError("unknown group '" + s + "' (expected SL2xSL2, SO22 or SO33)");
}

std::string to_string(Group g) {
  switch (g) {
  case Group::SL2xSL2: return "SL2xSL2";
  case Group::SO22: return "SO0(2,2)";
  case Group::SO33: return "SO0(3,3)";
  }
  return "?";
}

Isogeny isogeny_from_string(const std::string& s) {
  if (s == "I2" || s == "i2") return Isogeny::I2;
  if (s == "I3" || s == "i3") return Isogeny::I3;
  throw ValidationError("unknown isogeny '" + s + "' (expected I2 or I3)");
}

ToledoPair toledo_map(const ToledoPair& d) { return {d.first + d.second, d.first - d.second, d.genus}; }

ToledoPair toledo_preimage(const ToledoPair& c) {
  if (!even(c.first - c.second)) throw ValidationError("c1 and c2 have different parity; no preimage");
  return {(c.first + c.second) / 2, (c.first - c.second) / 2, c.genus};
}

bool milnor_wood_check(const ToledoPair& p, Group which) {
  require_genus(p.genus);
  long long bound;
  switch (which) {
  case Group::SL2xSL2: bound = p.genus - 1; break;
  case Group::SO22: bound = 2LL * p.genus - 2; break;
  default: throw ValidationError("no Milnor-Wood bound is implemented for " + to_string(which));
  }
  return std::llabs(p.first) <= bound && std::llabs(p.second) <= bound;
}

bool liftable(const ToledoPair& c) { return even(c.first - c.second) && milnor_wood_check(c, Group::SO22); }

bool liftable(const W2Label& b) {
  b.validate();
  return b.b1 == b.b2;
}

std::uint64_t count_two_torsion_serial(int genus) {
  require_enumerable(genus);
  const int n = 2 * genus;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < pow4(n); ++x)
    if (doubles_to_zero(x, n)) ++count;
  return count;
}

std::uint64_t count_two_torsion_parallel(int genus) {
  require_enumerable(genus);
  const int n = 2 * genus;
  const long long size = static_cast<long long>(pow4(n));
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long x = 0; x < size; ++x)
    if (doubles_to_zero(static_cast<std::uint64_t>(x), n)) ++count;
  return count;
}

std::uint64_t count_square_roots_serial(int genus) {
  require_enumerable(genus);
  const int n = 2 * genus;
  std::uint64_t count = 0;
  for (std::uint64_t l1 = 0; l1 < pow4(n); ++l1)
    for (std::uint64_t l2 = 0; l2 < pow4(n); ++l2)
      if (doubles_to_zero(l1, n) && doubles_to_zero(l2, n)) ++count;
  return count;
}

std::uint64_t count_square_roots_parallel(int genus) {
  require_enumerable(genus);
  const int n = 2 * genus;
  const std::uint64_t side = pow4(n);
  const long long size = static_cast<long long>(side * side);
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long k = 0; k < size; ++k) {
    const auto u = static_cast<std::uint64_t>(k);
    if (doubles_to_zero(u / side, n) && doubles_to_zero(u % side, n)) ++count;
  }
  return count;
}

PreimageCount preimage_count(Isogeny which, int genus) {
  require_genus(genus);
  PreimageCount p;
  p.which = which;
  p.genus = genus;
  const std::uint64_t two_g = std::uint64_t{1} << (2 * genus);
  if (which == Isogeny::I3) {
    p.stated = two_g;
    if (genus <= max_enumeration_genus) {
      p.enumerated = count_two_torsion_parallel(genus);
      const int n = 2 * genus;
      for (std::uint64_t x = 0; x < pow4(n); ++x) {
        if (!doubles_to_zero(x, n)) continue;
        TorsionVector t;
        for (int k = 0; k < n; ++k) t.bits.push_back(static_cast<std::uint8_t>((x >> (2 * k + 1)) & 1u));
        p.witnesses.push_back(std::move(t));
      }
    }
  } else {
    p.stated = two_g << 1;
    p.proof_sentence = two_g;
    if (genus <= max_enumeration_genus) p.enumerated = count_square_roots_parallel(genus);
  }
  return p;
}

So22Assembly assemble_so22(long long n1_degree, long long n2_degree, const ZPoly& beta1, const ZPoly& gamma1,
                           const ZPoly& beta2, const ZPoly& gamma2, lie::Orientation sign) {
  const ZMatrix phi1{{ZPoly(), beta1}, {gamma1, ZPoly()}};
  const ZMatrix phi2{{ZPoly(), beta2}, {gamma2, ZPoly()}};
  const ZMatrix lex = lie::d_iso2(phi1, phi2);

  // lexicographic tensor basis (n1n2, n1n2*, n1*n2, n1*n2*) reordered so the
  // first summand is N1N2 ⊕ (N1N2)⁻¹ and the second N1N2⁻¹ ⊕ N1⁻¹N2
  const QMatrix p = from_columns<Rational>({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const QMatrix form = p.transpose() * lie::q4().gram * p;

  So22Assembly out;
  HiggsBlockField& f = out.field;
  f.phi = lift<ZPoly>(p.transpose()) * lex * lift<ZPoly>(p);
  f.split = 2;
  f.q1 = form.block(0, 0, 2, 2);
  f.q2 = form.block(2, 2, 2, 2);
  f.degree_labels = {{"N1", n1_degree},
                     {"N2", n2_degree},
                     {"M1", n1_degree + n2_degree},
                     {"M2", n1_degree - n2_degree}};

  if (!f.diagonal_blocks_zero()) throw InternalError("assemble_so22: diagonal blocks are not zero");
  if (!f.is_block_antisymmetric()) throw InternalError("assemble_so22: lower block is not the orthogonal -alpha^T");
  if (!(f.alpha() == ZMatrix{{beta2, beta1}, {gamma1, gamma2}}))
    throw InternalError("assemble_so22: alpha block differs from [[b2,b1],[g1,g2]]");

  out.base = spectral::so4_base({-(beta1 * gamma1), -(beta2 * gamma2)}, sign);
  if (!(char_poly(f.phi) == out.base.quartic()))
    throw InternalError("assemble_so22: characteristic polynomial differs from the SO(4) base quartic");
  out.pfaffian = pfaffian(lift<ZPoly>(lie::q4().gram) * lex);
  return out;
}

Census component_census(Group which, int genus) {
  require_genus(genus);
  Census c;
  c.group = which;
  c.genus = genus;
  switch (which) {
  case Group::SO33:
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2)
        c.rows.push_back({"(" + std::to_string(b1) + "," + std::to_string(b2) + ")", liftable(W2Label{b1, b2})});
    c.hitchin_source = std::uint64_t{1} << (2 * genus);
    c.hitchin_target = 1;
    c.total_components = c.rows.size() + c.hitchin_target;
    break;
  case Group::SO22:
    for (int p1 = 0; p1 < 2; ++p1)
      for (int p2 = 0; p2 < 2; ++p2)
        c.rows.push_back({"(" + std::to_string(p1) + "," + std::to_string(p2) + ") mod 2", p1 == p2});
    c.total_components = c.rows.size();
    break;
  default: throw ValidationError("no component census for " + to_string(which));
  }
  return c;
}

} // namespace isolab::invariants
