#include "isolab/verify.hpp"

#include <cstdlib>
#include <functional>
#include <set>

#include "isolab/batch.hpp"
#include "isolab/covers.hpp"
#include "isolab/errors.hpp"
#include "isolab/invariants.hpp"
#include "isolab/sampling.hpp"
#include "isolab/spectral.hpp"

namespace isolab::verify {

namespace {

constexpr std::size_t max_failures = 5;

using Sample = std::function<batch::SampleOutcome(std::mt19937_64&, std::size_t)>;

class Recorder {
 public:
  Recorder(int id, std::string title, const Options& opt) : opt_(opt) {
    r_.id = id;
    r_.title = std::move(title);
  }

  void check(const std::string& name, bool ok, const std::string& what = "") {
    Check& c = find(name);
    ++c.cases;
    if (!ok) fail(c, what.empty() ? name : what);
  }

  // Fixed check that may throw.
  void probe(const std::string& name, const std::function<bool()>& f) {
    try {
      check(name, f());
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

  void batch(const std::string& name, std::size_t n, std::uint64_t salt, const Sample& s) {
    const std::uint64_t seed = opt_.seed ^ (salt * 0x9e3779b97f4a7c15ULL);
    const auto out = opt_.parallel ? batch::run_parallel(n, seed, s) : batch::run_serial(n, seed, s);
    Check& c = find(name);
    for (std::size_t i = 0; i < out.size(); ++i) {
      ++c.cases;
      if (out[i]) fail(c, "sample " + std::to_string(i) + ": " + *out[i]);
    }
  }

  CriterionResult take() { return std::move(r_); }

 private:
  Check& find(const std::string& name) {
    for (auto& c : r_.checks)
      if (c.name == name) return c;
    r_.checks.push_back(Check{name, true, 0, {}});
    return r_.checks.back();
  }

  static void fail(Check& c, const std::string& what) {
    c.passed = false;
    if (c.failures.size() < max_failures) c.failures.push_back(what);
  }

  const Options& opt_;
  CriterionResult r_;
};

std::size_t half(const Options& o) { return std::max<std::size_t>(1, o.samples / 2); }

batch::SampleOutcome expect(bool ok, const char* what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

CurvePoly eta_poly(std::initializer_list<long> coeffs) {
  std::vector<ZPoly> c;
  for (long v : coeffs) c.push_back(ZPoly(Rational(v, 1)));
  return CurvePoly(std::move(c));
}

ZPoly constant(long v) { return ZPoly(Rational(v, 1)); }

spectral::BaseSL4 random_sl4(std::mt19937_64& rng, int deg) {
  return {sampling::zpoly(rng, deg), sampling::zpoly(rng, deg), sampling::zpoly(rng, deg)};
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

CriterionResult rank2_base_map(const Options& opt) {
  using namespace spectral;
  Recorder r(1, "rank 2 base map equals the resultant oracle", opt);
  const auto sign = opt.orientation;
  r.batch("so4_base quartic equals so4_oracle (deg <= 6)", opt.samples, 1, [sign](auto& rng, std::size_t) {
    BaseSL2Pair p{sampling::zpoly(rng, 6), sampling::zpoly(rng, 6)};
    return expect(so4_base(p, sign).quartic() == so4_oracle(p), "quartic differs from oracle");
  });
  const BaseSL2Pair fixed{constant(-1), constant(-4)};
  const CurvePoly want = eta_poly({9, 0, -10, 0, 1});
  r.probe("(a1,a2) = (-1,-4) gives eta^4 - 10 eta^2 + 9", [&] {
    return so4_base(fixed, sign).quartic() == want && so4_oracle(fixed) == want;
  });
  return r.take();
}

CriterionResult rank3_base_map(const Options& opt) {
  using namespace spectral;
  Recorder r(2, "rank 3 base map equals the pairwise-sum oracle", opt);
  const auto sign = opt.orientation;
  r.batch("so6_base sextic equals so6_oracle (deg <= 6)", opt.samples, 2, [sign](auto& rng, std::size_t) {
    const BaseSL4 b = random_sl4(rng, 6);
    const BaseSO6 s = so6_base(b, sign);
    if (!(s.b2 == b.a2 * b.a2 - Rational(4) * b.a4)) return expect(false, "b2 differs from a2^2 - 4 a4");
    if (!(s.sextic().coeff(0) == -(b.a3 * b.a3))) return expect(false, "constant term differs from -a3^2");
    return expect(s.sextic() == so6_oracle(b), "sextic differs from oracle");
  });
  r.probe("(a2,a3,a4) = (-5,0,4) gives eta^6 - 10 eta^4 + 9 eta^2", [&] {
    const BaseSL4 b{constant(-5), ZPoly(), constant(4)};
    const CurvePoly want = eta_poly({0, 0, 9, 0, -10, 0, 1});
    return so6_base(b, sign).sextic() == want && so6_oracle(b) == want;
  });
  r.probe("(a2,a3,a4) = (0,1,0) gives eta^6 - 1", [&] {
    const BaseSL4 b{ZPoly(), constant(1), ZPoly()};
    const CurvePoly want = eta_poly({-1, 0, 0, 0, 0, 0, 1});
    return so6_base(b, sign).sextic() == want && so6_oracle(b) == want;
  });
  return r.take();
}

CriterionResult lie_spectral(const Options& opt) {
  using namespace spectral;
  Recorder r(3, "characteristic polynomials of the Lie maps match the oracles", opt);
  r.batch("char_poly(d_iso3(companion)) equals so6_oracle", half(opt), 3, [](auto& rng, std::size_t) {
    const BaseSL4 b = random_sl4(rng, 2);
    const ZMatrix c = companion(b.quartic());
    const ZMatrix x = lie::d_iso3(c);
    if (!(char_poly(x) == so6_oracle(b))) return expect(false, "char_poly differs from oracle");
    const ZPoly pf = pfaffian(lift<ZPoly>(lie::q6().gram) * x);
    return expect(pf == -b.a3, "Pf(Q6 X) differs from -a3");
  });
  r.batch("char_poly(d_iso2(companions)) equals so4_oracle", half(opt), 4, [](auto& rng, std::size_t) {
    const BaseSL2Pair p{sampling::zpoly(rng, 3), sampling::zpoly(rng, 3)};
    const ZMatrix c1 = companion(CurvePoly(std::vector<ZPoly>{p.a1, ZPoly(), ZPoly(Rational(1))}));
    const ZMatrix c2 = companion(CurvePoly(std::vector<ZPoly>{p.a2, ZPoly(), ZPoly(Rational(1))}));
    return expect(char_poly(lie::d_iso2(c1, c2)) == so4_oracle(p), "char_poly differs from oracle");
  });
  return r.take();
}

CriterionResult structure(const Options& opt) {
  using namespace lie;
  Recorder r(4, "Lie and group maps preserve the quadratic forms", opt);
  r.batch("d_iso2 and d_iso3 images are skew for Q4 and Q6", half(opt), 5, [](auto& rng, std::size_t) {
    const QMatrix a1 = sampling::traceless(rng, 2), a2 = sampling::traceless(rng, 2);
    const QMatrix a = sampling::traceless(rng, 4);
    if (!is_skew_for(d_iso2(a1, a2), q4().gram)) return expect(false, "d_iso2 image not skew");
    return expect(is_skew_for(d_iso3(a), q6().gram), "d_iso3 image not skew");
  });
  r.batch("d_iso3 preserves brackets", half(opt), 6, [](auto& rng, std::size_t) {
    const QMatrix a = sampling::traceless(rng, 4), b = sampling::traceless(rng, 4);
    return expect(d_iso3(commutator(a, b)) == commutator(d_iso3(a), d_iso3(b)), "bracket not preserved");
  });
  r.batch("iso2_group images preserve Q4, have det 1, compose, kill (-I,-I)", half(opt), 7,
          [](auto& rng, std::size_t) {
            const QMatrix a1 = sampling::special_linear(rng, 2), a2 = sampling::special_linear(rng, 2);
            const QMatrix b1 = sampling::special_linear(rng, 2), b2 = sampling::special_linear(rng, 2);
            const QMatrix x = iso2_group(a1, a2);
            if (!preserves_form(x, q4().gram)) return expect(false, "form not preserved");
            if (!determinant(x).is_one()) return expect(false, "det != 1");
            if (!(iso2_group(a1 * b1, a2 * b2) == x * iso2_group(b1, b2))) return expect(false, "not a homomorphism");
            return expect(iso2_group(-a1, -a2) == x, "(-I,-I) not in the kernel");
          });
  r.batch("iso3_group images preserve Q6, have det 1, compose, kill -I", half(opt), 8, [](auto& rng, std::size_t) {
    const QMatrix a = sampling::special_linear(rng, 4), b = sampling::special_linear(rng, 4);
    const QMatrix y = iso3_group(a);
    if (!preserves_form(y, q6().gram)) return expect(false, "form not preserved");
    if (!determinant(y).is_one()) return expect(false, "det != 1");
    if (!(iso3_group(a * b) == y * iso3_group(b))) return expect(false, "not a homomorphism");
    return expect(iso3_group(-a) == y, "-I not in the kernel");
  });
  r.probe("-I4 maps to I6 and (-I2,-I2) to I4", [] {
    return iso3_group(-QMatrix::identity(4)) == QMatrix::identity(6) &&
           iso2_group(-QMatrix::identity(2), -QMatrix::identity(2)) == QMatrix::identity(4);
  });
  return r.take();
}

CriterionResult alpha_pfaffian(const Options& opt) {
  using namespace lie;
  Recorder r(5, "split-basis alpha block and Pfaffian", opt);
  r.batch("split conjugate of d_iso3(a) is [[0,alpha],[alpha^t,0]]", half(opt), 9, [](auto& rng, std::size_t) {
    const QMatrix a = sampling::symmetric_traceless(rng, 4);
    const QMatrix al = alpha_block(a);
    const QMatrix x = to_split_basis(d_iso3(a));
    const bool ok = x.block(0, 0, 3, 3).is_zero() && x.block(3, 3, 3, 3).is_zero() && x.block(0, 3, 3, 3) == al &&
                    x.block(3, 0, 3, 3) == al.transpose();
    return expect(ok, "conjugate has the wrong block shape");
  });
  r.batch("Pf(Q6 d_iso3(a))^2 equals det(alpha)^2, with Pf = -det(alpha)", half(opt), 10,
          [](auto& rng, std::size_t) {
            const QMatrix a = sampling::symmetric_traceless(rng, 4);
            const Rational pf = pfaffian(q6().gram * d_iso3(a));
            const Rational da = determinant(alpha_block(a));
            if (!(pf * pf == da * da)) return expect(false, "Pf^2 != det(alpha)^2");
            return expect(pf == -da, "Pf / det(alpha) sign is not -1");
          });
  r.probe("alpha of diag(1,1,-1,-1) is 2 e13", [] {
    QMatrix d = QMatrix::diagonal({Rational(1), Rational(1), Rational(-1), Rational(-1)});
    return alpha_block(d) == QMatrix{{0, 0, 2}, {0, 0, 0}, {0, 0, 0}};
  });
  return r.take();
}

bool hodge_ok(const lie::HodgeSplit& h) {
  return h.star * h.star == QMatrix::identity(6) && h.plus_basis.size() == 3 && h.minus_basis.size() == 3 &&
         !determinant(h.q_plus.gram).is_zero() && !determinant(h.q_minus.gram).is_zero();
}

CriterionResult hodge(const Options& opt) {
  using namespace lie;
  Recorder r(6, "Hodge star splitting and block Higgs assembly", opt);
  r.probe("standard form: star^2 = I, self-dual rank 3, q6 = +-2I on the halves", [] {
    const HodgeSplit h = hodge_split({QMatrix::identity(4), Orientation::Positive}, Orientation::Positive);
    const QMatrix two = QMatrix::diagonal({Rational(2), Rational(2), Rational(2)});
    return hodge_ok(h) && h.q_plus.gram == two && h.q_minus.gram == -two;
  });
  r.probe("reversing orientation swaps the eigenspaces", [] {
    const HodgeSplit p = hodge_split({QMatrix::identity(4), Orientation::Positive}, Orientation::Positive);
    const HodgeSplit n = hodge_split({QMatrix::identity(4), Orientation::Negative}, Orientation::Negative);
    return p.plus_basis == n.minus_basis && p.minus_basis == n.plus_basis;
  });
  r.batch("random q = B^t B, both orientations", half(opt), 11, [](auto& rng, std::size_t) {
    QMatrix b = sampling::qmatrix(rng, 4, 4);
    while (determinant(b).is_zero()) b = sampling::qmatrix(rng, 4, 4);
    const QuadraticForm q{b.transpose() * b, Orientation::Positive};
    for (Orientation o : {Orientation::Positive, Orientation::Negative})
      if (!hodge_ok(hodge_split(q, o))) return expect(false, "Hodge split failed");
    return expect(true, "");
  });
  r.batch("block Higgs field keeps the characteristic polynomial", half(opt), 12, [](auto& rng, std::size_t) {
    const ZMatrix a = sampling::symmetric_traceless_z(rng, 4, 2);
    const HiggsBlockField f = build_block_higgs_so33(a);
    const bool shape = f.alpha() == alpha_block(a) && f.diagonal_blocks_zero() && f.is_block_antisymmetric();
    if (!shape) return expect(false, "block shape");
    return expect(char_poly(f.phi) == char_poly(d_iso3(a)), "char_poly changed");
  });
  return r.take();
}

CriterionResult ramification(const Options& opt) {
  using namespace covers;
  Recorder r(7, "pair-fiber ramification identity and twist degrees", opt);
  for (const FiberModel& f : {FiberModel::regular("x", 4), FiberModel::generic_branch("x", 4)}) {
    const std::string kind = to_string(f.kind);
    r.probe("p1*R + p2*R = sym*R6 + 2 R0 on a " + kind + " fiber", [&] { return ramification_check(f).holds; });
  }
  r.probe("branch fiber twist degrees: 6 = 4 + 2", [] {
    const TwistLedger t = twist_ledger(TwistContext::SO6, FiberKind::GenericBranch);
    return t.balanced && t.entry("pullback_sum") == 6 && t.entry("sym_pullback") == 4 && t.entry("two_r0") == 2;
  });
  for (TwistContext c : {TwistContext::SL4, TwistContext::SO4, TwistContext::SO6})
    for (FiberKind k : {FiberKind::Regular, FiberKind::GenericBranch})
      r.probe("twist ledgers balance for every context and fiber kind",
              [&] { return twist_ledger(c, k).balanced; });
  return r.take();
}

covers::Divisor on_fiber(const covers::FiberModel& f, const std::vector<long long>& w) {
  covers::Divisor d;
  for (std::size_t i = 0; i < w.size(); ++i) d.add(f.points[i].label, w[i]);
  return d;
}

std::vector<long long> weight_vector(std::size_t index, std::size_t n) {
  std::vector<long long> w(n);
  for (auto& v : w) {
    v = static_cast<long long>(index % 5) - 2;
    index /= 5;
  }
  return w;
}

CriterionResult prym(const Options& opt) {
  using namespace covers;
  Recorder r(8, "correspondence push preserves Prym divisors", opt);
  for (const FiberModel& f : {FiberModel::regular("x", 4), FiberModel::generic_branch("x", 4)}) {
    const SymFiber sf = symmetrize(self_product_minus_diagonal(f));
    const std::size_t n = f.points.size();
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 5;
    // each index decodes to one weight vector in {-2..2}^n; the rng is unused
    r.batch("Nm_sigma(push D) = 0 exactly when Nm_pi(D) = 0, " + to_string(f.kind) + " fiber", total, 13,
            [&](auto&, std::size_t i) {
              const Divisor d = on_fiber(f, weight_vector(i, n));
              const bool in_prym = norm_pi(f, d).is_zero();
              const bool pushed_zero = norm_sigma(sf, correspondence_push(f, d)).is_zero();
              return expect(in_prym == pushed_zero, "norm of the push disagrees with the norm of D");
            });
    r.check("sigma is a fixed-point-free involution on the Sym fiber",
            sf.sigma_is_involution() && sf.sigma_fixed_point_free());
  }
  return r.take();
}

CriterionResult invariant_calculus(const Options& opt) {
  using namespace invariants;
  Recorder r(9, "Toledo, Milnor-Wood, preimage counts and census", opt);
  r.probe("toledo_map is injective on [-10,10]^2 with image the parity-matched pairs", [] {
    std::set<std::pair<long long, long long>> image;
    for (long long a = -10; a <= 10; ++a)
      for (long long b = -10; b <= 10; ++b) {
        const ToledoPair t = toledo_map({a, b, 2});
        if (!image.insert({t.first, t.second}).second) return false;
        if ((t.first - t.second) % 2 != 0) return false;
      }
    for (long long c1 = -20; c1 <= 20; ++c1)
      for (long long c2 = -20; c2 <= 20; ++c2) {
        if ((c1 - c2) % 2 != 0) continue;
        const ToledoPair d = toledo_preimage({c1, c2, 2});
        const bool in_box = std::llabs(d.first) <= 10 && std::llabs(d.second) <= 10;
        if (in_box != (image.count({c1, c2}) == 1)) return false;
      }
    return true;
  });
  r.probe("Milnor-Wood verdicts |d_i| <= g-1 and |deg M_i| <= 2g-2", [] {
    for (int g = 2; g <= 6; ++g)
      for (long long a = -2 * g; a <= 2 * g; ++a)
        for (long long b = -2 * g; b <= 2 * g; ++b) {
          const long long m = std::max(std::llabs(a), std::llabs(b));
          if (milnor_wood_check({a, b, g}, Group::SL2xSL2) != (m <= g - 1)) return false;
          if (milnor_wood_check({a, b, g}, Group::SO22) != (m <= 2 * g - 2)) return false;
        }
    return !milnor_wood_check({2, 0, 2}, Group::SL2xSL2) && milnor_wood_check({2, 2, 2}, Group::SO22);
  });
  for (int g = 2; g <= 3; ++g)
    r.probe("I3 preimages enumerate to 2^(2g) for g = " + std::to_string(g), [g] {
      const PreimageCount p = preimage_count(Isogeny::I3, g);
      const std::uint64_t want = std::uint64_t{1} << (2 * g);
      return p.consistent() && *p.enumerated == want && p.witnesses.size() == want &&
             count_two_torsion_serial(g) == count_two_torsion_parallel(g);
    });
  r.probe("SO(3,3) census has exactly the (b,b) labels in the image", [] {
    const Census c = component_census(Group::SO33, 2);
    for (const auto& row : c.rows) {
      const bool diagonal = row.label == "(0,0)" || row.label == "(1,1)";
      if (row.in_image != diagonal) return false;
    }
    return c.rows.size() == 4;
  });
  r.probe("I2 count reports 2^(2g+1) stated, 2^(2g) in the proof, 2^(4g) enumerated", [] {
    for (int g = 2; g <= 3; ++g) {
      const PreimageCount p = preimage_count(Isogeny::I2, g);
      const std::uint64_t two_g = std::uint64_t{1} << (2 * g);
      if (p.stated != 2 * two_g || !p.proof_sentence || *p.proof_sentence != two_g) return false;
      if (!p.enumerated || *p.enumerated != two_g * two_g) return false;
      if (count_square_roots_serial(g) != count_square_roots_parallel(g)) return false;
    }
    return true;
  });
  return r.take();
}

CriterionResult so22_assembly(const Options& opt) {
  using namespace invariants;
  Recorder r(10, "SO(2,2) assembly matches the rank 2 base map", opt);
  const auto sign = opt.orientation;
  r.batch("assembled quartic equals so4_base(-b1 g1, -b2 g2)", half(opt), 14, [sign](auto& rng, std::size_t) {
    const ZPoly b1 = sampling::zpoly(rng, 3), g1 = sampling::zpoly(rng, 3);
    const ZPoly b2 = sampling::zpoly(rng, 3), g2 = sampling::zpoly(rng, 3);
    const long long d1 = sampling::integer(rng, -3, 3), d2 = sampling::integer(rng, -3, 3);
    const So22Assembly a = assemble_so22(d1, d2, b1, g1, b2, g2, sign);
    const auto want = spectral::so4_base({-(b1 * g1), -(b2 * g2)}, sign).quartic();
    if (!(char_poly(a.field.phi) == want)) return expect(false, "quartic differs");
    return expect(a.pfaffian == b2 * g2 - b1 * g1, "Pf(Q4 Phi) differs from a1 - a2");
  });
  r.probe("degree labels (d1,d2) -> (d1+d2, d1-d2) agree with toledo_map", [] {
    const ZPoly one(Rational(1));
    for (long long d1 = -3; d1 <= 3; ++d1)
      for (long long d2 = -3; d2 <= 3; ++d2) {
        const So22Assembly a = assemble_so22(d1, d2, one, one, one, one);
        const ToledoPair t = toledo_map({d1, d2, 2});
        const auto& l = a.field.degree_labels;
        if (l[2] != std::pair<std::string, long long>{"M1", t.first}) return false;
        if (l[3] != std::pair<std::string, long long>{"M2", t.second}) return false;
      }
    return true;
  });
  return r.take();
}

} // namespace

bool CriterionResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::size_t CriterionResult::cases() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.cases;
  return n;
}

CriterionResult run_criterion(int id, const Options& opt) {
  switch (id) {
  case 1: return rank2_base_map(opt);
  case 2: return rank3_base_map(opt);
  case 3: return lie_spectral(opt);
  case 4: return structure(opt);
  case 5: return alpha_pfaffian(opt);
  case 6: return hodge(opt);
  case 7: return ramification(opt);
  case 8: return prym(opt);
  case 9: return invariant_calculus(opt);
  case 10: return so22_assembly(opt);
  default: throw ValidationError("criterion id must be in 1.." + std::to_string(criterion_count));
  }
}

std::vector<CriterionResult> run_all(const Options& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

} // namespace isolab::verify
