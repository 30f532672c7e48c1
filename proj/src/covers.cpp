#include "isolab/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "isolab/errors.hpp"

namespace isolab::covers {

// Divisor -------------------------------------------------------------------

Divisor::Divisor(std::initializer_list<std::pair<const std::string, long long>> init) {
  for (const auto& [k, v] : init) add(k, v);
}

long long Divisor::weight(const std::string& label) const {
  auto it = w_.find(label);
  return it == w_.end() ? 0 : it->second;
}

void Divisor::add(const std::string& label, long long w) {
  if (w == 0) return;
  long long& slot = w_[label];
  slot += w;
  if (slot == 0) w_.erase(label);
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [k, v] : w_) d += v;
  return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [k, v] : o.w_) add(k, v);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [k, v] : o.w_) add(k, -v);
  return *this;
}

Divisor operator*(long long s, const Divisor& d) {
  Divisor out;
  for (const auto& [k, v] : d.w_) out.add(k, s * v);
  return out;
}

std::string Divisor::str() const {
  if (w_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : w_) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    first = false;
    long long a = v < 0 ? -v : v;
    if (a != 1) os << a << '*';
    os << k;
  }
  return os.str();
}

// Fibers --------------------------------------------------------------------

std::string to_string(FiberKind k) { return k == FiberKind::Regular ? "Regular" : "GenericBranch"; }

FiberKind fiber_kind_from_string(const std::string& s) {
  if (s == "Regular") return FiberKind::Regular;
  if (s == "GenericBranch") return FiberKind::GenericBranch;
  throw ValidationError("unknown fiber kind '" + s + "' (expected Regular or GenericBranch)");
}

int FiberModel::degree() const {
  int d = 0;
  for (const auto& p : points) d += p.mult;
  return d;
}

int FiberModel::mult(const std::string& label) const {
  for (const auto& p : points)
    if (p.label == label) return p.mult;
  throw ValidationError("point '" + label + "' is not in the fiber over " + base_label);
}

bool FiberModel::contains(const std::string& label) const {
  return std::any_of(points.begin(), points.end(), [&](const FiberPoint& p) { return p.label == label; });
}

void FiberModel::validate() const {
  std::set<std::string> seen;
  int doubles = 0, others = 0;
  for (const auto& p : points) {
    if (p.label.empty()) throw ValidationError("fiber point with an empty label");
    if (!seen.insert(p.label).second) throw ValidationError("duplicate fiber point label '" + p.label + "'");
    if (p.mult < 1) throw ValidationError("fiber point '" + p.label + "' has non-positive multiplicity");
    if (p.mult == 2) ++doubles;
    else if (p.mult != 1) ++others;
  }
  if (points.empty()) throw ValidationError("empty fiber");
  const bool regular = doubles == 0 && others == 0;
  const bool branch = doubles == 1 && others == 0;
  if (kind == FiberKind::Regular && !regular)
    throw ValidationError("non-generic fiber: Regular fiber over " + base_label + " has a multiple point");
  if (kind == FiberKind::GenericBranch && !branch)
    throw ValidationError("non-generic fiber over " + base_label +
                          ": expected exactly one double point and simple points otherwise");
}

FiberModel FiberModel::regular(std::string base, int degree, std::string curve, std::string prefix) {
  FiberModel f{std::move(base), FiberKind::Regular, {}, std::move(curve)};
  for (int i = 1; i <= degree; ++i) f.points.push_back({prefix + std::to_string(i), 1});
  return f;
}

FiberModel FiberModel::generic_branch(std::string base, int degree, std::string curve, std::string prefix) {
  if (degree < 2) throw ValidationError("a branch fiber needs degree at least 2");
  FiberModel f{std::move(base), FiberKind::GenericBranch, {}, std::move(curve)};
  f.points.push_back({prefix + "1", 2});
  for (int i = 2; i <= degree - 1; ++i) f.points.push_back({prefix + std::to_string(i), 1});
  return f;
}

std::size_t FiberModel::double_point() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].mult == 2) return i;
  throw ValidationError("fiber over " + base_label + " has no double point");
}

int PairFiber::degree() const {
  int d = 0;
  for (const auto& p : points) d += p.mult;
  return d;
}

std::vector<std::string> PairFiber::labels() const {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p.label());
  return out;
}

int SymFiber::degree() const {
  int d = 0;
  for (const auto& p : points) d += p.mult;
  return d;
}

std::vector<std::string> SymFiber::labels() const {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p.label());
  return out;
}

bool SymFiber::sigma_is_involution() const {
  if (sigma.size() != points.size()) return false;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] >= sigma.size() || sigma[sigma[i]] != i) return false;
  return true;
}

bool SymFiber::sigma_fixed_point_free() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] == i) return false;
  return true;
}

Involution involution_of(const SymFiber& f) {
  if (!f.sigma_is_involution()) throw ValidationError("Sym fiber carries no valid involution");
  Involution s;
  for (std::size_t i = 0; i < f.points.size(); ++i) s[f.points[i].label()] = f.points[f.sigma[i]].label();
  return s;
}

Involution involution_of(const PairFiber& f) {
  if (f.involution.size() != f.points.size()) throw ValidationError("pair fiber carries no involution");
  Involution s;
  for (std::size_t i = 0; i < f.points.size(); ++i) s[f.points[i].label()] = f.points[f.involution[i]].label();
  return s;
}

// Products and symmetrization -------------------------------------------------

namespace {

// σ on a degree 2 fiber: swap the two simple points, fix a double point.
std::size_t deck(const FiberModel& f, std::size_t i) { return f.points.size() == 2 ? 1 - i : i; }

std::size_t index_of(const FiberModel& f, const std::string& label) {
  for (std::size_t i = 0; i < f.points.size(); ++i)
    if (f.points[i].label == label) return i;
  throw ValidationError("point '" + label + "' is not in the fiber over " + f.base_label);
}

void require_support(const Divisor& d, const std::vector<std::string>& labels, const std::string& where) {
  for (const auto& [k, v] : d.weights())
    if (std::find(labels.begin(), labels.end(), k) == labels.end())
      throw ValidationError("divisor support point '" + k + "' is not in " + where);
}

std::vector<std::string> labels_of(const FiberModel& f) {
  std::vector<std::string> out;
  for (const auto& p : f.points) out.push_back(p.label);
  return out;
}

} // namespace

PairFiber fiber_product(const FiberModel& f1, const FiberModel& f2) {
  f1.validate();
  f2.validate();
  if (f1.degree() != 2 || f2.degree() != 2) throw ValidationError("fiber_product: both factors must have degree 2");
  if (f1.base_label != f2.base_label)
    throw ValidationError("fiber_product: base labels differ ('" + f1.base_label + "' vs '" + f2.base_label + "')");
  if (!f1.curve.empty() && f1.curve == f2.curve)
    throw ValidationError("fiber_product: both factors come from the same curve '" + f1.curve + "'");
  if (f1.kind == FiberKind::GenericBranch && f2.kind == FiberKind::GenericBranch)
    throw ValidationError("non-generic fiber: both factors branch over " + f1.base_label);

  PairFiber pf;
  pf.base_label = f1.base_label;
  pf.factors = {f1, f2};
  const std::size_t n2 = f2.points.size();
  for (const auto& a : f1.points)
    for (const auto& b : f2.points) pf.points.push_back({a.label, b.label, std::lcm(a.mult, b.mult)});
  for (std::size_t i = 0; i < f1.points.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) pf.involution.push_back(deck(f1, i) * n2 + deck(f2, j));
  return pf;
}

PairFiber self_product_minus_diagonal(const FiberModel& f) {
  f.validate();
  if (f.degree() != 4) throw ValidationError("self_product_minus_diagonal: expected a degree 4 fiber");
  PairFiber pf;
  pf.base_label = f.base_label;
  pf.diagonal_removed = true;
  pf.factors = {f};
  for (const auto& a : f.points)
    for (const auto& b : f.points) {
      if (a.label == b.label) {
        // at a double point the second branch of the self product survives
        if (a.mult == 2) pf.points.push_back({a.label, a.label, 2});
        continue;
      }
      pf.points.push_back({a.label, b.label, std::lcm(a.mult, b.mult)});
    }
  if (pf.degree() != 12) throw InternalError("self_product_minus_diagonal: degree is not 12");
  return pf;
}

SymFiber symmetrize(const PairFiber& pf) {
  if (!pf.diagonal_removed || pf.factors.size() != 1)
    throw ValidationError("symmetrize: expected a self product with the diagonal removed");
  const FiberModel& f = pf.factors.front();
  SymFiber sf;
  sf.base_label = pf.base_label;
  sf.kind = f.kind;

  auto pair_mult = [&](const std::string& a, const std::string& b) {
    for (const auto& p : pf.points)
      if (p.first == a && p.second == b) return p.mult;
    throw InternalError("symmetrize: missing pair point");
  };
  const std::size_t n = f.points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto& a = f.points[i].label;
      const auto& b = f.points[j].label;
      if (i == j) {
        if (f.points[i].mult == 2) sf.points.push_back({a, a, pair_mult(a, a) / 2});  // τ fixes (a,a)
        continue;
      }
      sf.points.push_back({a, b, pair_mult(a, b)});
    }

  // σ sends a pair to the complementary pair; a double point counts twice
  std::vector<std::string> spread;
  for (const auto& p : f.points)
    for (int k = 0; k < p.mult; ++k) spread.push_back(p.label);
  auto find_sym = [&](std::string a, std::string b) {
    if (index_of(f, a) > index_of(f, b)) std::swap(a, b);
    for (std::size_t k = 0; k < sf.points.size(); ++k)
      if (sf.points[k].first == a && sf.points[k].second == b) return k;
    throw InternalError("symmetrize: complement is not a Sym point");
  };
  for (const auto& sp : sf.points) {
    std::vector<std::string> rest = spread;
    rest.erase(std::find(rest.begin(), rest.end(), sp.first));
    rest.erase(std::find(rest.begin(), rest.end(), sp.second));
    sf.sigma.push_back(find_sym(rest[0], rest[1]));
  }
  if (sf.degree() != 6 || !sf.sigma_is_involution()) throw InternalError("symmetrize: malformed Sym fiber");
  return sf;
}

// Maps between fibers ----------------------------------------------------------

int FiberMap::local_degree(const std::string& source) const {
  const auto img = image.find(source);
  if (img == image.end()) throw ValidationError("point '" + source + "' is not in the source fiber");
  const int ms = source_mult.at(source);
  const int mt = target_mult.at(img->second);
  if (ms % mt != 0) throw InternalError("fiber map: local degree at '" + source + "' is not an integer");
  return ms / mt;
}

Divisor FiberMap::pullback(const Divisor& d) const {
  for (const auto& [k, v] : d.weights())
    if (!target_mult.count(k)) throw ValidationError("divisor support point '" + k + "' is not in the target fiber");
  Divisor out;
  for (const auto& [src, tgt] : image) out.add(src, local_degree(src) * d.weight(tgt));
  return out;
}

Divisor FiberMap::push(const Divisor& d) const {
  Divisor out;
  for (const auto& [k, v] : d.weights()) {
    auto it = image.find(k);
    if (it == image.end()) throw ValidationError("divisor support point '" + k + "' is not in the source fiber");
    out.add(it->second, v);
  }
  return out;
}

Divisor FiberMap::ramification() const {
  Divisor out;
  for (const auto& [src, tgt] : image) out.add(src, local_degree(src) - 1);
  return out;
}

FiberMap projection(const PairFiber& pf, int which) {
  if (which != 1 && which != 2) throw ValidationError("projection index must be 1 or 2");
  const FiberModel& target = pf.factors.size() == 1 ? pf.factors[0] : pf.factors.at(static_cast<std::size_t>(which - 1));
  FiberMap m;
  for (const auto& p : target.points) m.target_mult[p.label] = p.mult;
  for (const auto& p : pf.points) {
    m.image[p.label()] = which == 1 ? p.first : p.second;
    m.source_mult[p.label()] = p.mult;
  }
  return m;
}

FiberMap quotient_map(const PairFiber& pf, const SymFiber& sf) {
  FiberMap m;
  for (const auto& s : sf.points) m.target_mult[s.label()] = s.mult;
  for (const auto& p : pf.points) {
    const SymPoint* hit = nullptr;
    for (const auto& s : sf.points)
      if ((s.first == p.first && s.second == p.second) || (s.first == p.second && s.second == p.first)) hit = &s;
    if (!hit) throw ValidationError("pair point " + p.label() + " has no image in the Sym fiber");
    m.image[p.label()] = hit->label();
    m.source_mult[p.label()] = p.mult;
  }
  return m;
}

FiberMap to_base(const FiberModel& f) {
  FiberMap m;
  m.target_mult[f.base_label] = 1;
  for (const auto& p : f.points) {
    m.image[p.label] = f.base_label;
    m.source_mult[p.label] = p.mult;
  }
  return m;
}

Divisor ramification_divisor(const FiberModel& f) {
  Divisor r;
  for (const auto& p : f.points) r.add(p.label, p.mult - 1);
  return r;
}

Divisor ramification_divisor(const SymFiber& f) {
  Divisor r;
  for (const auto& p : f.points) r.add(p.label(), p.mult - 1);
  return r;
}

RamificationCheck ramification_check(const FiberModel& f) {
  const PairFiber pf = self_product_minus_diagonal(f);
  const SymFiber sf = symmetrize(pf);
  const Divisor r = ramification_divisor(f);
  const FiberMap tau = quotient_map(pf, sf);

  RamificationCheck c;
  c.p1_pullback = projection(pf, 1).pullback(r);
  c.p2_pullback = projection(pf, 2).pullback(r);
  c.sym_pullback = tau.pullback(ramification_divisor(sf));
  c.r0 = tau.ramification();
  c.lhs = c.p1_pullback + c.p2_pullback;
  c.rhs = c.sym_pullback + 2 * c.r0;
  c.holds = c.lhs == c.rhs;
  for (const auto& label : pf.labels()) {
    std::ostringstream os;
    os << label << ": p1*R " << c.p1_pullback.weight(label) << " + p2*R " << c.p2_pullback.weight(label) << " = "
       << c.lhs.weight(label) << "; tau*R6 " << c.sym_pullback.weight(label) << " + 2*R0 "
       << 2 * c.r0.weight(label) << " = " << c.rhs.weight(label);
    c.ledger.push_back(os.str());
  }
  return c;
}

Divisor correspondence_push(const FiberModel& f, const Divisor& d) {
  f.validate();
  require_support(d, labels_of(f), "the fiber over " + f.base_label);
  const SymFiber sf = symmetrize(self_product_minus_diagonal(f));
  Divisor out;
  for (const auto& s : sf.points) {
    const long long da = d.weight(s.first), db = d.weight(s.second);
    long long w;
    if (s.first == s.second) w = da;
    else if (f.mult(s.first) == 2) w = da + 2 * db;
    else if (f.mult(s.second) == 2) w = 2 * da + db;
    else w = da + db;
    out.add(s.label(), w);
  }
  return out;
}

// Norms ----------------------------------------------------------------------

Covering covering_from_string(const std::string& s) {
  if (s == "pi") return Covering::Pi;
  if (s == "sigma") return Covering::Sigma;
  if (s == "sigma4") return Covering::Sigma4;
  throw ValidationError("unknown covering '" + s + "' (expected pi, sigma or sigma4)");
}

std::string to_string(Covering c) {
  switch (c) {
  case Covering::Pi: return "pi";
  case Covering::Sigma: return "sigma";
  case Covering::Sigma4: return "sigma4";
  }
  return "?";
}

std::string orbit_label(const std::string& first, const std::string& second) {
  return "[[" + first + "," + second + "]]";
}

Divisor norm_pi(const FiberModel& f, const Divisor& d) {
  require_support(d, labels_of(f), "the fiber over " + f.base_label);
  return to_base(f).push(d);
}

Divisor norm_sigma(const SymFiber& f, const Divisor& d) {
  if (!f.sigma_is_involution()) throw ValidationError("norm_sigma: Sym fiber carries no valid involution");
  require_support(d, f.labels(), "the Sym fiber over " + f.base_label);
  Divisor out;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const auto& rep = f.points[std::min(i, f.sigma[i])];
    out.add(orbit_label(rep.first, rep.second), d.weight(f.points[i].label()));
  }
  return out;
}

Divisor norm_sigma4(const PairFiber& f, const Divisor& d) {
  if (f.involution.size() != f.points.size()) throw ValidationError("norm_sigma4: pair fiber carries no involution");
  require_support(d, f.labels(), "the product fiber over " + f.base_label);
  Divisor out;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const auto& rep = f.points[std::min(i, f.involution[i])];
    out.add(orbit_label(rep.first, rep.second), d.weight(f.points[i].label()));
  }
  return out;
}

bool prym_test(const std::vector<std::pair<FiberModel, Divisor>>& family) {
  return std::all_of(family.begin(), family.end(), [](const auto& e) { return norm_pi(e.first, e.second).is_zero(); });
}

bool prym_test(const std::vector<std::pair<SymFiber, Divisor>>& family) {
  return std::all_of(family.begin(), family.end(),
                     [](const auto& e) { return norm_sigma(e.first, e.second).is_zero(); });
}

bool prym_test(const std::vector<std::pair<PairFiber, Divisor>>& family) {
  return std::all_of(family.begin(), family.end(),
                     [](const auto& e) { return norm_sigma4(e.first, e.second).is_zero(); });
}

Divisor apply_involution(const Involution& sigma, const Divisor& d) {
  Divisor out;
  for (const auto& [k, v] : d.weights()) {
    auto it = sigma.find(k);
    if (it == sigma.end()) throw ValidationError("involution is not defined at '" + k + "'");
    out.add(it->second, v);
  }
  return out;
}

MumfordDivisor mumford_divisor(const Divisor& n, const Involution& sigma) {
  for (const auto& [k, v] : n.weights()) {
    auto it = sigma.find(k);
    if (it == sigma.end()) throw ValidationError("involution is not defined at '" + k + "'");
    if (it->second == k) throw ValidationError("mumford_divisor: '" + k + "' is a fixed point of the involution");
  }
  MumfordDivisor m;
  m.divisor = n - apply_involution(sigma, n);
  m.parity = static_cast<int>(((n.degree() % 2) + 2) % 2);
  return m;
}

std::pair<Divisor, Divisor> sigma_orbit_split(const Divisor& d, const Involution& sigma) {
  const Divisor mirrored = apply_involution(sigma, d);
  Divisor invariant;
  std::set<std::string> support;
  for (const auto& [k, v] : d.weights()) support.insert(k);
  for (const auto& [k, v] : mirrored.weights()) support.insert(k);
  for (const auto& p : support) {
    const long long s = d.weight(p) + mirrored.weight(p);  // D(p) + D(σp)
    const long long half = s >= 0 ? s / 2 : -((-s + 1) / 2);
    invariant.add(p, half);
  }
  return {invariant, d - invariant};
}

// Twist bookkeeping ------------------------------------------------------------

TwistContext twist_context_from_string(const std::string& s) {
  if (s == "SL4" || s == "sl4") return TwistContext::SL4;
  if (s == "SO4" || s == "so4") return TwistContext::SO4;
  if (s == "SO6" || s == "so6") return TwistContext::SO6;
  throw ValidationError("unknown twist context '" + s + "' (expected SL4, SO4 or SO6)");
}

long long TwistLedger::entry(const std::string& name) const {
  for (const auto& [k, v] : entries)
    if (k == name) return v;
  throw ValidationError("twist ledger has no entry '" + name + "'");
}

TwistLedger twist_ledger(TwistContext ctx, FiberKind kind) {
  TwistLedger t;
  const bool branch = kind == FiberKind::GenericBranch;
  switch (ctx) {
  case TwistContext::SL4: {
    const FiberModel f = branch ? FiberModel::generic_branch("x", 4) : FiberModel::regular("x", 4);
    const long long r = ramification_divisor(f).degree();
    const long long local = f.degree() - static_cast<long long>(f.points.size());
    t.entries = {{"ramification", r}, {"degree_minus_points", local}};
    t.balanced = r == local;
    break;
  }
  case TwistContext::SO4: {
    const FiberModel s1 = branch ? FiberModel::generic_branch("x", 2, "S1", "u") : FiberModel::regular("x", 2, "S1", "u");
    const FiberModel s2 = FiberModel::regular("x", 2, "S2", "w");
    const PairFiber pf = fiber_product(s1, s2);
    Divisor r;
    for (const auto& p : pf.points) r.add(p.label(), p.mult - 1);
    const Divisor p1 = projection(pf, 1).pullback(ramification_divisor(s1));
    const Divisor p2 = projection(pf, 2).pullback(ramification_divisor(s2));
    t.entries = {{"ramification", r.degree()}, {"p1_pullback", p1.degree()}, {"p2_pullback", p2.degree()}};
    t.balanced = r == p1 + p2;
    break;
  }
  case TwistContext::SO6: {
    const FiberModel f = branch ? FiberModel::generic_branch("x", 4) : FiberModel::regular("x", 4);
    const RamificationCheck c = ramification_check(f);
    const long long r0 = c.r0.degree();
    t.entries = {{"pullback_sum", c.lhs.degree()},
                 {"sym_pullback", c.sym_pullback.degree()},
                 {"two_r0", 2 * r0},
                 {"r0", r0},
                 {"t_pullback", -r0}};
    t.balanced = c.holds && c.lhs.degree() == c.sym_pullback.degree() + 2 * r0;
    break;
  }
  }
  return t;
}

} // namespace isolab::covers
