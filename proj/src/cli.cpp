#include "isolab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "isolab/covers.hpp"
#include "isolab/errors.hpp"
#include "isolab/invariants.hpp"
#include "isolab/lie.hpp"
#include "isolab/serialize.hpp"
#include "isolab/spectral.hpp"
#include "isolab/verify.hpp"

namespace isolab::cli {

namespace {

using io::json;
using io::field;
using io::join;

struct Settings {
  std::string orientation = "+1";
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  bool serial = false;
  std::string format = "json";
  std::string input_file;
  std::string input_json;
};

struct Context {
  lie::Orientation orientation = lie::Orientation::Positive;
  json checks = json::array();
  bool failed = false;

  void check(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"status", ok ? "PASS" : "FAIL"}});
    failed = failed || !ok;
  }
};

using Handler = std::function<json(const json& in, Context& ctx, const Settings& s)>;

lie::Orientation parse_orientation(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return lie::Orientation::Positive;
  if (s == "-1" || s == "-") return lie::Orientation::Negative;
  throw ValidationError("--orientation: expected +1 or -1 (got '" + s + "')");
}

const std::string root = "input";

ZPoly zpoly_at(const json& in, const std::string& key) { return io::zpoly_from(field(in, key, root), join(root, key)); }

long long int_at(const json& in, const std::string& key) {
  return io::integer_from(field(in, key, root), join(root, key));
}

std::string string_at(const json& in, const std::string& key) {
  return io::string_from(field(in, key, root), join(root, key));
}

int genus_at(const json& in) { return static_cast<int>(in.contains("genus") ? int_at(in, "genus") : 2); }

covers::FiberModel fiber_at(const json& in, const std::string& key) {
  return io::fiber_from(field(in, key, root), join(root, key));
}

// ---------------------------------------------------------------- iso

json iso_apply(const json& in, Context& ctx, const Settings&) {
  const std::string map = string_at(in, "map");
  const std::string level = in.contains("level") ? string_at(in, "level") : "algebra";
  if (level != "algebra" && level != "group") throw ValidationError(join(root, "level") + ": expected algebra or group");
  json out = {{"map", map}, {"level", level}};
  if (map == "iso2") {
    if (level == "algebra") {
      const ZMatrix x = lie::d_iso2(io::zmatrix_from(field(in, "a1", root), join(root, "a1")),
                                    io::zmatrix_from(field(in, "a2", root), join(root, "a2")));
      out["image"] = io::to_json(x);
      ctx.check("image is skew for Q4", lie::is_skew_for(x, lie::q4().gram));
    } else {
      const QMatrix x = lie::iso2_group(io::qmatrix_from(field(in, "a1", root), join(root, "a1")),
                                        io::qmatrix_from(field(in, "a2", root), join(root, "a2")));
      out["image"] = io::to_json(x);
      ctx.check("image preserves Q4", lie::preserves_form(x, lie::q4().gram));
      ctx.check("image has determinant 1", determinant(x).is_one());
    }
  } else if (map == "iso3") {
    if (level == "algebra") {
      const ZMatrix x = lie::d_iso3(io::zmatrix_from(field(in, "a", root), join(root, "a")));
      out["image"] = io::to_json(x);
      ctx.check("image is skew for Q6", lie::is_skew_for(x, lie::q6().gram));
    } else {
      const QMatrix x = lie::iso3_group(io::qmatrix_from(field(in, "a", root), join(root, "a")));
      out["image"] = io::to_json(x);
      ctx.check("image preserves Q6", lie::preserves_form(x, lie::q6().gram));
      ctx.check("image has determinant 1", determinant(x).is_one());
    }
  } else {
    throw ValidationError(join(root, "map") + ": expected iso2 or iso3");
  }
  return out;
}

json iso_alpha(const json& in, Context& ctx, const Settings&) {
  const ZMatrix a = io::zmatrix_from(field(in, "a", root), join(root, "a"));
  const ZMatrix al = lie::alpha_block(a);
  const ZMatrix x = lie::d_iso3(a);
  const ZMatrix conj = lie::to_split_basis(x);
  const ZPoly pf = pfaffian(lift<ZPoly>(lie::q6().gram) * x);
  const ZPoly det_alpha = determinant(al);
  ctx.check("split conjugate is [[0,alpha],[alpha^t,0]]",
            conj.block(0, 0, 3, 3).is_zero() && conj.block(3, 3, 3, 3).is_zero() && conj.block(0, 3, 3, 3) == al &&
                conj.block(3, 0, 3, 3) == al.transpose());
  ctx.check("Pf(Q6 X)^2 equals det(alpha)^2", pf * pf == det_alpha * det_alpha);
  return {{"alpha", io::to_json(al)},
          {"split_conjugate", io::to_json(conj)},
          {"pfaffian", io::to_json(pf)},
          {"det_alpha", io::to_json(det_alpha)}};
}

json basis_json(const std::vector<std::vector<Rational>>& basis) {
  json out = json::array();
  for (const auto& v : basis) {
    json col = json::array();
    for (const auto& c : v) col.push_back(io::to_json(c));
    out.push_back(std::move(col));
  }
  return out;
}

json iso_hodge(const json& in, Context& ctx, const Settings&) {
  const lie::QuadraticForm q{io::qmatrix_from(field(in, "q", root), join(root, "q")), ctx.orientation};
  const lie::HodgeSplit h = lie::hodge_split(q, ctx.orientation);
  ctx.check("star squares to the identity", h.star * h.star == QMatrix::identity(6));
  ctx.check("both eigenspaces have rank 3", h.plus_basis.size() == 3 && h.minus_basis.size() == 3);
  ctx.check("Q6 is nondegenerate on both eigenspaces",
            !determinant(h.q_plus.gram).is_zero() && !determinant(h.q_minus.gram).is_zero());
  return {{"star", io::to_json(h.star)},
          {"plus_basis", basis_json(h.plus_basis)},
          {"minus_basis", basis_json(h.minus_basis)},
          {"q_plus", io::to_json(h.q_plus.gram)},
          {"q_minus", io::to_json(h.q_minus.gram)}};
}

// ---------------------------------------------------------------- base

spectral::BaseSL2Pair sl2_pair(const json& in) { return {zpoly_at(in, "a1"), zpoly_at(in, "a2")}; }

spectral::BaseSL4 sl4(const json& in) { return {zpoly_at(in, "a2"), zpoly_at(in, "a3"), zpoly_at(in, "a4")}; }

json branch_json(const spectral::BranchLocus& b) {
  return {{"discriminant", io::to_json(b.discriminant)}, {"non_reduced", b.non_reduced}};
}

json base_map_so4(const json& in, Context& ctx, const Settings&) {
  const spectral::BaseSO4 b = spectral::so4_base(sl2_pair(in), ctx.orientation);
  return {{"b1", io::to_json(b.b1)},
          {"pf", io::to_json(b.pf)},
          {"quartic", io::to_json(b.quartic())},
          {"branch_locus", branch_json(spectral::branch_locus(b))}};
}

json base_map_so6(const json& in, Context& ctx, const Settings&) {
  const spectral::BaseSO6 b = spectral::so6_base(sl4(in), ctx.orientation);
  return {{"b1", io::to_json(b.b1)},
          {"b2", io::to_json(b.b2)},
          {"pf", io::to_json(b.pf)},
          {"sextic", io::to_json(b.sextic())},
          {"branch_locus", branch_json(spectral::branch_locus(b))}};
}

json base_oracle(const json& in, Context& ctx, const Settings&) {
  const long long rank = int_at(in, "rank");
  if (rank == 2) {
    const auto p = sl2_pair(in);
    const CurvePoly base = spectral::so4_base(p, ctx.orientation).quartic();
    const CurvePoly oracle = spectral::so4_oracle(p);
    ctx.check("base quartic equals the resultant oracle", base == oracle);
    return {{"rank", 2}, {"base", io::to_json(base)}, {"oracle", io::to_json(oracle)}};
  }
  if (rank == 3) {
    const auto b = sl4(in);
    const CurvePoly base = spectral::so6_base(b, ctx.orientation).sextic();
    const CurvePoly oracle = spectral::so6_oracle(b);
    ctx.check("base sextic equals the pairwise-sum oracle", base == oracle);
    return {{"rank", 3}, {"base", io::to_json(base)}, {"oracle", io::to_json(oracle)}};
  }
  throw ValidationError(join(root, "rank") + ": expected 2 or 3");
}

json base_genericity(const json& in, Context&, const Settings&) {
  const spectral::GenericityReport g = spectral::genericity_report(sl4(in));
  return {{"gcd_a3_with_a2sq_minus_a4", io::to_json(g.gcd_with_a2sq_minus_a4)},
          {"gcd_a3_with_a2sq_minus_4a4", io::to_json(g.gcd_with_a2sq_minus_4a4)},
          {"rank_drop_locus", io::to_json(g.rank_drop_locus)},
          {"a3_identically_zero", g.a3_identically_zero},
          {"jacobian_full_rank", g.jacobian_full_rank},
          {"generic", g.generic}};
}

// ---------------------------------------------------------------- cover

json cover_product(const json& in, Context&, const Settings&) {
  if (in.contains("fiber")) return {{"pair_fiber", io::to_json(covers::self_product_minus_diagonal(fiber_at(in, "fiber")))}};
  return {{"pair_fiber", io::to_json(covers::fiber_product(fiber_at(in, "fiber1"), fiber_at(in, "fiber2")))}};
}

json cover_sym(const json& in, Context& ctx, const Settings&) {
  const covers::SymFiber sf = covers::symmetrize(covers::self_product_minus_diagonal(fiber_at(in, "fiber")));
  ctx.check("sigma is an involution", sf.sigma_is_involution());
  ctx.check("sigma has no fixed points", sf.sigma_fixed_point_free());
  return {{"sym_fiber", io::to_json(sf)}};
}

json ledger_json(const covers::TwistLedger& t) {
  json entries = json::object();
  for (const auto& [name, v] : t.entries) entries[name] = v;
  return {{"entries", std::move(entries)}, {"balanced", t.balanced}};
}

json cover_ramcheck(const json& in, Context& ctx, const Settings&) {
  const covers::FiberModel f = fiber_at(in, "fiber");
  const covers::RamificationCheck r = covers::ramification_check(f);
  ctx.check("p1*R + p2*R equals sym*R6 + 2 R0", r.holds);
  json out = {{"lhs", io::to_json(r.lhs)},
              {"rhs", io::to_json(r.rhs)},
              {"p1_pullback", io::to_json(r.p1_pullback)},
              {"p2_pullback", io::to_json(r.p2_pullback)},
              {"sym_pullback", io::to_json(r.sym_pullback)},
              {"r0", io::to_json(r.r0)},
              {"steps", r.ledger}};
  if (in.contains("context")) {
    const auto t = covers::twist_ledger(covers::twist_context_from_string(string_at(in, "context")), f.kind);
    ctx.check("twist degrees balance", t.balanced);
    out["twist_ledger"] = ledger_json(t);
  }
  return out;
}

// ---------------------------------------------------------------- divisor

covers::Divisor divisor_at(const json& in, const std::string& key, const std::string& path = root) {
  return io::divisor_from(field(in, key, path), join(path, key));
}

json divisor_push(const json& in, Context&, const Settings&) {
  return {{"pushed", io::to_json(covers::correspondence_push(fiber_at(in, "fiber"), divisor_at(in, "divisor")))}};
}

covers::PairFiber double_cover_product(const json& in, const std::string& path) {
  return covers::fiber_product(io::fiber_from(field(in, "fiber1", path), join(path, "fiber1")),
                               io::fiber_from(field(in, "fiber2", path), join(path, "fiber2")));
}

covers::SymFiber sym_of(const covers::FiberModel& f) {
  return covers::symmetrize(covers::self_product_minus_diagonal(f));
}

json divisor_norm(const json& in, Context&, const Settings&) {
  const covers::Covering c = covers::covering_from_string(string_at(in, "covering"));
  const covers::Divisor d = divisor_at(in, "divisor");
  covers::Divisor n;
  switch (c) {
  case covers::Covering::Pi: n = covers::norm_pi(fiber_at(in, "fiber"), d); break;
  case covers::Covering::Sigma: n = covers::norm_sigma(sym_of(fiber_at(in, "fiber")), d); break;
  case covers::Covering::Sigma4: n = covers::norm_sigma4(double_cover_product(in, root), d); break;
  }
  return {{"covering", covers::to_string(c)}, {"norm", io::to_json(n)}, {"zero", n.is_zero()}};
}

json divisor_prym_test(const json& in, Context& ctx, const Settings&) {
  const covers::Covering c = covers::covering_from_string(string_at(in, "covering"));
  const json& fam = field(in, "family", root);
  const std::string fp = join(root, "family");
  if (!fam.is_array() || fam.empty()) throw ValidationError(fp + ": expected a non-empty array");
  bool prym = false;
  std::vector<std::pair<covers::FiberModel, covers::Divisor>> f_pi;
  std::vector<std::pair<covers::SymFiber, covers::Divisor>> f_sigma;
  std::vector<std::pair<covers::PairFiber, covers::Divisor>> f_sigma4;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::string ip = join(fp, i);
    const covers::Divisor d = divisor_at(fam[i], "divisor", ip);
    switch (c) {
    case covers::Covering::Pi:
      f_pi.push_back({io::fiber_from(field(fam[i], "fiber", ip), join(ip, "fiber")), d});
      break;
    case covers::Covering::Sigma:
      f_sigma.push_back({sym_of(io::fiber_from(field(fam[i], "fiber", ip), join(ip, "fiber"))), d});
      break;
    case covers::Covering::Sigma4: f_sigma4.push_back({double_cover_product(fam[i], ip), d}); break;
    }
  }
  switch (c) {
  case covers::Covering::Pi: prym = covers::prym_test(f_pi); break;
  case covers::Covering::Sigma: prym = covers::prym_test(f_sigma); break;
  case covers::Covering::Sigma4: prym = covers::prym_test(f_sigma4); break;
  }
  json out = {{"covering", covers::to_string(c)}, {"prym", prym}};
  if (in.contains("expect")) {
    const json& e = in["expect"];
    if (!e.is_boolean()) throw ValidationError(join(root, "expect") + ": expected true or false");
    ctx.check("Prym verdict matches the expected value", prym == e.get<bool>());
  }
  return out;
}

// ---------------------------------------------------------------- invariants

json invariants_map(const json& in, Context&, const Settings&) {
  const int g = genus_at(in);
  if (in.contains("c1") || in.contains("c2")) {
    const invariants::ToledoPair d = invariants::toledo_preimage({int_at(in, "c1"), int_at(in, "c2"), g});
    return {{"d1", d.first}, {"d2", d.second}, {"genus", g}};
  }
  const invariants::ToledoPair c = invariants::toledo_map({int_at(in, "d1"), int_at(in, "d2"), g});
  return {{"c1", c.first}, {"c2", c.second}, {"genus", g}};
}

json invariants_mw(const json& in, Context&, const Settings&) {
  const invariants::Group grp = invariants::group_from_string(string_at(in, "group"));
  const int g = genus_at(in);
  const bool within = invariants::milnor_wood_check({int_at(in, "first"), int_at(in, "second"), g}, grp);
  const long long bound = grp == invariants::Group::SL2xSL2 ? g - 1 : 2LL * g - 2;
  return {{"group", invariants::to_string(grp)}, {"genus", g}, {"bound", bound}, {"within_bound", within}};
}

json invariants_lift(const json& in, Context&, const Settings&) {
  if (in.contains("b1") || in.contains("b2")) {
    const invariants::W2Label w{static_cast<int>(int_at(in, "b1")), static_cast<int>(int_at(in, "b2"))};
    return {{"kind", "w2"}, {"liftable", invariants::liftable(w)}};
  }
  const invariants::ToledoPair c{int_at(in, "c1"), int_at(in, "c2"), genus_at(in)};
  return {{"kind", "toledo"}, {"liftable", invariants::liftable(c)}};
}

json invariants_count(const json& in, Context&, const Settings&) {
  const invariants::Isogeny which = invariants::isogeny_from_string(string_at(in, "isogeny"));
  const invariants::PreimageCount p = invariants::preimage_count(which, genus_at(in));
  json out = {{"isogeny", which == invariants::Isogeny::I2 ? "I2" : "I3"}, {"genus", p.genus}, {"stated", p.stated}};
  out["proof_sentence"] = p.proof_sentence ? json(*p.proof_sentence) : json(nullptr);
  out["enumerated"] = p.enumerated ? json(*p.enumerated) : json(nullptr);
  out["consistent"] = p.consistent();
  if (!p.witnesses.empty()) {
    json w = json::array();
    for (const auto& t : p.witnesses) w.push_back(t.bits);
    out["witnesses"] = std::move(w);
  }
  return out;
}

json invariants_census(const json& in, Context&, const Settings&) {
  const invariants::Census c = invariants::component_census(invariants::group_from_string(string_at(in, "group")),
                                                            genus_at(in));
  json rows = json::array();
  for (const auto& r : c.rows) rows.push_back({{"label", r.label}, {"in_image", r.in_image}});
  json out = {{"group", invariants::to_string(c.group)}, {"genus", c.genus}, {"rows", std::move(rows)}};
  if (c.group == invariants::Group::SO33) {
    out["hitchin_source"] = c.hitchin_source;
    out["hitchin_target"] = c.hitchin_target;
  }
  out["total_components"] = c.total_components;
  return out;
}

// ---------------------------------------------------------------- higgs

json higgs_assemble_so22(const json& in, Context& ctx, const Settings&) {
  const invariants::So22Assembly a =
      invariants::assemble_so22(int_at(in, "n1_degree"), int_at(in, "n2_degree"), zpoly_at(in, "beta1"),
                                zpoly_at(in, "gamma1"), zpoly_at(in, "beta2"), zpoly_at(in, "gamma2"), ctx.orientation);
  ctx.check("characteristic polynomial equals the base quartic", char_poly(a.field.phi) == a.base.quartic());
  ctx.check("lower block is minus the orthogonal transpose of alpha", a.field.is_block_antisymmetric());
  json labels = json::object();
  for (const auto& [name, d] : a.field.degree_labels) labels[name] = d;
  return {{"phi", io::to_json(a.field.phi)},
          {"alpha", io::to_json(a.field.alpha())},
          {"q1", io::to_json(a.field.q1)},
          {"q2", io::to_json(a.field.q2)},
          {"degrees", std::move(labels)},
          {"b1", io::to_json(a.base.b1)},
          {"pf", io::to_json(a.base.pf)},
          {"quartic", io::to_json(a.base.quartic())},
          {"pfaffian", io::to_json(a.pfaffian)}};
}

// ---------------------------------------------------------------- verify

json verify_all(const json&, Context& ctx, const Settings& s) {
  verify::Options opt;
  opt.samples = s.samples;
  opt.seed = s.seed;
  opt.orientation = ctx.orientation;
  opt.parallel = !s.serial;
  json criteria = json::array();
  for (const auto& r : verify::run_all(opt)) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json one = {{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"cases", c.cases}};
      if (!c.failures.empty()) one["failures"] = c.failures;
      checks.push_back(std::move(one));
    }
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"status", r.passed() ? "PASS" : "FAIL"},
                        {"cases", r.cases()}, {"checks", std::move(checks)}});
    ctx.check("criterion " + std::to_string(r.id) + ": " + r.title, r.passed());
  }
  return {{"samples", s.samples}, {"seed", s.seed}, {"runner", s.serial ? "serial" : "parallel"},
          {"criteria", std::move(criteria)}};
}

// ---------------------------------------------------------------- driver

const std::map<std::string, std::map<std::string, Handler>>& commands() {
  static const std::map<std::string, std::map<std::string, Handler>> table{
      {"iso", {{"apply", iso_apply}, {"alpha", iso_alpha}, {"hodge", iso_hodge}}},
      {"base",
       {{"map-so4", base_map_so4}, {"map-so6", base_map_so6}, {"oracle", base_oracle}, {"genericity", base_genericity}}},
      {"cover", {{"product", cover_product}, {"sym", cover_sym}, {"ramcheck", cover_ramcheck}}},
      {"divisor", {{"push", divisor_push}, {"norm", divisor_norm}, {"prym-test", divisor_prym_test}}},
      {"invariants",
       {{"map", invariants_map},
        {"mw", invariants_mw},
        {"lift", invariants_lift},
        {"count", invariants_count},
        {"census", invariants_census}}},
      {"higgs", {{"assemble-so22", higgs_assemble_so22}}},
      {"verify", {{"all", verify_all}}},
  };
  return table;
}

json read_input(const Settings& s, std::istream& in) {
  std::string text;
  if (!s.input_json.empty()) {
    text = s.input_json;
  } else if (s.input_file == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (!s.input_file.empty()) {
    std::ifstream f(s.input_file);
    if (!f) throw ValidationError("--input: cannot open '" + s.input_file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  } else {
    throw ValidationError("no input: pass --input FILE, --input - or --json TEXT");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
}

void write_text(std::ostream& out, const json& report) {
  out << "command: " << report["command"].get<std::string>() << "\n";
  out << "orientation: " << (report["orientation"].get<int>() > 0 ? "+1" : "-1") << "\n";
  const json& result = report["result"];
  if (result.contains("criteria")) {
    out << "seed: " << result["seed"] << "  samples: " << result["samples"] << "  runner: "
        << result["runner"].get<std::string>() << "\n";
    for (const auto& c : result["criteria"]) {
      out << "  " << c["status"].get<std::string>() << "  " << c["id"] << ". " << c["title"].get<std::string>()
          << " (" << c["cases"] << " cases)\n";
      for (const auto& k : c["checks"])
        if (k["status"] == "FAIL") out << "          failed: " << k["name"].get<std::string>() << "\n";
    }
  } else {
    for (auto it = result.begin(); it != result.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
    for (const auto& c : report["checks"])
      out << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << "\n";
  }
  out << "status: " << report["status"].get<std::string>() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the low-rank isogenies and their Hitchin systems", "isolab"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--orientation", s.orientation, "Orientation sign, +1 or -1")->capture_default_str();
  app.add_option("--samples", s.samples, "Random samples per verification criterion")->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for the randomized checks (ISOLAB_SEED overrides)")->capture_default_str();
  app.add_flag("--serial", s.serial, "Run verification samples on the serial reference runner");
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--input", s.input_file, "JSON input file, or - for stdin");
  app.add_option("--json", s.input_json, "JSON input given inline");

  std::string group, action;
  for (const auto& [g, actions] : commands()) {
    CLI::App* sub = app.add_subcommand(g);
    sub->require_subcommand(1);
    sub->fallthrough();
    for (const auto& [a, handler] : actions) {
      CLI::App* leaf = sub->add_subcommand(a);
      leaf->fallthrough();
      leaf->callback([&group, &action, gname = g, aname = a] {
        group = gname;
        action = aname;
      });
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }

  try {
    if (const char* env = std::getenv("ISOLAB_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        s.seed = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ValidationError(std::string("ISOLAB_SEED: expected an unsigned integer (got '") + env + "')");
      }
    }
    Context ctx;
    ctx.orientation = parse_orientation(s.orientation);
    const json input = group == "verify" ? json::object() : read_input(s, in);
    const json result = commands().at(group).at(action)(input, ctx, s);
    json report = {{"command", group + " " + action},
                   {"orientation", lie::sign_of(ctx.orientation)},
                   {"result", result},
                   {"checks", ctx.checks},
                   {"status", ctx.failed ? "property check failed" : "ok"}};
    if (s.format == "json") out << report.dump(2) << "\n";
    else write_text(out, report);
    return ctx.failed ? property_failed : ok;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const InexactError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

} // namespace isolab::cli
