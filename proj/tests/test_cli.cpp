#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "isolab/cli.hpp"

using isolab::cli::run_cli;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* regular4 =
    R"({"base_label":"x","kind":"Regular","points":[{"label":"y1","mult":1},{"label":"y2","mult":1},)"
    R"({"label":"y3","mult":1},{"label":"y4","mult":1}]})";
const char* branch4 =
    R"({"base_label":"x","kind":"GenericBranch","points":[{"label":"y1","mult":2},{"label":"y2","mult":1},)"
    R"({"label":"y3","mult":1}]})";

} // namespace

TEST_CASE("rank 3 base map of (-5,0,4)") {
  Run r = run({"base", "map-so6", "--json", R"({"a2":["-5"],"a3":[],"a4":["4"]})"});
  REQUIRE(r.code == 0);
  json j = r.report();
  CHECK(j["command"] == "base map-so6");
  CHECK(j["orientation"] == 1);
  CHECK(j["result"]["b1"] == json::array({"-10"}));
  CHECK(j["result"]["b2"] == json::array({"9"}));
  CHECK(j["result"]["pf"] == json::array());
}

TEST_CASE("orientation is echoed and flips the Pfaffian") {
  Run p = run({"base", "map-so6", "--json", R"({"a2":[0],"a3":[1,2],"a4":[0]})"});
  Run n = run({"base", "map-so6", "--orientation", "-1", "--json", R"({"a2":[0],"a3":[1,2],"a4":[0]})"});
  REQUIRE(p.code == 0);
  REQUIRE(n.code == 0);
  CHECK(n.report()["orientation"] == -1);
  CHECK(p.report()["result"]["pf"] == json::array({"1", "2"}));
  CHECK(n.report()["result"]["pf"] == json::array({"-1", "-2"}));
  CHECK(run({"base", "map-so4", "--orientation", "2", "--json", "{}"}).code == 1);
}

TEST_CASE("malformed input exits 1 with the field path") {
  Run r = run({"base", "map-so6", "--json", R"({"a2":["-5/x"],"a3":[],"a4":["4"]})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("input.a2[0]") != std::string::npos);
  CHECK(r.out.empty());

  Run missing = run({"base", "map-so4", "--json", R"({"a1":[1]})"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("input.a2") != std::string::npos);

  Run fiber = run({"cover", "sym", "--json", R"({"fiber":{"base_label":"x","kind":"Regular","points":[{"label":"y1","mult":"two"}]}})"});
  CHECK(fiber.code == 1);
  CHECK(fiber.err.find("input.fiber.points[0].mult") != std::string::npos);

  CHECK(run({"base", "map-so4", "--json", "{not json"}).code == 1);
  CHECK(run({"base", "map-so4"}).code == 1);
  CHECK(run({"base"}).code == 1);
  CHECK(run({"base", "frobnicate"}).code == 1);
}

TEST_CASE("input from stdin") {
  Run r = run({"base", "map-so4", "--input", "-"}, R"({"a1":["-1"],"a2":["-4"]})");
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["quartic"] == json::parse(R"([["9"],[],["-10"],[],["1"]])"));
}

TEST_CASE("property failures exit 2") {
  const std::string fam = std::string(R"({"covering":"pi","family":[{"fiber":)") + regular4 + R"(,"divisor":{"y1":1}}],)";
  Run wrong = run({"divisor", "prym-test", "--json", fam + R"("expect":true})"});
  CHECK(wrong.code == 2);
  CHECK(wrong.report()["status"] == "property check failed");
  Run right = run({"divisor", "prym-test", "--json", fam + R"("expect":false})"});
  CHECK(right.code == 0);
  CHECK(right.report()["result"]["prym"] == false);
}

TEST_CASE("cover and divisor commands") {
  Run sym = run({"cover", "sym", "--json", std::string(R"({"fiber":)") + branch4 + "}"});
  REQUIRE(sym.code == 0);
  CHECK(sym.report()["result"]["sym_fiber"]["degree"] == 6);
  CHECK(sym.report()["result"]["sym_fiber"]["sigma_fixed_point_free"] == true);

  Run ram = run({"cover", "ramcheck", "--json", std::string(R"({"context":"SO6","fiber":)") + branch4 + "}"});
  REQUIRE(ram.code == 0);
  CHECK(ram.report()["result"]["r0"] == json::parse(R"j({"(y1,y1)":1})j"));
  CHECK(ram.report()["result"]["twist_ledger"]["entries"]["pullback_sum"] == 6);

  Run prod = run({"cover", "product", "--json", std::string(R"({"fiber":)") + regular4 + "}"});
  REQUIRE(prod.code == 0);
  CHECK(prod.report()["result"]["pair_fiber"]["degree"] == 12);

  Run push = run({"divisor", "push", "--json",
                  std::string(R"({"fiber":)") + regular4 + R"(,"divisor":{"y1":1,"y2":-1}})"});
  REQUIRE(push.code == 0);
  CHECK(push.report()["result"]["pushed"] ==
        json::parse(R"({"Sym[y1,y3]":1,"Sym[y1,y4]":1,"Sym[y2,y3]":-1,"Sym[y2,y4]":-1})"));

  Run norm = run({"divisor", "norm", "--json",
                  std::string(R"({"covering":"sigma","fiber":)") + regular4 + R"(,"divisor":{"Sym[y1,y3]":1,"Sym[y2,y4]":-1}})"});
  REQUIRE(norm.code == 0);
  CHECK(norm.report()["result"]["zero"] == true);
}

TEST_CASE("iso commands") {
  Run a = run({"iso", "apply", "--json", R"({"map":"iso3","a":[[1,0,0,0],[0,-1,0,0],[0,0,2,0],[0,0,0,-2]]})"});
  REQUIRE(a.code == 0);
  CHECK(a.report()["checks"][0]["status"] == "PASS");
  Run g = run({"iso", "apply", "--json", R"({"map":"iso2","level":"group","a1":[[2,0],[0,"1/2"]],"a2":[[1,0],[0,1]]})"});
  REQUIRE(g.code == 0);
  CHECK(g.report()["checks"].size() == 2);
  CHECK(run({"iso", "apply", "--json", R"({"map":"iso3","a":[[1,0],[0,1]]})"}).code == 1);

  Run al = run({"iso", "alpha", "--json", R"({"a":[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]})"});
  REQUIRE(al.code == 0);
  CHECK(al.report()["result"]["alpha"] == json::parse(R"([[[],[],["2"]],[[],[],[]],[[],[],[]]])"));

  Run h = run({"iso", "hodge", "--json", R"({"q":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})"});
  REQUIRE(h.code == 0);
  CHECK(h.report()["result"]["plus_basis"][0] == json::parse(R"(["1","0","0","0","0","1"])"));
  CHECK(run({"iso", "hodge", "--json", R"({"q":[[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})"}).code == 1);
}

TEST_CASE("invariants and higgs commands") {
  CHECK(run({"invariants", "map", "--json", R"({"d1":2,"d2":1})"}).report()["result"]["c1"] == 3);
  CHECK(run({"invariants", "map", "--json", R"({"c1":1,"c2":2})"}).code == 1);
  CHECK(run({"invariants", "mw", "--json", R"({"group":"SL2xSL2","first":2,"second":0,"genus":2})"})
            .report()["result"]["within_bound"] == false);
  CHECK(run({"invariants", "lift", "--json", R"({"b1":1,"b2":1})"}).report()["result"]["liftable"] == true);

  json i2 = run({"invariants", "count", "--json", R"({"isogeny":"I2","genus":2})"}).report()["result"];
  CHECK(i2["stated"] == 32);
  CHECK(i2["proof_sentence"] == 16);
  CHECK(i2["enumerated"] == 256);
  json big = run({"invariants", "count", "--json", R"({"isogeny":"I3","genus":5})"}).report()["result"];
  CHECK(big["enumerated"].is_null());

  json census = run({"invariants", "census", "--json", R"({"group":"SO33","genus":2})"}).report()["result"];
  CHECK(census["total_components"] == 5);

  Run h = run({"higgs", "assemble-so22", "--json",
               R"({"n1_degree":2,"n2_degree":1,"beta1":[1],"gamma1":[1],"beta2":[1],"gamma2":[-1]})"});
  REQUIRE(h.code == 0);
  CHECK(h.report()["result"]["degrees"] == json::parse(R"({"N1":2,"N2":1,"M1":3,"M2":1})"));
  CHECK(h.report()["result"]["quartic"] == json::parse(R"([["4"],[],[],[],["1"]])"));
}

TEST_CASE("verify all with seed 7 and 100 samples") {
  Run r = run({"verify", "all", "--seed", "7", "--samples", "100"});
  CHECK(r.code == 0);
  json j = r.report();
  CHECK(j["result"]["criteria"].size() == 10);
  for (const auto& c : j["result"]["criteria"]) CHECK(c["status"] == "PASS");
}

TEST_CASE("same seed gives byte-identical reports; ISOLAB_SEED overrides --seed") {
  const std::vector<std::string> args{"verify", "all", "--samples", "10", "--seed", "3"};
  Run a = run(args), b = run(args);
  CHECK(a.out == b.out);

  setenv("ISOLAB_SEED", "99", 1);
  Run c = run(args);
  unsetenv("ISOLAB_SEED");
  CHECK(c.report()["result"]["seed"] == 99);

  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  json s = run(serial).report();
  json p = a.report();
  s["result"]["runner"] = p["result"]["runner"];
  CHECK(s.dump() == p.dump());
}

TEST_CASE("text format and help") {
  Run t = run({"--format", "text", "invariants", "map", "--json", R"({"d1":0,"d2":0})"});
  CHECK(t.code == 0);
  CHECK(t.out.find("orientation: +1") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--format", "xml", "verify", "all"}).code == 1);
}
