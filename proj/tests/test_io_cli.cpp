#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "qhopf/cli.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/io.hpp"
#include "qhopf/radford.hpp"
#include "support.hpp"

using namespace qhopf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qhopf_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

void check_same(const HopfData& a, const HopfData& b) {
  CHECK(a.dim == b.dim);
  CHECK(a.conductor == b.conductor);
  CHECK(a.labels == b.labels);
  for (int i = 0; i < a.dim * a.dim; ++i) CHECK(a.mul[i] == b.mul[i]);
  CHECK(a.unit == b.unit);
  for (int i = 0; i < a.dim; ++i) CHECK(a.comul[i] == b.comul[i]);
  CHECK(a.counit == b.counit);
  CHECK(a.antipode == b.antipode);
}

const Json* entry(const Json& report, const std::string& name) {
  for (const auto& e : report["entries"]) {
    if (e["name"] == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("scalar JSON") {
  const int m = 6;
  CHECK(scalar_to_json(Scalar(m, Rational(-3, 4))) == "-3/4");
  CHECK(scalar_to_json(Scalar::zero(m)) == "0");
  CHECK(scalar_to_json(Scalar::omega_power(m, 1)) == Json::array({"0", "1"}));
  CHECK(scalar_to_json(Scalar::beta(m)).dump() == R"([["0","0"],["1","0"]])");
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar s = test::random_scalar(m, 2);
    CHECK(scalar_from_json(scalar_to_json(s), m) == s);
  }
  CHECK(scalar_from_json(Json(3), 1) == Scalar::integer(1, 3));
  CHECK_THROWS_AS(scalar_from_json(Json("x"), 1), LoadError);
  CHECK_THROWS_AS(scalar_from_json(Json::object(), 1), LoadError);
}

TEST_CASE("dump and load are inverse") {
  check_same(*build_radford(1).hopf, hopf_from_json(hopf_to_json(*build_radford(1).hopf)));
  check_same(*build_radford(3).hopf, hopf_from_json(hopf_to_json(*build_radford(3).hopf)));
  const HopfData kg = group_algebra(symmetric_group3());
  check_same(kg, hopf_from_json(hopf_to_json(kg)));
  const HopfData dbl = *build_double(cyclic_group(2)).hopf;
  check_same(dbl, hopf_from_json(Json::parse(hopf_to_json(dbl).dump())));

  for (const auto& name : catalog_group_names()) {
    const FiniteGroup g = *catalog_group(name);
    const FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.table() == g.table());
    CHECK(back.labels() == g.labels());
    CHECK(back.identity() == g.identity());
  }

  auto host = std::make_shared<const HopfData>(kg);
  for (const YdObject& m : {conjugation_module(symmetric_group3(), host),
                            conjugation_module(symmetric_group3(), host, ModuleKind::kYdLeftRight),
                            lr_from_llyd(conjugation_module(symmetric_group3(), host)),
                            regular_lr_object(host)}) {
    const YdObject back = module_from_json(module_to_json(m), host);
    CHECK(back.kind == m.kind);
    CHECK(back.labels == m.labels);
    CHECK(back.action == m.action);
    CHECK(back.right_action == m.right_action);
    CHECK(back.left_coaction == m.left_coaction);
    CHECK(back.right_coaction == m.right_coaction);
    CHECK(module_to_json(back) == module_to_json(m));
  }

  const RadfordAlgebra a = build_radford(1);
  const YbOperator op = yb_from_qt(*a.hopf, build_R(a, {1, std::nullopt}).r, regular_action(*a.hopf));
  const YbOperator back = yb_from_json(yb_to_json(op, a.conductor()));
  CHECK(back.dim == op.dim);
  CHECK(back.sigma == op.sigma);
  CHECK(back.inverse == op.inverse);
}

TEST_CASE("schema and axiom errors are distinguished") {
  Json g = group_to_json(cyclic_group(3));
  g.erase("table");
  CHECK_THROWS_AS(group_from_json(g), LoadError);
  g = group_to_json(cyclic_group(3));
  g["table"][1][1] = 1;
  try {
    group_from_json(g);
    FAIL("accepted a bad table");
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
  Json h = hopf_to_json(*build_radford(1).hopf);
  h["mul"][0][0] = Json::array({0, 0, 99});
  CHECK_THROWS_AS(hopf_from_json(h), LoadError);
  h = hopf_to_json(*build_radford(1).hopf);
  h["counit"].erase(0);
  CHECK_THROWS_AS(hopf_from_json(h), LoadError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/qhopf.json"), LoadError);
  const fs::path bad = scratch("bad.json");
  write(bad, "{ not json");
  CHECK_THROWS_AS(read_json_file(bad.string()), LoadError);
}

TEST_CASE("radford scan report") {
  const Run r = cli({"radford", "scan", "--nu", "3"});
  CHECK(r.code == kExitMatch);
  const Json j = r.json();
  CHECK(j["command"] == "radford scan --nu 3");
  CHECK(j["all_match"] == true);
  for (int s : {1, 3, 5}) {
    const std::string p = "s=" + std::to_string(s) + ": ";
    REQUIRE(entry(j, p + "triangular"));
    CHECK((*entry(j, p + "triangular"))["verdict"] == (s == 3));
    CHECK((*entry(j, p + "pseudotriangular (direct)"))["verdict"] == true);
    CHECK((*entry(j, p + "pseudotriangular (F = R21 R)"))["verdict"] == true);
  }
  for (const auto& e : j["entries"]) {
    CHECK(!e["anchor"].get<std::string>().empty());
    CHECK(e.contains("witness") == !e["verdict"].get<bool>());
    CHECK(!e.contains("runtime_ms"));
  }
  CHECK(r.err.find("0 mismatches") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
  const std::vector<std::string> args{"posbasis", "scan-qt", "--group", "builtin:c2xc2", "--plus",
                                      "(e,e),(c,e)", "--minus", "(e,e),(e,c)"};
  const Run a = cli(args);
  ::setenv("QHOPF_THREADS", "1", 1);
  const Run b = cli(args);
  ::setenv("QHOPF_THREADS", "4", 1);
  const Run c = cli(args);
  ::unsetenv("QHOPF_THREADS");
  CHECK(a.code == kExitMatch);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.json()["result"]["pairs"].size() == 4);
  const Run t = cli({"--timings", "psbraid", "equal", "-n", "2", "s1", "s1"});
  CHECK(t.json()["entries"][0].contains("runtime_ms"));
}

TEST_CASE("double report") {
  const Run s3 = cli({"double", "--group", "builtin:s3"});
  CHECK(s3.code == kExitMatch);
  const Json j = s3.json();
  const Json* ps = entry(j, "pseudotriangular (direct)");
  REQUIRE(ps);
  CHECK((*ps)["verdict"] == false);
  CHECK((*ps)["expected"] == false);
  CHECK(!(*ps)["witness"].get<std::string>().empty());
  const Run c4 = cli({"double", "--group", "builtin:c4"});
  CHECK(c4.code == kExitMatch);
  CHECK((*entry(c4.json(), "pseudotriangular (direct)"))["verdict"] == true);
}

TEST_CASE("group files") {
  const fs::path p = scratch("s3.json");
  write(p, group_to_json(symmetric_group3()).dump());
  const Run ok = cli({"double", "--group", p.string()});
  CHECK(ok.code == kExitMatch);
  Json g = group_to_json(cyclic_group(4));
  g["table"][1][2] = 0;
  g["table"][1][3] = 3;
  const fs::path bad = scratch("bad_c4.json");
  write(bad, g.dump());
  const Run r = cli({"double", "--group", bad.string()});
  CHECK(r.code == kExitLoad);
  CHECK(r.err.find("axiom failure") != std::string::npos);
}

TEST_CASE("psbraid commands") {
  const Run eq = cli({"psbraid", "equal", "--n", "3", "s1 s2^-1 s1", "s2 s1^-1 s2", "--expect", "equal"});
  CHECK(eq.code == kExitMatch);
  CHECK(eq.json()["entries"][0]["verdict"] == true);
  const Run ne = cli({"psbraid", "equal", "--n", "3", "s1 s2^-1 s1", "s2 s1^-1 s2", "--expect", "different"});
  CHECK(ne.code == kExitMismatch);
  const Run inv = cli({"psbraid", "invariant", "--n", "3", "--word", "s1 s2^-1 s1"});
  CHECK(inv.code == kExitMatch);
  CHECK(inv.json()["result"]["permutation"] == Json::array({3, 2, 1}));
  const Run chk = cli({"psbraid", "check", "--yb", "builtin:radford:1:1"});
  CHECK(chk.code == kExitMatch);
  CHECK(chk.json()["all_match"] == true);
  const Run rep = cli({"psbraid", "rep", "--yb", "builtin:swap:2", "--word", "s1 s2"});
  CHECK(rep.code == kExitMatch);
  CHECK(rep.json()["result"]["dim"] == 8);
}

TEST_CASE("yb files") {
  const fs::path p = scratch("yb.json");
  const Run dump = cli({"psbraid", "dump", "--yb", "builtin:radford:1:1"});
  REQUIRE(dump.code == kExitMatch);
  write(p, dump.out);
  const Run file = cli({"psbraid", "rep", "--yb", p.string(), "--word", "s1"});
  const Run builtin = cli({"psbraid", "rep", "--yb", "builtin:radford:1:1", "--word", "s1"});
  CHECK(file.code == kExitMatch);
  CHECK(file.json()["result"] == builtin.json()["result"]);
}

TEST_CASE("yd commands") {
  const Run ok = cli({"yd", "check", "--module", "builtin:conj:s3"});
  CHECK(ok.code == kExitMatch);
  const Run bad = cli({"yd", "check", "--module", "builtin:left-regular:c2"});
  CHECK(bad.code == kExitMismatch);
  const Run ps = cli({"yd", "pseudo", "--triple", "builtin:conj:s3", "builtin:conj:s3", "builtin:conj:s3"});
  CHECK(ps.code == kExitMatch);
  CHECK((*entry(ps.json(), "pseudosymmetric (definition)"))["verdict"] == false);
  CHECK(!entry(ps.json(), "pseudosymmetric (definition)")->contains("expected"));
  const Run ab = cli({"yd", "pseudo", "--triple", "builtin:conj-lr:c2xc2", "builtin:conj-lr:c2xc2",
                      "builtin:conj-lr:c2xc2"});
  CHECK(ab.code == kExitMatch);
  CHECK((*entry(ab.json(), "pseudosymmetric (definition)"))["expected"] == true);
  const Run search = cli({"yd", "search", "--hopf", "builtin:radford:1"});
  CHECK(search.code == kExitMatch);
  CHECK(search.json()["result"]["outcome"] == "witness");
  const Run mixed = cli({"yd", "pseudo", "--triple", "builtin:conj:c2", "builtin:conj-lr:c2", "builtin:conj:c2"});
  CHECK(mixed.code == kExitUsage);
}

TEST_CASE("module files resolve their host") {
  const fs::path hopf = scratch("kg_c3.json");
  write(hopf, cli({"hopf", "dump", "--hopf", "builtin:kg:c3"}).out);
  Json m = Json::parse(cli({"yd", "dump", "--module", "builtin:conj:c3"}).out);
  m["hopf_ref"] = hopf.filename().string();
  const fs::path mod = scratch("conj_c3.json");
  write(mod, m.dump());
  const std::string ref = mod.string();
  const Run r = cli({"yd", "pseudo", "--triple", ref, ref, ref});
  CHECK(r.code == kExitMatch);
  CHECK((*entry(r.json(), "pseudosymmetric (definition)"))["verdict"] == true);
}

TEST_CASE("hopf commands") {
  const fs::path p = scratch("h1.json");
  const Run dump = cli({"radford", "dump", "--nu", "1"});
  REQUIRE(dump.code == kExitMatch);
  write(p, dump.out);
  check_same(hopf_from_json(read_json_file(p.string())), *build_radford(1).hopf);
  CHECK(cli({"hopf", "verify", "--hopf", p.string()}).code == kExitMatch);
  Json h = Json::parse(dump.out);
  h["antipode"] = Json::array();
  for (int i = 0; i < 4; ++i) h["antipode"].push_back(Json::array({Json::array({i, i}), "1"}));
  const fs::path bad = scratch("h1_bad.json");
  write(bad, h.dump());
  const Run r = cli({"hopf", "verify", "--hopf", bad.string()});
  CHECK(r.code == kExitMismatch);
  const Json report = r.json();
  const Json* e = entry(report, "antipode left");
  REQUIRE(e);
  CHECK(!(*e)["witness"].get<std::string>().empty());
  CHECK(cli({"hopf", "dump", "--hopf", bad.string()}).code == kExitLoad);
}

TEST_CASE("exit codes for bad invocations") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"radford", "scan"}).code == kExitUsage);
  CHECK(cli({"radford", "scan", "--nu", "4"}).code == kExitUsage);
  CHECK(cli({"radford", "check", "--nu", "3", "--s", "2", "--beta", "formal"}).code == kExitUsage);
  CHECK(cli({"radford", "check", "--nu", "3", "--s", "1", "--beta", "x/y"}).code == kExitUsage);
  CHECK(cli({"psbraid", "equal", "--n", "3", "s4", "s1"}).code == kExitUsage);
  CHECK(cli({"posbasis", "scan-qt", "--group", "builtin:c4", "--plus", "e,c^2", "--minus", "e,c^2"}).code ==
        kExitLoad);
  CHECK(cli({"double", "--group", "builtin:q8"}).code == kExitLoad);
  CHECK(cli({"double", "--group", "/nonexistent.json"}).code == kExitLoad);
  CHECK(cli({"--help"}).code == kExitMatch);
}

TEST_CASE("beta specifications") {
  for (const std::string beta : {"formal", "3/2", "1,1/2", "[\"0\",\"1\"]"}) {
    CAPTURE(beta);
    const Run r = cli({"radford", "check", "--nu", "3", "--s", "3", "--beta", beta});
    CHECK(r.code == kExitMatch);
    CHECK((*entry(r.json(), "s=3: triangular"))["verdict"] == true);
  }
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(QHOPF_CLI_PATH) + " psbraid equal --n 2 s1 s1^-1 --expect different > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == kExitMatch);
  const int usage = std::system((std::string(QHOPF_CLI_PATH) + " radford > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(usage) == kExitUsage);
}
