#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godel/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>

using namespace godel;

namespace {

const RunConfig cfg;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(GODEL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const char* name, const std::string& content) {
  std::string path = std::string("/tmp/godel_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("poset json round trip") {
  Json j = {{"size", 4}, {"covers", {{0, 1}, {0, 2}, {1, 3}, {2, 3}}}};
  Poset p = parse_poset_json(j);
  CHECK(posets_isomorphic(p, Poset::diamond()));
  Poset again = parse_poset_json(poset_to_json(p));
  CHECK(posets_isomorphic(again, p));
  CHECK_THROWS_AS(parse_poset_json(Json{{"covers", Json::array()}}), error);
}

TEST_CASE("lattice json formats") {
  Json via_poset = {{"poset", {{"size", 2}, {"covers", {{0, 1}}}}}};
  DistLattice l = parse_lattice_json(via_poset, cfg);
  CHECK(l.size == 3);
  Json explicit_tables = lattice_to_json(l);
  DistLattice l2 = parse_lattice_json(explicit_tables, cfg);
  CHECK(lattices_isomorphic(l, l2));
}

TEST_CASE("builtin names") {
  CHECK(builtin_poset("d4")->size() == 4);
  CHECK(builtin_poset("chain-5")->size() == 5);
  CHECK(builtin_poset("antichain-3")->size() == 3);
  CHECK(builtin_poset("cube-3")->size() == 8);
  CHECK_FALSE(builtin_poset("nonsense").has_value());
  CHECK(builtin_algebra("trivial", cfg)->size() == 1);
  CHECK(builtin_algebra("chain-3", cfg)->size() == 3);
  CHECK(builtin_algebra("boolean-2", cfg)->size() == 4);
  CHECK(builtin_algebra("upsets:d4", cfg)->size() == 6);
}

TEST_CASE("dot export is stable") {
  std::string dot = poset_to_dot(Poset::chain(2), "c");
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("digraph c") != std::string::npos);
}

TEST_CASE("cli free") {
  RunResult r = run_cli("free --generators 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("dual: 3 elements; algebra: 6 elements") != std::string::npos);
  RunResult big = run_cli("free --generators 3");
  CHECK(big.code == 0);
  CHECK(big.out.find("dual: 51 elements; algebra: 137186159382 elements") != std::string::npos);
  RunResult over = run_cli("free --generators 9");
  CHECK(over.code == 3);
  CHECK(over.out.rfind("ERROR resource generator cap", 0) == 0);
}

TEST_CASE("cli depth") {
  RunResult r = run_cli("depth --alg chain-3 --alg chain-3");
  CHECK(r.code == 0);
  CHECK(r.out.find("formula 3, computed 3") != std::string::npos);
}

TEST_CASE("cli coproduct") {
  RunResult r = run_cli("coproduct --alg chain-3 --alg chain-3");
  CHECK(r.code == 0);
  CHECK(r.out.find("tensor space: 6 chains") != std::string::npos);
  CHECK(r.out.find("algebra: 19 elements") != std::string::npos);
}

TEST_CASE("cli check suites") {
  RunResult z = run_cli("check z-iso --poset d4");
  CHECK(z.code == 0);
  CHECK(z.out.find("11 <-> 11, isomorphism verified") != std::string::npos);
  for (const char* suite : {"implication", "upsets", "twohead", "box-diamond", "free",
                            "product", "depth"}) {
    RunResult r = run_cli(std::string("check ") + suite);
    CHECK(r.code == 0);
  }
  RunResult nerve_fwd = run_cli("nerve --poset chain-2 --check z-iso");
  CHECK(nerve_fwd.code == 0);
  CHECK(nerve_fwd.out.find("3 <-> 3") != std::string::npos);
}

TEST_CASE("cli dual") {
  std::string path = write_temp("lat3.json", R"({"poset": {"size": 2, "covers": [[0,1]]}})");
  RunResult r = run_cli("dual --lattice " + path);
  CHECK(r.code == 0);
  CHECK(r.out.find("dual poset: 2 elements") != std::string::npos);
  RunResult t = run_cli("dual --lattice trivial");
  CHECK(t.code == 0);
  CHECK(t.out.find("empty poset") != std::string::npos);
}

TEST_CASE("cli rejects malformed covers with the named invariant") {
  std::string path = write_temp("cycle.json", R"({"size": 3, "covers": [[0,1],[1,2],[2,0]]})");
  RunResult r = run_cli("dual --poset " + path);
  CHECK(r.code == 2);
  CHECK(r.out.rfind("ERROR validation antisymmetry violated", 0) == 0);
}

TEST_CASE("cli output is byte-identical across runs") {
  RunResult a = run_cli("free --generators 2 --format structured --seed 7");
  RunResult b = run_cli("free --generators 2 --format structured --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  RunResult c = run_cli("check box-diamond --poset chain-3 --seed 9");
  RunResult d = run_cli("check box-diamond --poset chain-3 --seed 9");
  CHECK(c.out == d.out);
}

TEST_CASE("cli structured output carries the envelope") {
  // depths 1 and 3 combine to 1 + 0 + 2 = 3
  RunResult r = run_cli("check depth --alg chain-2 --alg chain-4 --format structured");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["inputs"]["suite"] == "depth");
  CHECK(j["result"]["ok"] == true);
  CHECK(j["certificates"]["formula"] == 3);
}

TEST_CASE("cli graph export") {
  RunResult r = run_cli("free --generators 1 --format graph");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph dual", 0) == 0);
}

TEST_CASE("cli usage errors") {
  RunResult r = run_cli("check bogus-suite");
  CHECK(r.code == 1);
  CHECK(r.out.rfind("ERROR usage", 0) == 0);
  RunResult none = run_cli("free");
  CHECK(none.code == 2);
  CHECK(none.out.rfind("ERROR validation", 0) == 0);
}
