#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "degen/degeneration.hpp"
#include "degen/json_io.hpp"
#include "degen/symmetric.hpp"

using namespace degen;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("degen_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(DEGEN_CLI_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

std::string data(const char* name) { return std::string(DEGEN_TEST_DATA) + "/" + name; }

std::string write_file(const std::string& name, const Json& j) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("build writes canonical objects") {
  const Run perm = run("build --n 2 --object permutahedron");
  REQUIRE(perm.code == 0);
  const Json j = Json::parse(perm.out);
  CHECK(j.at("vertices") == Json::parse(R"([["0"],["1"]])"));
  CHECK(polyhedron_from_json(j) == build_symmetric(2).permutahedron);

  const Run product = run("build --n 2 --object product");
  REQUIRE(product.code == 0);
  const LatticePolyhedron pw = polyhedron_from_json(Json::parse(product.out));
  // The recession cone is σ_W[2]^∨; its facet normals are the twelve v_{I,j}.
  std::set<IntVector> normals(pw.recession().facets().begin(), pw.recession().facets().end());
  std::set<IntVector> expected;
  for (const auto& I : std::vector<std::vector<std::size_t>>{{}, {1}, {2}, {1, 2}})
    for (std::size_t j = 0; j <= 2; ++j) expected.insert(v_ray(2, I, j));
  CHECK(normals == expected);
  CHECK(Json::parse(product.out).at("recession").at("facets").size() == 12);

  const fs::path file = scratch_dir() / "sym.json";
  CHECK(run("build --n 3 --object symmetric --out " + file.string()).code == 0);
  std::ifstream in(file);
  const Json sym = Json::parse(in);
  CHECK(sym.at("Delta_fan").at("maximal_cones").size() == 6);
  CHECK(sym.at("perm_action_N").size() == 2);

  CHECK(run("build --n 2 --object expanded").out == run("build --n 2 --object expanded").out);
}

TEST_CASE("build rejects bad arguments") {
  CHECK(run("build --n 0 --object product").code == 2);
  CHECK(run("build --n 0").code == 2);
  CHECK(run("build --n 6 --object product").code == 2);
  CHECK(run("build --n 7 --object symmetric").code == 2);
  CHECK(run("build --n 2 --object nonsense").code == 2);
  CHECK(run("build --n 2 --object product --out /nonexistent_dir/x.json").code == 3);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify streams one report per check") {
  const Run all = run("verify --n 2 --all --jobs 2");
  CHECK(all.code == 0);
  const auto reports = lines(all.out);
  CHECK(reports.size() == 7);
  for (const auto& r : reports) {
    CHECK(r.at("status") == "pass");
    CHECK(r.at("n") == 2);
    CHECK(r.at("tool_version") == "degen 1.0.0");
    CHECK(r.contains("elapsed_ms"));
  }

  const Run one = run("verify --n 2 --check unstable_locus");
  CHECK(one.code == 0);
  const auto single = lines(one.out);
  REQUIRE(single.size() == 1);
  CHECK(single[0].at("witness").at("rays").size() == 12);

  CHECK(run("verify --n 99").code == 2);
  CHECK(run("verify --n 99 --all").code == 2);
  CHECK(run("verify --n 2 --check bogus").code == 2);
  CHECK(run("verify --n 1 --check normal_fan").code == 2);
  CHECK(run("verify --n 2").code == 2);

  const Run fuzz = run("verify --n 3 --fuzz 20");
  CHECK(fuzz.code == 0);
  const auto fr = lines(fuzz.out);
  REQUIRE(fr.size() == 1);
  CHECK(fr[0].at("check") == "comparison_fuzz");
  CHECK(fr[0].at("witness").at("passed") == 20);
}

TEST_CASE("quotient command") {
  const std::string alpha1 = scratch_dir() / "ghh1.json";
  const std::string p1 = scratch_dir() / "p1.json";
  REQUIRE(run("build --n 1 --object ghh-expanded --out " + alpha1).code == 0);
  REQUIRE(run("build --n 1 --object expanded --out " + p1).code == 0);
  const Run base = run("quotient " + p1 + " " + alpha1 + " 1/2");
  REQUIRE(base.code == 0);
  const Json j1 = Json::parse(base.out);
  CHECK(j1.at("ambient").at("vertices").size() == 1);
  CHECK(j1.at("polytopal").at("vertices").size() == 1);
  CHECK(j1.at("local").at("recession").at("rays").size() == 2);

  const std::string alpha2 = scratch_dir() / "ghh2.json";
  const std::string p2 = scratch_dir() / "p2.json";
  REQUIRE(run("build --n 2 --object ghh-product --out " + alpha2).code == 0);
  REQUIRE(run("build --n 2 --object product --out " + p2).code == 0);
  const Run prod = run("quotient " + p2 + " " + alpha2 + " 2/3,4/3");
  REQUIRE(prod.code == 0);
  const Json j2 = Json::parse(prod.out);
  CHECK(j2.at("split_exact") == true);
  CHECK(polyhedron_from_json(j2.at("polytopal")) == polytope_b(build_bundle(2)));

  CHECK(run("quotient " + p2 + " " + alpha2 + " 2/3").code == 2);
  CHECK(run("quotient " + p2 + " " + alpha2 + " 2/3,x").code == 2);
  const Run unbounded = run("quotient " + p2 + " " + alpha2 + " 100,100");
  CHECK(unbounded.code == 0);
  CHECK(Json::parse(unbounded.out).at("split_exact") == false);
  const std::string point = write_file("point.json", Json::parse(R"({"ambient_rank":5,"vertices":[[0,0,0,0,0]]})"));
  const Run empty = run("quotient " + point + " " + alpha2 + " 100,100");
  CHECK(empty.code == 0);
  CHECK(Json::parse(empty.out) == Json::parse(R"({"empty":true})"));
  CHECK(run("quotient " + write_file("bad.json", Json::object()) + " " + alpha2 + " 1,1").code == 2);
  CHECK(run("quotient /nonexistent.json " + alpha2 + " 1,1").code == 3);
}

TEST_CASE("stab command") {
  const Run e1 = run("stab " + data("example1.json"));
  CHECK(e1.code == 0);
  const Json j1 = Json::parse(e1.out);
  CHECK(j1.at("torus_stabilizer").at("invariant_factors") == Json::parse("[3,3]"));
  CHECK(j1.at("quotient").at("invariant_factors") == Json::parse("[3,3]"));
  CHECK(j1.at("stab_order") == 9);
  CHECK(j1.at("comparison") == "PASS");

  const Run e2 = run("stab " + data("example2.json") + " --jobs 2");
  CHECK(e2.code == 0);
  const Json j2 = Json::parse(e2.out);
  CHECK(j2.at("torus_stabilizer").at("invariant_factors") == Json::parse("[3]"));
  CHECK(j2.at("quotient").at("invariant_factors") == Json::parse("[3]"));
  CHECK(j2.at("stab0_young_blocks") == Json::parse("[[1,2],[3,4],[5,6]]"));

  CHECK(run("stab " + data("large12.json") + " --brute-force-max 9").code == 4);
  CHECK(run("stab " + data("example1.json") + " --brute-force-max 8").code == 4);
  CHECK(run("stab " + write_file("garbage.json", Json::parse(R"({"n":"x"})"))).code == 2);
  const Json unstable = Json::parse(R"({"n":3,"I_t":[1,4],"points":[{"component":0,"root":"0","a1":"a","mult":3}]})");
  CHECK(run("stab " + write_file("unstable.json", unstable)).code == 2);
}
