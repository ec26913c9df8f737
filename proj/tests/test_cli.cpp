#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string bin() {
  const char* b = std::getenv("LEDYN_BIN");
  REQUIRE_MESSAGE(b != nullptr, "LEDYN_BIN must point at the built binary");
  return b;
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing file: " + p.string()).c_str());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TmpDir {
  fs::path path;
  explicit TmpDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("ledyn_cli_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TmpDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("simulate writes the orbit and its fate") {
  TmpDir d("simulate");
  int rc = run("-o " + d.path.string() + " simulate -a 5 -b 1 --x0 0.5 --y0 1");
  CHECK(rc == 0);

  json fate = json::parse(slurp(d.path / "fate.json"));
  CHECK(fate["schema"] == 1);
  CHECK(fate["fate"] == "ConvergedToEquilibrium");
  CHECK(std::abs(fate["final_state"]["x"].get<double>() - 1.0) < 1e-5);
  CHECK(std::abs(fate["final_state"]["y"].get<double>() - 2.0) < 1e-5);

  std::string csv = slurp(d.path / "orbit.csv");
  CHECK(csv.rfind("t,x,y\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 3);
}

TEST_CASE("simulate reports escape from outside the quadrant") {
  TmpDir d("escape");
  int rc = run("-o " + d.path.string() + " simulate -a 5 -b 1 --x0 -1 --y0 -10");
  CHECK(rc == 0);
  json fate = json::parse(slurp(d.path / "fate.json"));
  CHECK(fate["fate"] == "Escaped");
  CHECK(fate.contains("escape_radius_hit"));
}

TEST_CASE("invalid parameters and usage exit with code 2") {
  CHECK(run("simulate -a 0 -b 1 --x0 1 --y0 1") == 2);
  CHECK(run("simulate -a 5 -b -1 --x0 1 --y0 1") == 2);
  CHECK(run("simulate -a 5 -b 1") == 2); // missing required start
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2); // a subcommand is required
  CHECK(run("verify --suite nonsense") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("hopf scan CSV has the documented header and both arcs") {
  TmpDir d("hopf");
  CHECK(run("-o " + d.path.string() + " hopf --a-lo 8 --a-hi 28 -n 41") == 0);
  std::string csv = slurp(d.path / "hopf_scan.csv");
  CHECK(csv.rfind("a,b,omega,L1,arc\n", 0) == 0);
  CHECK(csv.find("Hminus") != std::string::npos);
  CHECK(csv.find("Hplus") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 42); // header + 41 rows
}

TEST_CASE("dulac certificate JSON on both sides") {
  TmpDir d("dulac");
  CHECK(run("-o " + d.path.string() + " dulac -a 5 -b 1") == 0);
  json c = json::parse(slurp(d.path / "dulac.json"));
  CHECK(c["holds"] == true);
  CHECK(c["in_A"] == true);
  CHECK(c["worst_value"].get<double>() < 0.0);

  CHECK(run("-o " + d.path.string() + " dulac -a 20 -b 0.1") == 0);
  json c2 = json::parse(slurp(d.path / "dulac.json"));
  CHECK(c2["holds"] == false);
  CHECK(c2["in_A"] == false);
}

TEST_CASE("infinity report carries four boundary points and six circle points") {
  TmpDir d("infinity");
  CHECK(run("-o " + d.path.string() + " infinity -a 5 -b 1") == 0);
  json j = json::parse(slurp(d.path / "infinity.json"));
  CHECK(j["schema"] == 1);
  REQUIRE(j["infinite_equilibria"].size() == 4);
  CHECK(j["infinite_equilibria"][0]["chart"] == "U1");
  CHECK(j["infinite_equilibria"][0]["kind"] == "UnstableNode");
  CHECK(j["infinite_equilibria"][2]["kind"] == "DegenerateBlowupRequired");
  CHECK(j["infinite_equilibria"][2]["sectors"]["hyperbolic"] == 4);
  REQUIRE(j["circle_equilibria"].size() == 6);
  CHECK(j["circle_equilibria"][0]["classification"] == "HyperbolicSaddle");

  std::string svg = slurp(d.path / "disk.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
}

TEST_CASE("cycle detector writes the count and one CSV per cycle") {
  TmpDir d("cycles");
  CHECK(run("-o " + d.path.string() + " cycles -a 10 -b 3.4") == 0);
  json j = json::parse(slurp(d.path / "cycles.json"));
  CHECK(j["count"] == 1);
  REQUIRE(j["cycles"].size() == 1);
  CHECK(j["cycles"][0]["stability"] == "Stable");
  CHECK(j["cycles"][0]["period"].get<double>() > 0.0);
  std::string csv = slurp(d.path / "cycle_0.csv");
  CHECK(csv.rfind("t,x,y\n", 0) == 0);
}

TEST_CASE("region map encodes the membership grid") {
  TmpDir d("regions");
  CHECK(run("-o " + d.path.string() +
            " regions --a-range 0.5 30 --b-range 0.5 20 --resolution 24") == 0);
  json j = json::parse(slurp(d.path / "regions.json"));
  CHECK(j["resolution"] == 24);
  REQUIRE(j["codes"].size() == 24);
  REQUIRE(j["codes"][0].size() == 24);
  CHECK(j["legend"]["0"] == "InA");
  bool has_a = false, has_other = false;
  for (const auto& row : j["codes"])
    for (const auto& c : row) {
      has_a = has_a || c.get<int>() == 0;
      has_other = has_other || c.get<int>() != 0;
    }
  CHECK(has_a);
  CHECK(has_other);
  CHECK(j["bautin"][0].get<double>() > 18.0);
  std::string svg = slurp(d.path / "regions.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
}

TEST_CASE("portrait renders") {
  TmpDir d("portrait");
  CHECK(run("-o " + d.path.string() + " portrait -a 5 -b 1") == 0);
  std::string svg = slurp(d.path / "portrait.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("verify subcommand: pass, JSON report, byte determinism") {
  TmpDir d1("verify1"), d2("verify2");
  CHECK(run("-o " + d1.path.string() + " verify --suite dulac --seed 7") == 0);
  json j = json::parse(slurp(d1.path / "verify.json"));
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 7);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "dulac");

  CHECK(run("-o " + d2.path.string() + " verify --suite dulac --seed 7") == 0);
  CHECK(slurp(d1.path / "verify.json") == slurp(d2.path / "verify.json"));

  // different seed still passes but is a distinct sample
  CHECK(run("-o " + d2.path.string() + " verify --suite dulac --seed 8") == 0);
}
