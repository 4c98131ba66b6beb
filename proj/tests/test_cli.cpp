#include <doctest.h>

#include "degenlab/cli.hpp"
#include "standard_catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace degenlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "degenlab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "degenlab-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

const std::string kWitnessDir = DEGENLAB_WITNESS_DIR;

}  // namespace

TEST_CASE("order exit codes") {
  const auto no = run({"--no-cache", "order", "--ring", "two-lines", "deg", "Lplus", "Lminus"});
  CHECK(no.code == kExitNo);
  CHECK(no.out.find("rank at p_plus: 1 vs 0") != std::string::npos);
  const auto yes = run({"--no-cache", "order", "--ring", "kx2", "deg", "Rfree", "Rfree"});
  CHECK(yes.code == kExitYes);
  CHECK(yes.out.find("chain: 0 steps") != std::string::npos);
  const auto gate = run({"--no-cache", "order", "--ring", "kxy-x2", "deg", "Rfree(-1)", "I2"});
  CHECK(gate.code == kExitGate);
  CHECK(gate.out.find("ring not a graded isolated singularity") != std::string::npos);
  CHECK(run({"--no-cache", "order", "--ring", "kx2", "stable", "Rfree + L1", "L1"}).code == kExitYes);
  CHECK(run({"--no-cache", "order", "--ring", "two-lines", "hom", "Lplus", "Lminus"}).code == kExitNo);
}

TEST_CASE("parse errors report positions and unknown ids") {
  const auto pos = run({"--no-cache", "order", "--ring", "kx2", "deg", "Rfree + ", "Rfree"});
  CHECK(pos.code == kExitError);
  CHECK(pos.err.find("position") != std::string::npos);
  const auto ids = run({"--no-cache", "order", "--ring", "kx2", "deg", "Foo + Bar(1)", "Rfree"});
  CHECK(ids.code == kExitError);
  CHECK(ids.err.find("Foo") != std::string::npos);
  CHECK(ids.err.find("Bar") != std::string::npos);
  CHECK(run({"order", "--ring", "kx2"}).code == kExitError);
}

TEST_CASE("witness round trip and verification") {
  const fs::path w = scratch("w.json");
  const auto made = run({"witness", "--ring", "kx3", "Rfree", "L1 + L2(-1)", w.string()});
  REQUIRE(made.code == kExitYes);
  const auto ok = run({"verify", w.string()});
  CHECK(ok.code == kExitYes);
  CHECK(ok.out.find("result: pass") != std::string::npos);
  const std::string first = slurp(w);
  REQUIRE(run({"witness", "--ring", "kx3", "Rfree", "L1 + L2(-1)", w.string()}).code == kExitYes);
  CHECK(slurp(w) == first);

  std::string text = first;
  const auto at = text.find("\"-1/1\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 6, "\"-2/1\"");
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << text;
  const auto fail = run({"verify", bad.string()});
  CHECK(fail.code == kExitNo);
  CHECK(fail.out.find("failed at 1 1.1") != std::string::npos);

  CHECK(run({"verify", kWitnessDir + "/double-line-zwara.json"}).code == kExitYes);
  const auto literal = run({"verify", kWitnessDir + "/double-line-literal.json"});
  CHECK(literal.code == kExitNo);
  CHECK(literal.out.find("not-well-defined") != std::string::npos);
}

TEST_CASE("enumerate and hasse") {
  const auto e = run({"--no-cache", "--window=-1..1", "enumerate", "--ring", "kx2", "--seed", "Rfree"});
  CHECK(e.code == kExitYes);
  CHECK(e.out == "class size: 2\nL1(-1) + L1(0)\nRfree(0)\n");
  const fs::path dot = scratch("h.dot");
  const auto h = run({"--no-cache", "--window=-1..1", "--dot", dot.string(), "hasse", "--ring", "kx2", "--seed", "Rfree"});
  CHECK(h.code == kExitYes);
  CHECK(h.out.find("edges: 1") != std::string::npos);
  const std::string first = slurp(dot);
  run({"--no-cache", "--window=-1..1", "--dot", dot.string(), "hasse", "--ring", "kx2", "--seed", "Rfree"});
  CHECK(slurp(dot) == first);
  CHECK(run({"--no-cache", "hasse", "--ring", "kxy-x2", "--seed", "Rfree"}).code == kExitGate);
}

TEST_CASE("quiver DOT matches the golden file") {
  const auto q = run({"quiver", "--ring", "two-lines"});
  CHECK(q.code == kExitYes);
  CHECK(q.out == slurp(std::string(DEGENLAB_GOLDEN_DIR) + "/two-lines.dot"));
  CHECK(q.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("selftest") {
  const auto all = run({"selftest"});
  CHECK(all.code == kExitYes);
  CHECK(all.out.find("selftest passed") != std::string::npos);

  std::string text = fixtures::standard_text();
  const auto at = text.find("\"representation_directed\": true");
  REQUIRE(at != std::string::npos);
  text.replace(at, 31, "\"representation_directed\": false");
  const fs::path cat = scratch("flipped.json");
  std::ofstream(cat) << text;
  const auto bad = run({"--catalog", cat.string(), "selftest"});
  CHECK(bad.code == kExitNo);
  CHECK(bad.out.find("flag representation_directed") != std::string::npos);
}

TEST_CASE("cache is transparent") {
  const fs::path dir = scratch("cache");
  fs::remove_all(dir);
  setenv("DEGENLAB_CACHE_DIR", dir.c_str(), 1);
  const std::vector<std::string> args{"order", "--ring", "kx4", "deg", "Rfree", "L1 + L3(-1)"};
  const auto cold = run(args);
  const auto warm = run(args);
  std::vector<std::string> fresh = args;
  fresh.insert(fresh.begin(), "--no-cache");
  const auto direct = run(fresh);
  unsetenv("DEGENLAB_CACHE_DIR");
  CHECK(cold.out == warm.out);
  CHECK(cold.out == direct.out);
  CHECK(cold.code == warm.code);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
}
