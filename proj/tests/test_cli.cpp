// Golden-file checks of the command-line reports for the worked examples,
// plus the exit-code contract.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "aclab/ranklab.hpp"
#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ACLAB_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
std::string golden(const std::string& name) { return slurp(std::string(GOLDEN_DIR) + "/" + name); }

std::string kv_block(const std::string& output) {
  auto pos = output.rfind("---\n");
  REQUIRE(pos != std::string::npos);
  return output.substr(pos + 4);
}

}  // namespace

TEST_CASE("golden: cohomology tables") {
  RunResult r = run("--spec " + fixture("example.spec") + " --format kv cohomology");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("cohomology_example.txt"));
  CHECK(r.output.find("b1=2") != std::string::npos);
  CHECK(r.output.find("b2=4") != std::string::npos);
  CHECK(r.output.find("b3=6") != std::string::npos);

  RunResult su = run("--spec " + fixture("su2xt3.spec") + " --format kv cohomology");
  CHECK(su.exit_code == 0);
  CHECK(su.output == golden("cohomology_su2xt3.txt"));
}

TEST_CASE("golden: purity reports") {
  RunResult ex = run("--spec " + fixture("example.spec") + " --format kv invariant");
  CHECK(ex.exit_code == 0);
  CHECK(ex.output == golden("invariant_example.txt"));
  CHECK(kv_block(ex.output).find("pure=false") != std::string::npos);

  RunResult su = run("--spec " + fixture("su2xt3.spec") + " --format kv invariant");
  CHECK(su.exit_code == 0);
  CHECK(su.output == golden("invariant_su2xt3.txt"));
  CHECK(kv_block(su.output).find("pure=false") != std::string::npos);
  CHECK(kv_block(su.output).find("full=true") != std::string::npos);

  RunResult t = run("--spec " + fixture("torus6.spec") + " --format kv invariant");
  CHECK(t.exit_code == 0);
  CHECK(t.output == golden("invariant_torus6.txt"));
  CHECK(kv_block(t.output).find("pure=true") != std::string::npos);
  CHECK(kv_block(t.output).find("full=true") != std::string::npos);
}

TEST_CASE("golden: validate, frame, hodge") {
  RunResult v = run("--spec " + fixture("example.spec") + " --format kv validate");
  CHECK(v.exit_code == 0);
  CHECK(v.output == golden("validate_example.txt"));

  RunResult f4 = run("--spec " + fixture("frame4.spec") + " frame");
  CHECK(f4.exit_code == 0);
  CHECK(f4.output == golden("frame4.txt"));

  RunResult f6 = run("--spec " + fixture("frame6.spec") + " frame");
  CHECK(f6.exit_code == 65);  // data-level rejection: n odd
  CHECK(f6.output == golden("frame6.txt"));
  CHECK(f6.output.find("odd") != std::string::npos);

  RunResult h = run("--spec " + fixture("hodge_standard.spec") + " --format kv hodge");
  CHECK(h.exit_code == 0);
  CHECK(h.output == golden("hodge_standard.txt"));
}

TEST_CASE("rank-scan reports the dichotomy and the documentation note") {
  RunResult r = run("--format kv rank-scan --samples 2000 --tol 1e-8 --seed 20240801");
  CHECK(r.exit_code == 0);
  std::string kv = kv_block(r.output);
  CHECK(kv.find("dichotomy=ok") != std::string::npos);
  CHECK(kv.find("identities=ok") != std::string::npos);
  CHECK(kv.find("fd_order2=ok") != std::string::npos);
  CHECK(kv.find("rank1=") == std::string::npos);
  CHECK(kv.find("rank2=") == std::string::npos);
  CHECK(r.output.find(aclab::no_anti_invariant_note()) != std::string::npos);

  // determinism for a fixed seed
  RunResult again = run("--format kv rank-scan --samples 2000 --tol 1e-8 --seed 20240801");
  CHECK(again.output == r.output);
}

TEST_CASE("rank-scan writes report and csv files") {
  std::string rep_path = std::string(BUILD_TMP_DIR) + "/scan_report.txt";
  std::string csv_path = std::string(BUILD_TMP_DIR) + "/scan.csv";
  RunResult r = run("rank-scan --samples 500 --seed 7 --report " + rep_path + " --csv " + csv_path);
  CHECK(r.exit_code == 0);
  std::string rep = slurp(rep_path);
  CHECK(rep.find("histogram:") != std::string::npos);
  std::string csv = slurp(csv_path);
  CHECK(csv.find("x1,x2,x3,x4,x5,x6,rank,smallest_retained_sv") == 0);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 501);
}

TEST_CASE("exit-code contract") {
  CHECK(run("bogus-subcommand").exit_code == 64);
  CHECK(run("cohomology").exit_code == 65);  // --spec missing
  CHECK(run("--spec /nonexistent.spec validate").exit_code == 65);
  CHECK(run("rank-scan --rho 0.7").exit_code == 64);

  std::string bad = std::string(BUILD_TMP_DIR) + "/bad.spec";
  {
    std::ofstream out(bad);
    out << "algebra = \"0,0,12,13+24,0,0\"\n";
  }
  CHECK(run("--spec " + bad + " cohomology").exit_code == 65);
}
