#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout only; stderr routed separately by the command string
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(IFC_DMT_BIN) + " " + args + " 2>/tmp/ifc_dmt_test_stderr";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_stderr() {
  std::ifstream f("/tmp/ifc_dmt_test_stderr");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("diversity report at the reference points") {
  const RunResult a = run("diversity --beta 1,0.5,0.5,1 --rates 0.4,0.4");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("regime = weak") != std::string::npos);
  CHECK(a.out.find("overall: 0.4") != std::string::npos);

  const RunResult b = run("diversity --beta 1,3,5,1 --rates 0.4,0.4 --json");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("\"regime\": \"very-strong\"") != std::string::npos);
  CHECK(b.out.find("\"overall\": 0.6") != std::string::npos);

  const RunResult c = run("diversity --beta 1,0.5,0.5,1 --rates 0,0");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("overall: 1") != std::string::npos);
}

TEST_CASE("diversity with a general split reports the oracle-backed values") {
  const RunResult a = run("diversity --beta 1,0.5,0.5,1 --rates 0.4,0.4 --split 0,0");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("d_hk_general") != std::string::npos);
  CHECK(a.out.find("overall: 0.1") != std::string::npos);
}

TEST_CASE("malformed flags exit with the usage code and name the flag") {
  const RunResult a = run("diversity --beta 1,2 --rates 0.4,0.4");
  CHECK(a.exit_code == 2);
  CHECK(read_stderr().find("--beta") != std::string::npos);

  const RunResult b = run("curve --beta 1,0.5,0.5,1 --r-min 0.5 --r-max 0.1");
  CHECK(b.exit_code == 2);

  const RunResult c = run("mc --beta 1,0,0,1 --rates 0.4,0.4 --x 100,10 --samples 10");
  CHECK(c.exit_code == 2);
}

TEST_CASE("curve emits the fixed schema and keeps the bounds ordered") {
  const RunResult a = run("curve --beta 1,0.5,0.5,1 --r-min 0 --r-max 1 --step 0.01");
  CHECK(a.exit_code == 0);
  REQUIRE(a.out.rfind("r,d_etw,d_hk_wors,d_hk_fixed\n", 0) == 0);
  CHECK(count_lines(a.out) == 102);  // header + 101 rows

  std::istringstream rows(a.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    double r, etw, wors, fixed;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &etw, &wors, &fixed) == 4);
    REQUIRE(wors <= etw + 1e-9);
    REQUIRE(fixed <= etw + 1e-9);
  }

  const RunResult b = run("curve --beta 1,0.5,0.5,1 --r-min 0 --r-max 0.1 --step 0.05 --verbose");
  REQUIRE(b.out.rfind("r,d_etw,d_hk_wors,d_hk_fixed,d_etw_a,d_etw_b,d_etw_c,d_etw_d,d_etw_e,"
                      "d_etw_f,d_etw_g,d_hk_fixed_a,d_hk_fixed_b,d_hk_fixed_c,d_hk_fixed_d,"
                      "d_hk_fixed_e,d_hk_fixed_f,d_hk_fixed_g\n",
                      0) == 0);
}

TEST_CASE("curve strong-interference fixture: the three bounds coincide") {
  const RunResult a = run("curve --beta 1,1.5,1.5,1 --r-min 0 --r-max 1 --step 0.01");
  REQUIRE(a.exit_code == 0);
  std::istringstream rows(a.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    double r, etw, wors, fixed;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &etw, &wors, &fixed) == 4);
    REQUIRE(etw == Catch::Approx(wors).margin(1e-9));
    REQUIRE(etw == Catch::Approx(fixed).margin(1e-9));
  }
}

TEST_CASE("curve fixture at cross gain 1.1: no-splitting matches the fixed split") {
  const RunResult a = run("curve --beta 1,1.1,1.1,1 --r-min 0 --r-max 1 --step 0.01");
  REQUIRE(a.exit_code == 0);
  std::istringstream rows(a.out);
  std::string line;
  std::getline(rows, line);
  bool gap_somewhere = false;
  while (std::getline(rows, line)) {
    double r, etw, wors, fixed;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &etw, &wors, &fixed) == 4);
    REQUIRE(wors == Catch::Approx(fixed).margin(1e-9));
    gap_somewhere = gap_somewhere || (etw - fixed > 1e-9);
  }
  CHECK(gap_somewhere);
}

TEST_CASE("verify passes on aligned instances and catches injected errors") {
  const RunResult a = run("verify --trials 60 --seed 7 --grid 0.05");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("PASS") != std::string::npos);

  const RunResult vacuous = run("verify --trials 0 --seed 7");
  CHECK(vacuous.exit_code == 0);

  const RunResult bad = run("verify --trials 5 --seed 7 --inject-error");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("counterexample report") {
  const RunResult a = run("counterexample");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("0.8") != std::string::npos);
  CHECK(a.out.find("(0.4, 0, 0, 0)") != std::string::npos);
  CHECK(a.out.find("2r1+r2 exponent at the same parameters: 0.4") != std::string::npos);
}

TEST_CASE("gap-scan smoke run") {
  const RunResult a = run("gap-scan --beta-min 1.05 --beta-max 1.15 --beta-step 0.05 "
                          "--r-step 0.01");
  CHECK(a.exit_code == 0);
  REQUIRE(a.out.rfind("beta,max_gap,has_gap\n", 0) == 0);
  CHECK(count_lines(a.out) == 4);
  CHECK(a.out.find(",1\n") != std::string::npos);  // a gap row exists near 1.1
  CHECK(read_stderr().find("gap interval") != std::string::npos);
}

TEST_CASE("mc runs are byte-identical for a fixed seed") {
  const std::string args =
      "mc --beta 1,0,0,1 --rates 0.4,0.4 --x 10,100 --samples 20000 --seed 9 --region both";
  const RunResult a = run(args);
  REQUIRE(a.exit_code == 0);
  const RunResult b = run(args);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.rfind("x,p_out,ci95,n,region\n", 0) == 0);
  CHECK(a.out.find(",hk\n") != std::string::npos);
  CHECK(read_stderr().find("ordering violations") != std::string::npos);
  CHECK(read_stderr().find("splitmix64-counter-v1") != std::string::npos);
}

TEST_CASE("mc saturated run reports slope zero") {
  const RunResult a =
      run("mc --beta 1,0.5,0.5,1 --rates 2,2 --x 10,100 --samples 10 --seed 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find(",1,0,10,etw\n") != std::string::npos);  // p_out = 1 rows with zero-width CI
  CHECK(read_stderr().find("d_hat=0") != std::string::npos);
}

TEST_CASE("mc exits with the statistics code when no slope is fittable") {
  const RunResult a =
      run("mc --beta 1,0.5,0.5,1 --rates 0,0 --x 10,100 --samples 100 --seed 1");
  CHECK(a.exit_code == 3);
}

TEST_CASE("split-sweep emits the surface and summary") {
  const RunResult a = run("split-sweep --beta 1,0.5,0.5,1 --rates 0.4,0.4 "
                          "--b-grid -0.5,0,0.5 --out /tmp/ifc_dmt_sweep.csv");
  CHECK(a.exit_code == 0);
  const std::string csv = slurp("/tmp/ifc_dmt_sweep.csv");
  REQUIRE(csv.rfind("b1,b2,value\n", 0) == 0);
  CHECK(count_lines(csv) == 10);
  const std::string err = read_stderr();
  CHECK(err.find("best split") != std::string::npos);
  CHECK(err.find("fixed split") != std::string::npos);
}

TEST_CASE("gnuplot companion script") {
  const RunResult a = run("curve --beta 1,0.5,0.5,1 --r-min 0 --r-max 0.2 --step 0.1 "
                          "--out /tmp/ifc_dmt_curve.csv --gnuplot");
  CHECK(a.exit_code == 0);
  CHECK(slurp("/tmp/ifc_dmt_curve.csv.gp").find("plot '/tmp/ifc_dmt_curve.csv'") !=
        std::string::npos);
  // --gnuplot without --out is a usage error
  const RunResult b = run("curve --beta 1,0.5,0.5,1 --gnuplot");
  CHECK(b.exit_code == 2);
}

TEST_CASE("config file mirrors flags, flags win") {
  {
    std::ofstream cfg("/tmp/ifc_dmt_cfg.ini");
    cfg << "[diversity]\nbeta=1,0.5,0.5,1\nrates=0.4,0.4\n";
  }
  const RunResult a = run("--config /tmp/ifc_dmt_cfg.ini diversity");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("overall: 0.4") != std::string::npos);
  const RunResult b = run("--config /tmp/ifc_dmt_cfg.ini diversity --rates 0,0");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("overall: 1") != std::string::npos);  // flag overrides config
}
