// Binary-level tests: exit codes, output schema, registry override, and the
// figure-reproduction runtime budget.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(LCP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes: ok, unknown material, invalid range") {
  CHECK(run("sweep --quantity force-pc --material pc --zmin-nm 200 --zmax-nm 400 --points 3") ==
        0);
  CHECK(run("sweep --quantity force --material unobtainium --zmin-nm 200 --zmax-nm 400 "
            "--points 3") == 3);
  CHECK(run("sweep --quantity force --material gold --zmin-nm 400 --zmax-nm 200 --points 3") ==
        4);
  CHECK(run("sweep --quantity force --material gold --zmin-nm 0 --zmax-nm 200 --points 3") ==
        4);
  CHECK(run("sweep --quantity force-near --material pc --zmin-nm 100 --zmax-nm 200 --points "
            "2") == 4);
  CHECK(run("sweep --quantity spectrum --material gold --zmin-nm 100 --zmax-nm 200 --points "
            "2") == 4);
  CHECK(run("asymptotics --material pc --z-list-nm 100,200") == 4);
}

TEST_CASE("nonconvergence surfaces as exit 2 with flagged rows") {
  const std::string out = "cli_nonconv_tmp.csv";
  // Lambda = 20 cannot deliver 1e-9 at these distances: honest refusal per row
  CHECK(run("sweep --quantity force --material gold --zmin-nm 8 --zmax-nm 9 --points 2 "
            "--tail-cutoff 20 --rel-tol 1e-9 --out " +
            out) == 2);
  const std::string text = slurp(out);
  CHECK(text.find("nonconvergence") != std::string::npos);
  CHECK(text.find("nan") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("csv headers are stable") {
  const std::string out = "cli_hdr_tmp.csv";
  REQUIRE(run("sweep --quantity force --material gold --zmin-nm 200 --zmax-nm 300 --points 2 "
              "--out " +
              out) == 0);
  CHECK(slurp(out).find("z_A_nm,value_SI,error_estimate,regime,flag\n") != std::string::npos);

  REQUIRE(run("sweep --quantity velocity --material gold --zmin-nm 200 --zmax-nm 300 "
              "--points 2 --out " +
              out) == 0);
  CHECK(slurp(out).find("z_A_nm,value_SI,error_estimate,regime,flag,value_mm_s\n") !=
        std::string::npos);

  REQUIRE(run("spectrum --material gold --z-nm 264 --phi-points 90 --out " + out) == 0);
  const std::string spec_text = slurp(out);
  CHECK(spec_text.find("phi_rad,gamma_bar_raw,gamma_bar_normalized\n") != std::string::npos);
  CHECK(spec_text.find("# four_B = ") != std::string::npos);

  REQUIRE(run("asymptotics --material gold --z-list-nm 4.26,8520 --out " + out) == 0);
  CHECK(slurp(out).find("z_A_nm,F_full,F_near,F_retarded,rel_dev_near,rel_dev_ret\n") !=
        std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("json format emits a parseable mirror") {
  const std::string out = "cli_json_tmp.json";
  REQUIRE(run("sweep --quantity force-pc --material pc --zmin-nm 200 --zmax-nm 400 --points 3 "
              "--format json --out " +
              out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"metadata\"") != std::string::npos);
  CHECK(text.find("\"registry_hash\"") != std::string::npos);
  CHECK(text.find("\"rows\"") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("registry file extends and overrides the builtins") {
  const std::string reg = "cli_reg_tmp.cfg";
  {
    std::ofstream f(reg);
    f << "name = glass\neps_re = 2.25\neps_im = 0\n";
  }
  const std::string out = "cli_reg_out_tmp.csv";
  CHECK(run("sweep --quantity force --material glass --zmin-nm 200 --zmax-nm 300 --points 2 "
            "--registry " +
            reg + " --out " + out) == 0);
  // same spelled-out registry through the environment variable
  const std::string cmd = std::string("LCP_MATERIALS=") + reg + " " + LCP_CLI_PATH +
                          " materials list > " + out + " 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out).find("glass") != std::string::npos);
  std::remove(reg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("materials list prints the registry") {
  const std::string out = "cli_mat_tmp.txt";
  const std::string cmd = std::string(LCP_CLI_PATH) + " materials list > " + out + " 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("gold") != std::string::npos);
  CHECK(text.find("silica") != std::string::npos);
  CHECK(text.find("registry_hash") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("figure presets complete within the five-minute budget") {
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"fig2", "fig3-silica", "fig3-gold", "fig4", "fig5"}) {
    const std::string out = std::string("cli_preset_tmp_") + name + ".csv";
    CHECK(run(std::string("preset ") + name + " --out " + out) == 0);
    CHECK(!slurp(out).empty());
    std::remove(out.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("figure presets took ", secs, " s");
  CHECK(secs < 300.0);
}

TEST_CASE("unknown preset fails cleanly") {
  CHECK(run("preset fig99") == 4);
}
