#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string binary_path() {
  const char* p = std::getenv("ARTHROSIM_BIN");
  const bool have_bin = p != nullptr && *p != '\0';
  REQUIRE_MESSAGE(have_bin, "ARTHROSIM_BIN must point at the CLI executable");
  return std::string(p);
}

// Runs the CLI via the shell, stdout+stderr captured into log_path.
int run_cli(const std::string& args, const fs::path& log_path) {
  const std::string cmd = "\"" + binary_path() + "\" " + args + " > \"" +
                          log_path.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE_MESSAGE(is.good(), "cannot open " << p.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  os << text;
}

// Fresh scratch directory under the test cwd; cleaned at construction so the
// contents of a failing run stay inspectable.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path("cli_scratch") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("report prints the performance summary and exits 0") {
  const fs::path dir = scratch("report");
  const fs::path log = dir / "report.txt";
  CHECK(run_cli("report", log) == 0);
  const std::string text = slurp(log);
  CHECK(text.find("performance summary (model-derived)") != std::string::npos);
  CHECK(text.find("config_fnv1a: f910cd4bf3e47bb4") != std::string::npos);
  CHECK(text.find("extension_torque_nm: 11.25") != std::string::npos);
  // Frozen defaults: flexion peak and dislocation threshold at 9 significant
  // digits are part of the deterministic contract.
  CHECK(text.find("25.7912039") != std::string::npos);
  CHECK(text.find("delta_lp_mm = 1.13803922") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  const fs::path dir = scratch("usage");
  CHECK(run_cli("", dir / "none.txt") == 2);
  CHECK(run_cli("frobnicate", dir / "unknown_sub.txt") == 2);
  CHECK(run_cli("report --no-such-flag", dir / "unknown_flag.txt") == 2);
  CHECK(run_cli("figure --id nope --out \"" + (dir / "f").string() + "\"",
                dir / "unknown_fig.txt") == 2);
  CHECK(run_cli("torque", dir / "missing_joint.txt") == 2);
  CHECK(run_cli("torque --joint flexion --force-override banana=5 --out \"" +
                    (dir / "t").string() + "\"",
                dir / "bad_override.txt") == 2);
  CHECK(run_cli("--threads 0 report", dir / "bad_threads.txt") == 2);
  CHECK(run_cli("--help", dir / "help.txt") == 0);
  CHECK(slurp(dir / "unknown_fig.txt").find("error:") != std::string::npos);
}

TEST_CASE("a load beyond the membrane capacity exits 3") {
  const fs::path dir = scratch("capacity");
  const int code = run_cli("iom-equilibrium --max-force 50 --samples 3 --out \"" +
                               (dir / "out").string() + "\"",
                           dir / "log.txt");
  CHECK(code == 3);
  CHECK(slurp(dir / "log.txt").find("error:") != std::string::npos);
}

TEST_CASE("compare gates its exit code on the tolerance") {
  const fs::path dir = scratch("compare");
  REQUIRE(run_cli("figure --id flexion-torque --out \"" + (dir / "model").string() + "\"",
                  dir / "gen.txt") == 0);
  REQUIRE(fs::exists(dir / "model" / "fig_flexion-torque.csv"));

  // Synthetic measurement: zero torque mid-range deviates from the model by
  // >20 N*m, so a 1 N*m tolerance fails and a 30 N*m tolerance passes.
  const fs::path exp = dir / "experiment.csv";
  write_text(exp,
             "# source: synthetic bench\n"
             "# units: deg,n_m\n"
             "theta21_deg,tau_nm\n"
             "60,0\n"
             "90,0\n");

  const std::string base = "compare --figure flexion-torque --series tau_combined_nm "
                           "--experiment \"" + exp.string() + "\" --out \"" +
                           (dir / "cmp").string() + "\"";
  CHECK(run_cli(base + " --tolerance 1", dir / "fail.txt") == 4);
  const std::string fail_text = slurp(dir / "fail.txt");
  CHECK(fail_text.find("result: FAIL") != std::string::npos);
  CHECK(fail_text.find("comparison failed") != std::string::npos);

  CHECK(run_cli(base + " --tolerance 30", dir / "pass.txt") == 0);
  CHECK(slurp(dir / "pass.txt").find("result: PASS") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
  const fs::path dir = scratch("determinism");
  for (const std::string& run : {"a", "b"}) {
    REQUIRE(run_cli("figure --id tfcc --out \"" + (dir / run).string() + "\"",
                    dir / (run + ".txt")) == 0);
  }
  REQUIRE(run_cli("figure --id tfcc --threads 2 --out \"" + (dir / "c").string() + "\"",
                  dir / "c.txt") == 0);

  const std::string a = slurp(dir / "a" / "fig_tfcc.csv");
  CHECK(a == slurp(dir / "b" / "fig_tfcc.csv"));
  CHECK(a == slurp(dir / "c" / "fig_tfcc.csv"));
  CHECK(a.rfind("# module: tfcc\n", 0) == 0);
  CHECK(a.find("# config_fnv1a: f910cd4bf3e47bb4") != std::string::npos);
}

TEST_CASE("a calibrated config file feeds back through --config") {
  const fs::path dir = scratch("config_roundtrip");
  REQUIRE(run_cli("calibrate --target extension_torque_nm=11.25 --out \"" +
                      (dir / "cal").string() + "\"",
                  dir / "cal.txt") == 0);
  const fs::path cfg = dir / "cal" / "calibrated_config.json";
  REQUIRE(fs::exists(cfg));
  CHECK(slurp(dir / "cal.txt").find("calibrated_config.json") != std::string::npos);

  CHECK(run_cli("report --config \"" + cfg.string() + "\"", dir / "report.txt") == 0);
  const std::string text = slurp(dir / "report.txt");
  CHECK(text.find("performance summary (model-derived)") != std::string::npos);
  // The fit stops at its value tolerance, so the torque lands close to (not
  // exactly on) the requested 11.25 N*m.
  const std::size_t pos = text.find("extension_torque_nm: ");
  REQUIRE(pos != std::string::npos);
  const double fitted = std::stod(text.substr(pos + 21));
  CHECK(std::fabs(fitted - 11.25) <= 11.25 * 0.005);
}
