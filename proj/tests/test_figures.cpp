#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "arthrosim/config.hpp"
#include "arthrosim/errors.hpp"
#include "arthrosim/figures.hpp"
#include "arthrosim/units.hpp"

using namespace arthro;

namespace {

Model model() { return build_model(default_config()); }
const std::string kHash = "deadbeefdeadbeef";

std::vector<std::string> names(const SweepResult& s) {
  std::vector<std::string> out;
  for (const auto& col : s.series) out.push_back(col.name);
  return out;
}

}  // namespace

TEST_CASE("uniform_grid hits decimal endpoints and key interior points exactly") {
  const auto g = uniform_grid(0.0, 140.25, 562);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 140.25);
  CHECK(g[360] == 90.0);  // 140.25*360/561

  const auto f = uniform_grid(0.0, 111.5, 224);
  CHECK(f[200] == 100.0);  // 111.5*200/223

  CHECK(uniform_grid(5.0, 5.0, 10) == std::vector<double>{5.0});
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), ValidationError);
}

TEST_CASE("manifest file and builtin manifest agree entry by entry") {
  const auto builtin = builtin_manifest();
  const auto file = load_manifest("data/figure_manifest.json");
  REQUIRE(builtin.size() == file.size());
  for (size_t i = 0; i < builtin.size(); ++i) {
    CHECK(builtin[i].id == file[i].id);
    CHECK(builtin[i].axis == file[i].axis);
    CHECK(builtin[i].start == file[i].start);
    CHECK(builtin[i].stop == file[i].stop);
    CHECK(builtin[i].samples == file[i].samples);
    CHECK(builtin[i].theta_s_deg == file[i].theta_s_deg);
    CHECK(builtin[i].theta21_deg == file[i].theta21_deg);
  }
}

TEST_CASE("every figure produces its documented columns") {
  const Model m = model();
  const auto specs = builtin_manifest();
  for (FigureSpec spec : specs) {
    spec.samples = 41;  // keep it quick; content checked elsewhere
    const SweepResult s = run_figure(m, kHash, spec, 1);
    CHECK(s.config_hash == kHash);
    CHECK(s.abscissa.values.size() == 41);
    const auto cols = names(s);
    if (spec.id == "hr-dislocation") {
      CHECK(s.abscissa.name == "delta_ls_mm");
      REQUIRE(cols.size() == 5);
      CHECK(cols[0] == "f_e_n_theta_s_10");
      CHECK(cols[4] == "f_e_n_theta_s_30");
    } else if (spec.id == "tfcc") {
      CHECK(s.abscissa.name == "theta22_deg");
      CHECK(cols == std::vector<std::string>{"drul_mm", "prul_mm"});
    } else if (spec.id == "iom-strain") {
      CHECK(s.abscissa.name == "deflection_deg");
      CHECK(cols.size() == 14);  // raw + taut per bundle
    } else if (spec.id == "mcl-strain") {
      CHECK(s.abscissa.name == "theta21_deg");
      REQUIRE(cols.size() >= 2);
      CHECK(cols[0] == "eps_anterior");
      CHECK(cols[1] == "eps_posterior");
    } else if (spec.id == "flexion-torque") {
      CHECK(cols == std::vector<std::string>{"tau_brachialis_nm", "tau_biceps_nm",
                                             "tau_combined_nm"});
    } else if (spec.id == "forearm-torque") {
      CHECK(s.abscissa.name == "theta22_fs_deg");
      CHECK(cols == std::vector<std::string>{"tau_pronation_nm", "tau_supination_s1_nm",
                                             "tau_supination_total_nm"});
    }
  }
}

TEST_CASE("thread count never changes a value") {
  const Model m = model();
  for (FigureSpec spec : builtin_manifest()) {
    spec.samples = 37;
    const SweepResult s1 = run_figure(m, kHash, spec, 1);
    const SweepResult s3 = run_figure(m, kHash, spec, 3);
    REQUIRE(s1.series.size() == s3.series.size());
    for (size_t c = 0; c < s1.series.size(); ++c) {
      for (size_t i = 0; i < s1.abscissa.values.size(); ++i) {
        const double a = s1.series[c].values[i];
        const double b = s3.series[c].values[i];
        if (std::isnan(a)) {
          CHECK(std::isnan(b));
        } else {
          CHECK(a == b);  // bitwise
        }
      }
    }
  }
}

TEST_CASE("grid refinement keeps shared abscissae bit-identical") {
  const Model m = model();
  const SweepResult coarse = tfcc_sweep(m, kHash, -60.0, 51.5, 91, 1);
  const SweepResult fine = tfcc_sweep(m, kHash, -60.0, 51.5, 181, 1);
  for (int i = 0; i < 91; ++i) {
    CHECK(coarse.abscissa.values[i] == fine.abscissa.values[2 * i]);
    CHECK(coarse.series[0].values[i] == fine.series[0].values[2 * i]);
    CHECK(coarse.series[1].values[i] == fine.series[1].values[2 * i]);
  }
}

TEST_CASE("rim-angle family reports NaN beyond each curve's own domain") {
  const Model m = model();
  const SweepResult s = hr_family_sweep(m, kHash, {10.0, 30.0}, 101, 1);
  REQUIRE(s.series.size() == 2);
  // the shared abscissa spans the widest domain; the 10-degree curve ends early
  CHECK(std::isnan(s.series[0].values.back()));
  CHECK_FALSE(std::isnan(s.series[1].values.back()));
  CHECK_FALSE(std::isnan(s.series[0].values.front()));
}

TEST_CASE("equilibrium sweep is symmetric in its force grid and notes the lever") {
  const Model m = model();
  const SweepResult s = iom_equilibrium_sweep(m, kHash, 1.0, 0.25, {}, 11, 2);
  CHECK(s.abscissa.name == "force_n");
  CHECK(s.abscissa.values.front() == 0.0);
  CHECK(s.abscissa.values.back() == 1.0);
  REQUIRE(s.series.size() == 2);
  CHECK(s.series[0].values[0] == 0.0);  // zero force, zero deflection
  CHECK(s.series[1].values[0] == 0.0);
  CHECK(s.series[0].values.back() > 0.0);
  CHECK(s.series[1].values.back() < 0.0);
  bool lever_note = false;
  for (const auto& n : s.notes) lever_note |= n.rfind("lever_mm", 0) == 0;
  CHECK(lever_note);
}

TEST_CASE("figure lookup failures list the known ids") {
  const auto specs = builtin_manifest();
  CHECK_NOTHROW(find_figure(specs, "tfcc"));
  CHECK_THROWS_AS(find_figure(specs, "nope"), ValidationError);
}

TEST_CASE("parallel_map propagates worker exceptions") {
  CHECK_THROWS_AS(parallel_map(16, 4,
                               [](int i) {
                                 if (i == 9) throw NumericError("boom");
                               }),
                  NumericError);
}
