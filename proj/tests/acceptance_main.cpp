// Acceptance gate for the arthrosim deliverable.  Each numbered criterion
// prints one [PASS]/[FAIL] line with the measured quantities and its runtime;
// the process exits nonzero when any criterion fails.  Criterion 9 drives the
// installed CLI binary (ARTHROSIM_BIN) end to end.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arthrosim/actuation.hpp"
#include "arthrosim/compare.hpp"
#include "arthrosim/config.hpp"
#include "arthrosim/figures.hpp"
#include "arthrosim/humeroradial.hpp"
#include "arthrosim/iom.hpp"
#include "arthrosim/mcl.hpp"
#include "arthrosim/numerics.hpp"
#include "arthrosim/sweep.hpp"
#include "arthrosim/tfcc.hpp"
#include "arthrosim/units.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using arthro::format_value;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      note("FAILED: " + why);
    }
  }
};

int run_criterion(int idx, const std::string& name, double budget_s,
                  const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (budget_s > 0.0) {
    out.expect(secs < budget_s, "runtime " + format_value(secs) +
                                    " s exceeds the " + format_value(budget_s) +
                                    " s budget");
  }
  std::cout << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << " ("
            << name << "): " << out.detail << " ["
            << static_cast<long>(secs * 1000.0) << " ms]\n";
  return out.ok ? 0 : 1;
}

int run_shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Output paths differ between run directories, so the "wrote <path>" echo
// lines are excluded from the stdout byte comparison (the files themselves
// are compared directly).
std::string strip_wrote_lines(const std::string& text) {
  std::istringstream is(text);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("wrote ", 0) == 0) continue;
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

int main() {
  using namespace arthro;

  const ModelConfig config = default_config();
  const std::string hash = config_hash(config);
  const Model model = build_model(config);
  const double fs_span_deg = rad2deg(model.limits.theta22_span());
  const double theta21_hi_deg = rad2deg(model.limits.theta21_max);

  int failures = 0;

  failures += run_criterion(
      1, "extension torque constant", 1.0, [&](Outcome& out) {
        const double tau = extension_torque(model.elbow);
        out.expect(std::fabs(tau - 11.25) <= 1e-12,
                   "tau_ext = " + format_value(tau) + " N*m, want 11.25");
        const SweepResult s =
            extension_sweep(model, hash, 0.0, theta21_hi_deg, 562, 1);
        double max_dev = 0.0;
        for (double v : s.series[0].values) {
          max_dev = std::max(max_dev, std::fabs(v - 11.25));
        }
        out.expect(max_dev <= 1e-12, "max |deviation from 11.25| = " +
                                         format_value(max_dev) + " N*m");
        out.note("tau_ext = " + format_value(tau) +
                 " N*m, max |dev| over 562 postures = " +
                 format_value(max_dev) + " N*m");
      });

  failures += run_criterion(2, "pronation peak", 1.0, [&](Outcome& out) {
    const PronationGeometry& p = model.pronation;
    const MaxResult r = maximize_1d(
        [&p](double x) { return pronation_torque(p, deg2rad(x)); }, 0.0,
        fs_span_deg);
    out.expect(std::fabs(r.value - 14.0) <= 0.14,
               "peak " + format_value(r.value) + " N*m outside 14 +/- 1%");
    out.expect(std::fabs(r.x - 100.0) <= 2.0,
               "argmax " + format_value(r.x) + " deg not within 2 deg of 100");
    out.note("peak " + format_value(r.value) + " N*m at theta22_fs = " +
             format_value(r.x) + " deg");
  });

  failures += run_criterion(3, "supination peak", 1.0, [&](Outcome& out) {
    const SupinationGeometry& s = model.supination;
    const MaxResult r = maximize_1d(
        [&s](double x) {
          return supination_torque(s, deg2rad(x), kPi / 2.0);
        },
        0.0, fs_span_deg);
    out.expect(std::fabs(r.value - 7.8) <= 0.156,
               "total peak " + format_value(r.value) + " N*m outside 7.8 +/- 2%");
    const double s2_zero = supination_torque_s2(s, 0.0);
    out.expect(s2_zero == 0.0,
               "tau_s2(theta21 = 0) = " + format_value(s2_zero) + ", want exact 0");
    out.note("total peak " + format_value(r.value) + " N*m at theta22_fs = " +
             format_value(r.x) + " deg with theta21 = 90 deg; tau_s2(0) = 0 exactly");
  });

  failures += run_criterion(4, "flexion envelope", 0.0, [&](Outcome& out) {
    const ElbowActuation& a = model.elbow;
    const double hi = model.limits.theta21_max;
    const auto f = [&a](double x) { return combined_flexion_torque(a, x); };
    const MaxResult r = maximize_1d(f, 0.0, hi);
    out.expect(r.value >= 24.0,
               "peak " + format_value(r.value) + " N*m below 24");
    out.expect(!r.on_boundary, "peak sits on a ROM endpoint");
    out.expect(f(0.0) < r.value && f(hi) < r.value,
               "a ROM endpoint is not strictly below the interior peak");
    double jump = 0.0;
    for (const FlexorGeometry* t : {&a.brachialis, &a.biceps}) {
      const double g = t->gamma();
      jump = std::max(jump, std::fabs(flexion_torque(*t, g + 1e-12) -
                                      flexion_torque(*t, g - 1e-12)));
    }
    out.expect(jump <= 1e-9,
               "stage continuity jump " + format_value(jump) + " N*m");
    out.note("peak " + format_value(r.value) + " N*m at theta21 = " +
             format_value(rad2deg(r.x)) + " deg; stage jump " +
             format_value(jump) + " N*m");
  });

  failures += run_criterion(5, "wrist band excursions", 0.0, [&](Outcome& out) {
    const TfccGeometry& g = model.tfcc;
    out.expect(drul_elongation(g, 0.0) == 0.0 && prul_elongation(g, 0.0) == 0.0,
               "rest elongations are not exactly zero");
    double max_prul = 0.0;
    const int n = 2001;
    for (int i = 0; i < n; ++i) {
      const double t = model.limits.theta22_min +
                       model.limits.theta22_span() * i / (n - 1);
      max_prul = std::max(max_prul, std::fabs(prul_elongation(g, t)));
    }
    out.expect(max_prul <= mm2m(2.0), "max |palmar| " +
                                          format_value(m2mm(max_prul)) +
                                          " mm exceeds 2 mm");
    const double e = g.theta_ecu;
    const double jump =
        std::fabs(drul_elongation(g, e + 1e-9) - drul_elongation(g, e - 1e-9));
    out.expect(jump <= 1e-9, "dorsal elongation jump at the contact switch = " +
                                 format_value(jump) + " m");
    const double pre = drul_slope(g, e, -1);
    const double post = drul_slope(g, e, +1);
    out.expect(post > pre, "post-contact slope " + format_value(post) +
                               " not greater than pre-contact " +
                               format_value(pre));
    out.note("max |palmar| = " + format_value(m2mm(max_prul)) +
             " mm; dorsal slope " + format_value(pre) + " -> " +
             format_value(post) + " m/rad across the switch");
  });

  failures += run_criterion(6, "membrane oracle equivalence", 0.0,
                            [&](Outcome& out) {
    const ForearmLinkage& link = model.linkage;
    double worst_len = 0.0;
    double worst_dev = 0.0;
    bool grouping = true;
    for (const IomBundle& b : model.bundles) {
      for (int i = 0; i < 41; ++i) {
        const double theta_d =
            link.theta_d_rest - deg2rad(8.0) + deg2rad(16.0) * i / 40.0;
        const double closed = bundle_length(link, b, theta_d + b.angle_dag);
        const double coord = oracle::bundle_oracle(link, b, theta_d).length;
        worst_len = std::max(worst_len, std::fabs(closed - coord));
      }
      worst_dev = std::max(worst_dev, rest_length_deviation(link, b));
      const double left = bundle_strains(link, b, deg2rad(4.0)).taut;
      const double right = bundle_strains(link, b, -deg2rad(4.0)).taut;
      if (b.direction == BundleDirection::ccw) {
        grouping = grouping && left > 0.0 && right == 0.0;
      } else {
        grouping = grouping && right > 0.0 && left == 0.0;
      }
    }
    out.expect(worst_len <= 1e-8, "closed-form vs coordinate oracle gap " +
                                      format_value(worst_len) + " m");
    out.expect(worst_dev <= 0.05, "worst tabulated rest-length deviation " +
                                      format_value(worst_dev * 100.0) + "%");
    out.expect(grouping, "directional taut grouping violated at +/- 4 deg");
    out.note("7x41 grid |closed-form - oracle| <= " + format_value(worst_len) +
             " m; worst rest-length deviation " +
             format_value(worst_dev * 100.0) + "%; taut grouping holds");
  });

  failures += run_criterion(7, "dislocation threshold properties", 10.0,
                            [&](Outcome& out) {
    const HumeroradialGeometry& g = model.humeroradial;
    out.expect(external_force(g, 0.0) == 0.0, "F_e(0) is not exactly zero");
    const double edge = elongation_limit(g);
    int transitions = 0;
    bool monotone_after = true;
    double prev = external_force(g, 0.0);
    bool rising = true;
    for (int i = 1; i <= 2000; ++i) {
      const double v = external_force(g, edge * i / 2000.0);
      if (rising) {
        if (v < prev) {
          rising = false;
          ++transitions;
        }
      } else if (v >= prev) {
        monotone_after = false;
      }
      prev = v;
    }
    out.expect(transitions == 1 && monotone_after,
               "force profile is not unimodal with an interior peak");
    double prev_peak = -1.0;
    bool increasing = true;
    for (double ts : {10.0, 15.0, 20.0, 25.0, 30.0}) {
      const HumeroradialGeometry gf = HumeroradialGeometry::from_rest_pose(
          g.l_a, g.r, g.gamma, deg2rad(ts), g.k, g.l_e);
      const double fp = dislocation_threshold(gf).f_peak;
      increasing = increasing && fp > prev_peak;
      prev_peak = fp;
    }
    out.expect(increasing,
               "f_peak is not strictly increasing over the rim-angle family");
    const DislocationThreshold th = dislocation_threshold(g);
    const oracle::GridMax gm = oracle::grid_argmax(
        [&g](double x) { return external_force(g, x); }, 0.0, edge, 1000001);
    out.expect(std::fabs(th.delta_lp - gm.x) <= 1e-7,
               "threshold " + format_value(th.delta_lp) + " m vs 1e6-point grid " +
                   format_value(gm.x) + " m");
    out.note("delta_lp = " + format_value(m2mm(th.delta_lp)) +
             " mm (1e6-point grid agrees to " +
             format_value(std::fabs(th.delta_lp - gm.x)) + " m); f_peak = " +
             format_value(th.f_peak) + " N; family strictly increasing");
  });

  failures += run_criterion(8, "collateral strain properties", 0.0,
                            [&](Outcome& out) {
    const MclGeometry& g = model.mcl;
    const MclStrains s90 = mcl_strains(g, deg2rad(90.0));
    out.expect(s90.eps_a == 0.0 && s90.eps_p == 0.0,
               "strains at 90 deg are not exactly zero");
    bool ant = true;
    double prev = mcl_strains(g, 0.0).eps_a;
    for (int d = 1; d <= 90; ++d) {
      const double v = mcl_strains(g, deg2rad(static_cast<double>(d))).eps_a;
      ant = ant && v < prev;
      prev = v;
    }
    out.expect(ant, "anterior strain is not strictly decreasing on [0, 90] deg");
    bool post = true;
    prev = s90.eps_p;
    for (int i = 1; i <= 100; ++i) {
      const double t = 90.0 + (theta21_hi_deg - 90.0) * i / 100.0;
      const double v = mcl_strains(g, deg2rad(t)).eps_p;
      post = post && v > prev;
      prev = v;
    }
    out.expect(post, "posterior strain is not strictly increasing on [90, " +
                         format_value(theta21_hi_deg) + "] deg");
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = deg2rad(theta21_hi_deg * i / 100.0);
      const MclLengths l = mcl_lengths(g, t);
      const oracle::MclOracle o = oracle::mcl_oracle(g, t);
      worst = std::max(
          {worst, std::fabs(l.l_a1 - o.l_a1), std::fabs(l.l_p1 - o.l_p1)});
    }
    out.expect(worst <= 1e-9, "band lengths deviate from the coordinate oracle by " +
                                  format_value(worst) + " m");
    out.note("strains(90 deg) = 0 exactly; monotone on both sides; oracle gap " +
             format_value(worst) + " m");
  });

  failures += run_criterion(9, "cli determinism", 0.0, [&](Outcome& out) {
    const char* bin_env = std::getenv("ARTHROSIM_BIN");
    out.expect(bin_env != nullptr && *bin_env != '\0',
               "ARTHROSIM_BIN must point at the CLI executable");
    if (!out.ok) return;
    const std::string bin = std::string("\"") + bin_env + "\"";

    const fs::path work = "acceptance_cli";
    fs::remove_all(work);
    fs::create_directories(work / "inputs");
    {
      std::ofstream os(work / "inputs" / "experiment.csv", std::ios::binary);
      os << "# source: synthetic bench\n"
            "# units: deg,n_m\n"
            "theta21_deg,tau_nm\n"
            "60,0\n"
            "90,0\n";
    }
    const std::string exp = (work / "inputs" / "experiment.csv").string();

    struct Invocation {
      std::string name;
      std::string args;
    };
    const std::vector<Invocation> subs = {
        {"hr-dislocation", "hr-dislocation"},
        {"tfcc", "tfcc"},
        {"iom-strain", "iom-strain"},
        {"iom-equilibrium", "iom-equilibrium"},
        {"mcl-strain", "mcl-strain"},
        {"torque-flexion", "torque --joint flexion"},
        {"torque-extension", "torque --joint extension"},
        {"torque-pronation", "torque --joint pronation"},
        {"torque-supination", "torque --joint supination"},
        {"figure-all", "figure --id all"},
        {"calibrate", "calibrate --target extension_torque_nm=11.25"},
        {"compare",
         "compare --figure flexion-torque --series tau_combined_nm "
         "--experiment \"" + exp + "\" --tolerance 30"},
        {"report", "report"},
    };

    const std::vector<std::pair<std::string, int>> runs = {
        {"r1", 1}, {"r2", 1}, {"t4", 4}};
    for (const auto& [label, threads] : runs) {
      const fs::path dir = work / label;
      fs::create_directories(dir);
      for (const Invocation& sub : subs) {
        const fs::path log = dir / ("stdout_" + sub.name + ".txt");
        const std::string cmd = bin + " " + sub.args + " --threads " +
                                std::to_string(threads) + " --out \"" +
                                dir.string() + "\" > \"" + log.string() +
                                "\" 2>&1";
        const int code = run_shell(cmd);
        out.expect(code == 0, sub.name + " (" + label + ") exited " +
                                  std::to_string(code));
      }
    }
    if (!out.ok) return;

    int compared = 0;
    for (const auto& entry : fs::directory_iterator(work / "r1")) {
      if (!entry.is_regular_file()) continue;
      const std::string fname = entry.path().filename().string();
      const bool is_stdout = fname.rfind("stdout_", 0) == 0;
      const std::string base = is_stdout
                                   ? strip_wrote_lines(slurp(entry.path()))
                                   : slurp(entry.path());
      for (const std::string& other : {std::string("r2"), std::string("t4")}) {
        const fs::path path = work / other / fname;
        if (!fs::exists(path)) {
          out.expect(false, fname + " missing from run " + other);
          continue;
        }
        const std::string text =
            is_stdout ? strip_wrote_lines(slurp(path)) : slurp(path);
        out.expect(text == base,
                   fname + " differs between r1 and " + other);
      }
      ++compared;
    }
    out.expect(compared >= 25,
               "expected >= 25 artifacts per run, saw " + std::to_string(compared));
    out.note(std::to_string(compared) +
             " artifacts byte-identical across repeated runs and threads {1,4}");
  });

  failures += run_criterion(10, "comparison statistics exactness", 0.0,
                            [&](Outcome& out) {
    SweepResult sweep;
    sweep.module = "demo";
    sweep.config_hash = "0000000000000000";
    sweep.abscissa = {"x_deg", "deg", {}};
    SweepColumn series{"y_nm", "n_m", {}};
    for (int i = 0; i <= 10; ++i) {
      const double x = static_cast<double>(i);
      sweep.abscissa.values.push_back(x);
      series.values.push_back(2.0 * x + 1.0);
    }
    sweep.series.push_back(series);

    ExperimentRecord e;
    e.source = "synthetic offset";
    e.abscissa_unit = "deg";
    e.value_unit = "n_m";
    const double d = 0.25;  // offset chosen so every FP operation stays exact
    for (int i = 0; i <= 10; i += 2) {
      e.abscissa.push_back(sweep.abscissa.values[static_cast<std::size_t>(i)]);
      e.values.push_back(series.values[static_cast<std::size_t>(i)] + d);
    }

    const ComparisonReport rep = compare_series(sweep, "y_nm", e, d);
    bool exact = rep.rmse == d && rep.max_abs_dev == d && rep.pass;
    for (double r : rep.residuals) exact = exact && r == -d;
    out.expect(exact, "uniform-offset statistics are not exact (rmse = " +
                          format_value(rep.rmse) + ", max = " +
                          format_value(rep.max_abs_dev) + ")");
    out.expect(!compare_series(sweep, "y_nm", e, d * (1.0 - 1e-9)).pass,
               "a tolerance below the offset must fail");
    out.note("uniform 0.25 offset: residuals, rmse, max_abs_dev all exact; "
             "pass flips exactly at the tolerance");
  });

  if (failures == 0) {
    std::cout << "ACCEPTANCE: all 10 criteria passed\n";
  } else {
    std::cout << "ACCEPTANCE: " << failures << " criterion(s) failed\n";
  }
  return failures == 0 ? 0 : 1;
}
