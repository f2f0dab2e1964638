// arthrosim: statics and stability sweeps for the bio-inspired elbow/forearm
// model.  Every subcommand is deterministic: identical inputs produce
// byte-identical CSV and stdout, regardless of --threads.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "arthrosim/calibrate.hpp"
#include "arthrosim/compare.hpp"
#include "arthrosim/config.hpp"
#include "arthrosim/errors.hpp"
#include "arthrosim/figures.hpp"
#include "arthrosim/humeroradial.hpp"
#include "arthrosim/report.hpp"
#include "arthrosim/sweep.hpp"
#include "arthrosim/units.hpp"

namespace {

using arthro::ValidationError;

struct GlobalOpts {
  std::string config_path;    // empty -> calibrated defaults
  std::string out_dir = ".";
  std::string format = "csv";
  int threads = 1;
  std::string manifest_path;  // empty -> builtin figure manifest
};

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

void emit_sweep(const arthro::SweepResult& sweep, const std::filesystem::path& dir,
                const std::string& filename) {
  const std::filesystem::path path = dir / filename;
  arthro::write_csv_file(sweep, path.string());
  std::cout << "wrote " << path.string() << " ("
            << sweep.abscissa.values.size() << " rows)\n";
}

// "name=value" with a strict numeric value; used by --force-override and
// --target.
std::pair<std::string, double> parse_named_value(const std::string& text,
                                                 const std::string& flag) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError(flag + " expects name=value, got \"" + text + "\"");
  }
  const std::string name = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(rest, &used);
  } catch (const std::exception&) {
    throw ValidationError(flag + ": \"" + rest + "\" is not a number");
  }
  if (used != rest.size()) {
    throw ValidationError(flag + ": \"" + rest + "\" is not a number");
  }
  return {name, value};
}

// Tendon tensions addressable from the command line, mapped onto the config
// fields they scale.
void apply_force_override(arthro::ModelConfig& c, const std::string& name,
                          double value) {
  if (name == "brachialis") {
    c.elbow_actuation.brachialis.f_t1 = value;
  } else if (name == "biceps") {
    c.elbow_actuation.biceps.f_t1 = value;
  } else if (name == "extensor") {
    c.elbow_actuation.f_text = value;
  } else if (name == "pronator") {
    c.pronation.f_t2 = value;
  } else if (name == "supinator") {
    c.supination.f_t3 = value;
  } else if (name == "biceps_supination") {
    c.supination.f_t4 = value;
  } else {
    throw ValidationError(
        "unknown tendon \"" + name +
        "\" (known: brachialis, biceps, extensor, pronator, supinator, "
        "biceps_supination)");
  }
}

// Joint limits in degrees for sweep ranges, preserving the file's decimal
// values exactly when the config already speaks degrees.
double limit_deg(double file_value, arthro::AngleIoUnit unit) {
  return unit == arthro::AngleIoUnit::degrees ? file_value
                                              : arthro::rad2deg(file_value);
}

struct TorqueOpts {
  std::string joint;
  int samples = 0;  // 0 -> per-joint default
  double theta21_deg = 90.0;
  std::vector<std::string> force_overrides;
};

struct CompareOpts {
  std::string figure_id;
  std::string series;
  std::string experiment_path;
  std::string value_column;
  double tolerance = 0.0;
};

}  // namespace

int run(const GlobalOpts& g, CLI::App& app,
        // per-subcommand option state
        int hr_samples, int tfcc_samples, int iom_strain_samples,
        double iom_range_deg, double eq_max_force, double eq_lever_mm,
        int eq_samples, const std::vector<int>& eq_disable, int mcl_samples,
        const TorqueOpts& torque, const std::string& figure_id,
        const std::vector<std::string>& targets, const CompareOpts& cmp) {
  using namespace arthro;

  ModelConfig config =
      g.config_path.empty() ? default_config() : load_config(g.config_path);

  const CLI::App* torque_cmd = app.get_subcommand("torque");
  if (torque_cmd->parsed()) {
    for (const std::string& item : torque.force_overrides) {
      const auto [name, value] = parse_named_value(item, "--force-override");
      apply_force_override(config, name, value);
    }
    validate_config(config);
  }

  const std::string hash = config_hash(config);
  const Model model = build_model(config);

  const double t21_lo = limit_deg(config.joint_limits.theta21_min, config.angle_io_unit);
  const double t21_hi = limit_deg(config.joint_limits.theta21_max, config.angle_io_unit);
  const double t22_lo = limit_deg(config.joint_limits.theta22_min, config.angle_io_unit);
  const double t22_hi = limit_deg(config.joint_limits.theta22_max, config.angle_io_unit);
  const double fs_span = t22_hi - t22_lo;  // full-supination axis length

  const std::vector<FigureSpec> manifest =
      g.manifest_path.empty() ? builtin_manifest() : load_manifest(g.manifest_path);

  const std::filesystem::path out = ensure_out_dir(g.out_dir);

  if (app.get_subcommand("hr-dislocation")->parsed()) {
    emit_sweep(hr_profile_sweep(model, hash, hr_samples, g.threads), out,
               "hr-dislocation.csv");
    const DislocationThreshold t = dislocation_threshold(model.humeroradial);
    std::cout << "delta_lp_mm=" << format_value(m2mm(t.delta_lp))
              << " f_peak_n=" << format_value(t.f_peak) << "\n";
  } else if (app.get_subcommand("tfcc")->parsed()) {
    emit_sweep(tfcc_sweep(model, hash, t22_lo, t22_hi, tfcc_samples, g.threads),
               out, "tfcc.csv");
  } else if (app.get_subcommand("iom-strain")->parsed()) {
    emit_sweep(iom_strain_sweep(model, hash, -iom_range_deg, iom_range_deg,
                                iom_strain_samples, g.threads),
               out, "iom-strain.csv");
  } else if (app.get_subcommand("iom-equilibrium")->parsed()) {
    emit_sweep(iom_equilibrium_sweep(model, hash, eq_max_force,
                                     mm2m(eq_lever_mm), eq_disable, eq_samples,
                                     g.threads),
               out, "iom-equilibrium.csv");
  } else if (app.get_subcommand("mcl-strain")->parsed()) {
    emit_sweep(mcl_sweep(model, hash, t21_lo, t21_hi, mcl_samples, g.threads),
               out, "mcl-strain.csv");
  } else if (torque_cmd->parsed()) {
    const bool elbow = torque.joint == "flexion" || torque.joint == "extension";
    const int n = torque.samples > 0 ? torque.samples : (elbow ? 562 : 224);
    SweepResult sweep;
    if (torque.joint == "flexion") {
      sweep = flexion_sweep(model, hash, t21_lo, t21_hi, n, g.threads);
    } else if (torque.joint == "extension") {
      sweep = extension_sweep(model, hash, t21_lo, t21_hi, n, g.threads);
    } else {
      // pronation and supination share one forearm torque envelope
      sweep = forearm_torque_sweep(model, hash, 0.0, fs_span,
                                   torque.theta21_deg, n, g.threads);
    }
    emit_sweep(sweep, out, "torque-" + torque.joint + ".csv");
  } else if (app.get_subcommand("figure")->parsed()) {
    if (figure_id == "all") {
      for (const FigureSpec& spec : manifest) {
        emit_sweep(run_figure(model, hash, spec, g.threads), out,
                   "fig_" + spec.id + ".csv");
      }
    } else {
      const FigureSpec& spec = find_figure(manifest, figure_id);
      emit_sweep(run_figure(model, hash, spec, g.threads), out,
                 "fig_" + spec.id + ".csv");
    }
  } else if (app.get_subcommand("calibrate")->parsed()) {
    std::vector<CalibrationTarget> parsed;
    parsed.reserve(targets.size());
    for (const std::string& item : targets) {
      const auto [name, value] = parse_named_value(item, "--target");
      parsed.push_back({name, value});
    }
    ModelConfig fitted = config;
    const std::vector<CalibrationResult> results = calibrate(fitted, parsed);
    std::cout << format_calibration_report(results);
    const std::filesystem::path cfg_path = out / "calibrated_config.json";
    save_config(fitted, cfg_path.string());
    std::cout << "wrote " << cfg_path.string() << "\n";
  } else if (app.get_subcommand("compare")->parsed()) {
    const FigureSpec& spec = find_figure(manifest, cmp.figure_id);
    const SweepResult sweep = run_figure(model, hash, spec, g.threads);
    const ExperimentRecord experiment =
        read_experiment_csv(cmp.experiment_path, cmp.value_column);
    const ComparisonReport report =
        compare_series(sweep, cmp.series, experiment, cmp.tolerance);
    std::cout << format_report(report);
    if (!report.pass) {
      std::cerr << "comparison failed: max_abs_dev "
                << format_value(report.max_abs_dev) << " exceeds tolerance "
                << format_value(report.tolerance) << "\n";
      return 4;
    }
  } else if (app.get_subcommand("report")->parsed()) {
    std::cout << performance_report(model, hash);
  }
  return 0;
}

int main(int argc, char** argv) {
  CLI::App app{
      "arthrosim: statics, stability, and torque-envelope sweeps for a "
      "bio-inspired elbow/forearm mechanism"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path,
                 "Model configuration JSON (default: calibrated defaults)")
      ->envname("ARTHROSIM_CONFIG");
  app.add_option("--out", g.out_dir, "Output directory for generated files")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for sweeps")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--manifest", g.manifest_path,
                 "Figure manifest JSON (default: builtin)")
      ->envname("ARTHROSIM_MANIFEST");

  int hr_samples = 401;
  CLI::App* hr = app.add_subcommand(
      "hr-dislocation",
      "Humeroradial dislocation profile: external force and rim angle vs "
      "ligament elongation, plus the threshold summary");
  hr->add_option("--samples", hr_samples, "Grid points")
      ->check(CLI::Range(1, 2000000))
      ->capture_default_str();

  int tfcc_samples = 224;
  CLI::App* tfcc = app.add_subcommand(
      "tfcc", "Wrist-band excursions vs forearm rotation over the full range");
  tfcc->add_option("--samples", tfcc_samples, "Grid points")
      ->check(CLI::Range(1, 2000000))
      ->capture_default_str();

  int iom_strain_samples = 161;
  double iom_range_deg = 8.0;
  CLI::App* iom_strain = app.add_subcommand(
      "iom-strain",
      "Per-bundle membrane elongation vs interosseous deflection angle");
  iom_strain->add_option("--samples", iom_strain_samples, "Grid points")
      ->check(CLI::Range(1, 2000000))
      ->capture_default_str();
  iom_strain
      ->add_option("--range-deg", iom_range_deg,
                   "Half-width of the deflection sweep, degrees")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // Default stays below the modeled membrane capacity in both directions
  // (~1.6 N leftward at a 250 mm lever); larger loads have no equilibrium.
  double eq_max_force = 1.2;
  double eq_lever_mm = 250.0;
  int eq_samples = 21;
  std::vector<int> eq_disable;
  CLI::App* iom_eq = app.add_subcommand(
      "iom-equilibrium",
      "Equilibrium deflection vs transverse load, both directions");
  iom_eq->add_option("--max-force", eq_max_force, "Largest applied load, N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  iom_eq->add_option("--lever-mm", eq_lever_mm, "Load moment arm, mm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  iom_eq->add_option("--samples", eq_samples, "Grid points")
      ->check(CLI::Range(1, 2000000))
      ->capture_default_str();
  iom_eq
      ->add_option("--disable", eq_disable,
                   "Bundle ids to exclude (sectioning study)")
      ->delimiter(',');

  int mcl_samples = 562;
  CLI::App* mcl = app.add_subcommand(
      "mcl-strain", "Collateral-band strains vs elbow flexion angle");
  mcl->add_option("--samples", mcl_samples, "Grid points")
      ->check(CLI::Range(1, 2000000))
      ->capture_default_str();

  TorqueOpts torque;
  CLI::App* tq = app.add_subcommand(
      "torque", "Joint torque envelope for one actuation path");
  tq->add_option("--joint", torque.joint, "Joint/direction to sweep")
      ->required()
      ->check(CLI::IsMember({"flexion", "extension", "pronation", "supination"}));
  tq->add_option("--samples", torque.samples,
                 "Grid points (default: 562 elbow, 224 forearm)")
      ->check(CLI::Range(1, 2000000));
  tq->add_option("--theta21-deg", torque.theta21_deg,
                 "Elbow angle for the biceps supination term, degrees")
      ->capture_default_str();
  tq->add_option("--force-override", torque.force_overrides,
                 "Tendon tension override, name=newtons (repeatable)");

  std::string figure_id = "all";
  CLI::App* fig = app.add_subcommand(
      "figure", "Reproduce canonical figure data from the manifest");
  fig->add_option("--id", figure_id, "Figure id, or 'all'")
      ->capture_default_str();

  std::vector<std::string> targets;
  CLI::App* cal = app.add_subcommand(
      "calibrate",
      "Fit geometry parameters so model outputs hit stated targets; writes "
      "the fitted config");
  cal->add_option("--target", targets,
                  "Performance target, name=value (repeatable)")
      ->required();

  CompareOpts cmp;
  CLI::App* cp = app.add_subcommand(
      "compare", "Interpolate a model series onto measured data and report "
                 "residual statistics");
  cp->add_option("--figure", cmp.figure_id, "Figure id supplying the model series")
      ->required();
  cp->add_option("--series", cmp.series, "Model series (column) name")->required();
  cp->add_option("--experiment", cmp.experiment_path, "Measured-data CSV")
      ->required();
  cp->add_option("--tolerance", cmp.tolerance,
                 "Max absolute deviation for a pass, model units")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cp->add_option("--value-column", cmp.value_column,
                 "Data column when the CSV has several");

  CLI::App* rep = app.add_subcommand(
      "report", "Performance summary: ranges, torque envelopes, "
                "stability thresholds");

  // Usage is `arthrosim <subcommand> --config ... --out ...`: global options
  // appear after the subcommand, so let unmatched ones fall through.
  for (CLI::App* s : {hr, tfcc, iom_strain, iom_eq, mcl, tq, fig, cal, cp, rep}) {
    s->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version -> 0, usage errors -> 2
  }

  try {
    return run(g, app, hr_samples, tfcc_samples, iom_strain_samples,
               iom_range_deg, eq_max_force, eq_lever_mm, eq_samples, eq_disable,
               mcl_samples, torque, figure_id, targets, cmp);
  } catch (const arthro::ComparisonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const arthro::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const arthro::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
