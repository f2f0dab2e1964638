#include "arthrosim/calibrate.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "arthrosim/errors.hpp"
#include "arthrosim/numerics.hpp"
#include "arthrosim/report.hpp"
#include "arthrosim/sweep.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

struct TargetSpec {
  const char* name;
  const char* parameter;  // config key path (documentation/report)
  double lo_m;            // search bounds, SI
  double hi_m;
  double& (*field)(ModelConfig&);          // fitted parameter, file units (mm)
  double (*eval)(const Model&);            // model output the target constrains
};

double& field_r_ext(ModelConfig& c) { return c.elbow_actuation.r_ext; }
double& field_r_sec(ModelConfig& c) { return c.pronation.r_sec; }
double& field_r_t(ModelConfig& c) { return c.supination.r_t; }

double eval_extension(const Model& m) { return extension_level(m); }
double eval_pronation(const Model& m) { return pronation_peak(m).value; }
double eval_supination(const Model& m) { return supination_peak(m).value; }

const TargetSpec kRegistry[] = {
    {"extension_torque_nm", "elbow_actuation.r_ext", 1e-4, 0.2, field_r_ext,
     eval_extension},
    {"pronation_peak_nm", "pronation.r_sec", 1e-4, 0.05, field_r_sec,
     eval_pronation},
    {"supination_peak_nm", "supination.r_t", 1e-4, 0.1, field_r_t,
     eval_supination},
};

const TargetSpec& find_target(const std::string& name) {
  for (const auto& t : kRegistry) {
    if (name == t.name) return t;
  }
  std::string known;
  for (const auto& t : kRegistry) {
    if (!known.empty()) known += ", ";
    known += t.name;
  }
  throw ValidationError("unknown calibration target: " + name +
                        " (known: " + known + ")");
}

}  // namespace

std::vector<std::string> calibration_target_names() {
  std::vector<std::string> names;
  for (const auto& t : kRegistry) names.emplace_back(t.name);
  return names;
}

std::vector<CalibrationResult> calibrate(
    ModelConfig& config, const std::vector<CalibrationTarget>& targets) {
  if (targets.empty()) {
    throw ValidationError("calibrate needs at least one target");
  }
  std::vector<CalibrationResult> results;
  for (const auto& t : targets) {
    const TargetSpec& spec = find_target(t.name);
    auto g = [&](double p_m) {
      ModelConfig trial = config;
      spec.field(trial) = m2mm(p_m);
      return spec.eval(build_model(trial));
    };
    // Target reproduction tolerance: 0.5% relative (absolute floor for
    // near-zero targets, which positive-radius geometry cannot reach anyway).
    const double f_tol = std::max(5e-3 * std::fabs(t.value), 1e-12);
    const double fitted_m = fit_scalar(t.value, g, spec.lo_m, spec.hi_m, f_tol);
    spec.field(config) = m2mm(fitted_m);

    CalibrationResult r;
    r.target_name = t.name;
    r.parameter = spec.parameter;
    r.lo_mm = m2mm(spec.lo_m);
    r.hi_mm = m2mm(spec.hi_m);
    r.fitted_mm = m2mm(fitted_m);
    r.target = t.value;
    r.achieved = spec.eval(build_model(config));
    r.residual = r.achieved - t.value;
    results.push_back(r);
  }
  return results;
}

std::string format_calibration_report(
    const std::vector<CalibrationResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "target " << r.target_name << " = " << format_value(r.target)
       << ": parameter " << r.parameter << " in [" << format_value(r.lo_mm)
       << ", " << format_value(r.hi_mm) << "] mm -> fitted "
       << format_value(r.fitted_mm) << " mm (achieved "
       << format_value(r.achieved) << ", residual "
       << format_value(r.residual) << ")\n";
  }
  return os.str();
}

}  // namespace arthro
