#pragma once

#include <string>
#include <vector>

#include "arthrosim/config.hpp"

namespace arthro {

struct CalibrationTarget {
  std::string name;   // registered target, e.g. "pronation_peak_nm"
  double value = 0.0; // desired model output
};

struct CalibrationResult {
  std::string target_name;
  std::string parameter;  // config key path of the fitted parameter
  double lo_mm = 0.0;     // search bounds, file units
  double hi_mm = 0.0;
  double fitted_mm = 0.0; // fitted parameter value, file units
  double target = 0.0;
  double achieved = 0.0;  // model output at the fitted value
  double residual = 0.0;  // achieved - target
};

// Registered target names, for help text and error messages.
std::vector<std::string> calibration_target_names();

// Fits one registered scalar parameter per target (0.5% relative tolerance)
// and writes the fitted values back into the config (file units).  Unreachable
// targets throw NumericError reporting the achievable extremes.
std::vector<CalibrationResult> calibrate(ModelConfig& config,
                                         const std::vector<CalibrationTarget>& targets);

std::string format_calibration_report(const std::vector<CalibrationResult>& results);

}  // namespace arthro
