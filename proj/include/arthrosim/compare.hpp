#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arthrosim/sweep.hpp"

namespace arthro {

// Digitized experimental curve: abscissa/value pairs with unit tags, read
// from the same CSV dialect the sweeps emit.  applied_force_n carries the
// test-force magnitude annotation when the source provides one.
struct ExperimentRecord {
  std::string source;
  std::string abscissa_name;
  std::string abscissa_unit;
  std::string value_name;
  std::string value_unit;
  std::vector<double> abscissa;
  std::vector<double> values;
  std::optional<double> applied_force_n;
};

// Reads an experiment CSV: first column is the abscissa; value_column picks
// the data column by name (default: the single remaining column).  Comments
// "# source:" and "# applied_force_n:" populate the metadata.
ExperimentRecord read_experiment_csv(const std::string& path,
                                     const std::string& value_column = "");

struct ComparisonReport {
  std::string series_name;
  std::string source;
  int n_points = 0;
  double rmse = 0.0;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<double> abscissa;   // experiment abscissa in model units
  std::vector<double> model;      // model interpolated onto the experiment
  std::vector<double> experiment; // experiment values in model units
  std::vector<double> residuals;  // model - experiment
};

// Converts a value between the CSV unit tags (deg/rad, mm/m,
// percent/dimensionless, n, n_m); throws ValidationError when incompatible.
double convert_unit(double value, const std::string& from,
                    const std::string& to);

// Interpolates the named model series linearly onto the experiment abscissa
// (after unit conversion) and computes residual statistics.
// pass = max_abs_dev <= tolerance.  Throws ValidationError when units are
// incompatible, the model span does not cover the experiment, or the series
// is undefined (gap) over the needed range.
ComparisonReport compare_series(const SweepResult& model,
                                const std::string& series_name,
                                const ExperimentRecord& experiment,
                                double tolerance);

// Deterministic multi-line text rendering, one residual row per point.
std::string format_report(const ComparisonReport& r);

}  // namespace arthro
