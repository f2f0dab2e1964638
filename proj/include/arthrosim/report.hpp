#pragma once

#include <string>

#include "arthrosim/config.hpp"

namespace arthro {

struct PeakValue {
  double argument = 0.0;  // axis value at the extremum (rad)
  double value = 0.0;
};

struct SupinationPeak {
  double theta22_fs = 0.0;  // full-supination axis (rad)
  double theta21 = 0.0;     // elbow angle giving the biceps-term maximum (rad)
  double value = 0.0;
};

// Extrema over the configured ranges; degenerate (single-point) ranges are
// evaluated at that point.  Forearm peaks live on the full-supination axis.
PeakValue flexion_peak(const Model& m);
double extension_level(const Model& m);
PeakValue pronation_peak(const Model& m);
SupinationPeak supination_peak(const Model& m);
PeakValue max_abs_prul(const Model& m);  // argument in the config theta22 frame
PeakValue max_drul(const Model& m);

// Deterministic multi-line performance summary: ranges, torque envelopes
// (opposing motion negated), dislocation threshold, ligament excursions.
std::string performance_report(const Model& m, const std::string& hash);

}  // namespace arthro
