#include "arthrosim/report.hpp"

#include <cmath>
#include <sstream>

#include "arthrosim/numerics.hpp"
#include "arthrosim/sweep.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

PeakValue maximize_or_point(const std::function<double(double)>& f, double lo,
                            double hi) {
  if (!(hi > lo)) return {lo, f(lo)};
  const MaxResult r = maximize_1d(f, lo, hi, 1e-10, 512);
  return {r.x, r.value};
}

// Largest sin over a flexion interval inside [0, pi]: the interior maximum at
// pi/2 when covered, otherwise the nearer endpoint.
double max_sin(double lo, double hi) {
  if (lo <= kPi / 2.0 && kPi / 2.0 <= hi) return 1.0;
  return std::max(std::sin(lo), std::sin(hi));
}

double best_theta21(double lo, double hi) {
  if (lo <= kPi / 2.0 && kPi / 2.0 <= hi) return kPi / 2.0;
  return std::sin(lo) >= std::sin(hi) ? lo : hi;
}

}  // namespace

PeakValue flexion_peak(const Model& m) {
  return maximize_or_point(
      [&](double t) { return combined_flexion_torque(m.elbow, t); },
      m.limits.theta21_min, m.limits.theta21_max);
}

double extension_level(const Model& m) { return extension_torque(m.elbow); }

PeakValue pronation_peak(const Model& m) {
  return maximize_or_point(
      [&](double t) { return pronation_torque(m.pronation, t); }, 0.0,
      m.limits.theta22_span());
}

SupinationPeak supination_peak(const Model& m) {
  const double t21 = best_theta21(m.limits.theta21_min, m.limits.theta21_max);
  const double s2 = m.supination.f_t4 * m.supination.r_t *
                    max_sin(m.limits.theta21_min, m.limits.theta21_max);
  const PeakValue s1 = maximize_or_point(
      [&](double t) { return supination_torque_s1(m.supination, t); }, 0.0,
      m.limits.theta22_span());
  return {s1.argument, t21, s1.value + s2};
}

PeakValue max_abs_prul(const Model& m) {
  return maximize_or_point(
      [&](double t) { return std::fabs(prul_elongation(m.tfcc, t)); },
      m.limits.theta22_min, m.limits.theta22_max);
}

PeakValue max_drul(const Model& m) {
  return maximize_or_point(
      [&](double t) { return drul_elongation(m.tfcc, t); },
      m.limits.theta22_min, m.limits.theta22_max);
}

std::string performance_report(const Model& m, const std::string& hash) {
  std::ostringstream os;
  const JointLimits& L = m.limits;
  const bool has_flexion_span = L.theta21_max > L.theta21_min;
  const bool has_rotation_span = L.theta22_max > L.theta22_min;

  os << "performance summary (model-derived)\n";
  os << "config_fnv1a: " << hash << "\n";

  os << "elbow_flexion_range_deg: " << format_value(rad2deg(L.theta21_min))
     << " to " << format_value(rad2deg(L.theta21_max));
  if (!has_flexion_span) os << " (single posture)";
  os << "\n";

  os << "forearm_rotation_range_deg: " << format_value(rad2deg(L.theta22_min))
     << " to " << format_value(rad2deg(L.theta22_max)) << " (reference: "
     << to_string(L.reference)
     << ", span " << format_value(rad2deg(L.theta22_span())) << ")";
  if (!has_rotation_span) os << " (single posture)";
  os << "\n";

  const PeakValue fp = flexion_peak(m);
  const double ext = extension_level(m);
  os << "elbow_torque_envelope_nm: -" << format_value(ext) << " to "
     << format_value(fp.value) << " (extension negative, flexion positive)\n";
  os << "flexion_peak_nm: " << format_value(fp.value) << " at theta21_deg = "
     << format_value(rad2deg(fp.argument)) << "\n";
  os << "extension_torque_nm: " << format_value(ext)
     << " (posture-independent)\n";

  const PeakValue pp = pronation_peak(m);
  const SupinationPeak sp = supination_peak(m);
  os << "forearm_torque_envelope_nm: -" << format_value(pp.value) << " to "
     << format_value(sp.value) << " (pronation negative, supination positive)\n";
  os << "pronation_peak_nm: " << format_value(pp.value)
     << " at theta22_fs_deg = " << format_value(rad2deg(pp.argument)) << "\n";
  os << "supination_peak_nm: " << format_value(sp.value)
     << " at theta22_fs_deg = " << format_value(rad2deg(sp.theta22_fs))
     << " with theta21_deg = " << format_value(rad2deg(sp.theta21)) << "\n";

  const DislocationThreshold th = dislocation_threshold(m.humeroradial);
  os << "hr_dislocation_threshold: delta_lp_mm = "
     << format_value(m2mm(th.delta_lp))
     << ", f_peak_n = " << format_value(th.f_peak) << "\n";

  const PeakValue prul = max_abs_prul(m);
  const PeakValue drul = max_drul(m);
  os << "max_prul_excursion_mm: " << format_value(m2mm(prul.value))
     << " at theta22_deg = " << format_value(rad2deg(prul.argument)) << "\n";
  os << "max_drul_elongation_mm: " << format_value(m2mm(drul.value))
     << " at theta22_deg = " << format_value(rad2deg(drul.argument)) << "\n";
  return os.str();
}

}  // namespace arthro
