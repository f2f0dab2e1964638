#pragma once

#include <string>
#include <vector>

namespace arthro {

// Planar four-bar reduction of the forearm frame. A and B are fixed hinges
// (A: radius, B: ulna, |AB| = l1), AD the radius link (l3), BC the ulna link
// (l4), CD the distal tie (l5). theta_d = angle DAB drives the linkage;
// theta_e = angle ABC follows through the triangle cascade
//   l2^2 = l1^2 + l3^2 - 2 l1 l3 cos(theta_d)        (diagonal BD)
//   theta_h = angle ABD, theta_c = angle DBC
//   theta_e = theta_h + theta_c  (C on the far side of BD, enforced at rest)
// All lengths m, angles rad.
struct ForearmLinkage {
  double l1 = 0.0;
  double l3 = 0.0;
  double l4 = 0.0;
  double l5 = 0.0;
  double theta_d_rest = 0.0;

  void validate() const;
};

enum class BundleDirection {
  ccw,  // taut under leftward (positive) deflection
  cw,   // taut under rightward (negative) deflection
};

// One membrane bundle: inserts at G on the radius (|AG| = ag, angular offset
// angle_dag from AD) and F on the ulna (|BF| = bf, offset angle_cbf from BC).
struct IomBundle {
  int id = 0;
  BundleDirection direction = BundleDirection::ccw;
  double ag = 0.0;         // m
  double bf = 0.0;         // m
  double rest_len = 0.0;   // tabulated rest length, m
  double angle_dag = 0.0;  // rad, theta_a = theta_d + angle_dag
  double angle_cbf = 0.0;  // rad, theta_b = theta_e - angle_cbf
  double stiffness = 0.0;  // N/m
  std::string name;        // optional label for experiment mapping

  void validate() const;
};

// theta_e as a function of theta_d. Raises NumericError naming the failing
// triangle when the quadrilateral cannot close.
double ulna_angle(const ForearmLinkage& link, double theta_d);

// Closed-form bundle length via the perpendicular-foot cascade; theta_a is
// the bundle's own radius-side angle (theta_d + angle_dag).
double bundle_length(const ForearmLinkage& link, const IomBundle& b, double theta_a);

// Length at the rest pose (model rest, not the tabulated value).
double bundle_rest_length(const ForearmLinkage& link, const IomBundle& b);

// Relative deviation of the model rest length from the tabulated rest_len;
// used as a calibration consistency warning threshold (not an error).
double rest_length_deviation(const ForearmLinkage& link, const IomBundle& b);

struct BundleStrains {
  double raw = 0.0;   // (length - rest_len) / rest_len, table-referenced
  double taut = 0.0;  // max(0, length - model_rest) / model_rest
};

// Strains at a given deflection (rad) of theta_d away from rest;
// positive deflection = leftward push at the distal radius.
BundleStrains bundle_strains(const ForearmLinkage& link, const IomBundle& b,
                             double deflection);

enum class ForceSide { left, right };

// Static balance of an applied lateral force (N) at lever (m) from A against
// the taut-bundle restoring torque about A:
//   force * lever = sum_i stiffness_i * max(0, dl_i) * moment_arm_i
// Returns the signed equilibrium deflection of theta_d (rad, left positive).
// disabled_ids simulates sectioned bundles. Raises NumericError when no
// equilibrium exists inside the closure domain.
double lateral_equilibrium(const ForearmLinkage& link, const std::vector<IomBundle>& bundles,
                           double force, ForceSide side, double lever,
                           const std::vector<int>& disabled_ids = {});

// Net restoring torque about A at a given deflection (for diagnostics/tests).
double restoring_torque(const ForearmLinkage& link, const std::vector<IomBundle>& bundles,
                        double deflection, const std::vector<int>& disabled_ids = {});

}  // namespace arthro
