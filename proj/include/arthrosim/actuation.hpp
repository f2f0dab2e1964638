#pragma once

#include <cstddef>

namespace arthro {

// Flexor tendon routed around a capstan of radius r at the joint, then along a
// straight limb segment of length l_limb; l_offset is the small perpendicular
// offset of the anchor from the segment axis.  Below the wrap-release angle
// gamma() the tendon stays on the capstan and the moment arm is r; above it
// the tendon runs straight from the anchor and the arm grows as
// (r + l_limb) * sin(theta21).
struct FlexorGeometry {
  double r = 0.0;         // capstan radius [m]
  double l_limb = 0.0;    // segment length beyond the capstan [m]
  double l_offset = 0.0;  // anchor offset from the segment axis [m]
  double f_t1 = 0.0;      // tendon tension [N]

  // Wrap-release angle where the tendon leaves the capstan.
  double gamma() const;
  // Throws ValidationError unless dimensions are positive, gamma lands in
  // (0, pi/2), and the two torque branches agree at gamma to within
  // `torque_tol` [N*m].
  void validate(double torque_tol = 1e-9) const;
};

// Torque of a single flexor about the elbow at flexion angle theta21 [rad].
double flexion_torque(const FlexorGeometry& g, double theta21);

struct ElbowActuation {
  FlexorGeometry brachialis;
  FlexorGeometry biceps;
  double f_text = 0.0;  // extensor tension [N]
  double r_ext = 0.0;   // extensor moment arm [m]

  void validate() const;
};

// Sum of both flexors' torques [N*m].
double combined_flexion_torque(const ElbowActuation& a, double theta21);

// Extension torque is posture-independent: tension times a fixed arm.
double extension_torque(const ElbowActuation& a);

// Pronator tendon wound around the radial head sector.  theta22fs is the
// forearm rotation measured from full supination; the wrap contribution
// peaks where theta22fs equals theta_m0.
struct PronationGeometry {
  double r_sec = 0.0;      // sector radius [m]
  double theta_m0 = 0.0;   // anchor angle, full-supination frame [rad]
  double theta_tilt = 0.0; // out-of-plane routing tilt [rad]
  double f_t2 = 0.0;       // tendon tension [N]

  void validate() const;
};

double pronation_torque(const PronationGeometry& g, double theta22fs);

// Supination has two contributors: a sector-wound tendon (peaks at full
// supination) and a biceps-like wrap whose arm scales with sin(theta21).
struct SupinationGeometry {
  double r_sec = 0.0;     // sector radius [m]
  double theta_n0 = 0.0;  // anchor angle, full-supination frame [rad]
  double r_t = 0.0;       // biceps tuberosity arm [m]
  double f_t3 = 0.0;      // sector tendon tension [N]
  double f_t4 = 0.0;      // biceps tension [N]

  void validate() const;
};

double supination_torque_s1(const SupinationGeometry& g, double theta22fs);
double supination_torque_s2(const SupinationGeometry& g, double theta21);
double supination_torque(const SupinationGeometry& g, double theta22fs,
                         double theta21);

// Solves the capstan radius r so the two flexion-torque branches meet
// continuously at gamma for the given segment dimensions:
//   r = (r + l_limb) * sin(gamma(r)).
double solve_flexor_radius(double l_limb, double l_offset);

}  // namespace arthro
