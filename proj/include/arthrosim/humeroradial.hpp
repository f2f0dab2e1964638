#pragma once

#include <vector>

namespace arthro {

// Ball-and-socket dislocation model of the lateral elbow compartment.
// The capitulum is a sphere of radius r centred at O; the collateral spring
// (stiffness k, rest length l_s0) runs horizontally from O to the hinge A;
// the rigid strut TA (length l_a) keeps the contact point T on the sphere.
// theta_s1 is the angle of OT above the horizontal OA; all units SI.
struct HumeroradialGeometry {
  double l_a = 0.0;      // strut length |TA|, m
  double r = 0.0;        // sphere radius |OT|, m
  double gamma = 0.0;    // fixed angle between TA and the bone axis, rad
  double theta_s = 0.0;  // rest socket angle of OT above horizontal, rad
  double k = 0.0;        // spring stiffness, N/m
  double l_e = 0.0;      // external lever arm from the hinge, m
  double l_s0 = 0.0;     // spring rest length |OA|, m (closure-derived)

  // Builds the geometry with l_s0 from rest triangle closure:
  // l_s0 = r*cos(theta_s) + sqrt(l_a^2 - r^2 sin^2(theta_s)).
  static HumeroradialGeometry from_rest_pose(double l_a, double r, double gamma,
                                             double theta_s, double k, double l_e);

  void validate() const;  // positivity + rest closure + feasible rest angle
};

struct HrDeflection {
  double beta = 0.0;      // bone deflection angle, rad
  double theta_s1 = 0.0;  // current socket angle, rad; hits 0 at dislocation
};

// Triangle cascade for a given spring elongation delta_ls (m):
//   l_s1 = l_s0 + delta_ls
//   cos(alpha1) = (l_s1^2 + l_a^2 - r^2) / (2 l_s1 l_a)
//   beta = pi - gamma - alpha1
//   sin(theta_s1) = l_a sin(alpha1) / r
// Raises NumericError when the triangle cannot close or |sin(theta_s1)| > 1
// (contact lost beyond geometric dislocation).
HrDeflection deflection_from_elongation(const HumeroradialGeometry& g, double delta_ls);

// Static force balance at the contact point:
//   F_s cos(theta_s1) = k delta_ls          (spring axis)
//   F_e = k delta_ls l_s1 tan(theta_s1)/l_e (moment about the hinge)
double external_force(const HumeroradialGeometry& g, double delta_ls);

// Socket support force F_a = F_s sin(theta_s1) + F_e.
double support_force(const HumeroradialGeometry& g, double delta_ls);

// Right edge of the feasible elongation domain: theta_s1 reaches 0 exactly
// when O, T, A become collinear, i.e. l_s1 = l_a + r.
double elongation_limit(const HumeroradialGeometry& g);

struct DislocationThreshold {
  double delta_lp = 0.0;  // elongation at peak external force, m
  double f_peak = 0.0;    // peak external force, N
};

// Maximizes F_e over [0, elongation_limit]; the peak is the dislocation
// threshold (beyond it the joint escapes under decreasing force).
DislocationThreshold dislocation_threshold(const HumeroradialGeometry& g);

struct DislocationProfile {
  std::vector<double> delta_ls;  // m, uniform over [0, elongation_limit]
  std::vector<double> f_e;       // N
  std::vector<double> theta_s1;  // rad, strictly decreasing to 0
  DislocationThreshold threshold;
};

DislocationProfile dislocation_profile(const HumeroradialGeometry& g, int n_samples);

}  // namespace arthro
