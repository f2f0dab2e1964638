#include "arthrosim/actuation.hpp"

#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"
#include "arthrosim/numerics.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

double FlexorGeometry::gamma() const {
  const double hyp = std::sqrt(l_limb * l_limb + l_offset * l_offset);
  return std::asin(r / hyp) - std::atan2(l_offset, l_limb);
}

void FlexorGeometry::validate(double torque_tol) const {
  if (r <= 0.0 || l_limb <= 0.0 || l_offset <= 0.0) {
    throw ValidationError("flexor dimensions must be positive");
  }
  if (f_t1 <= 0.0) {
    throw ValidationError("flexor tension must be positive");
  }
  const double hyp = std::sqrt(l_limb * l_limb + l_offset * l_offset);
  if (r >= hyp) {
    throw ValidationError("flexor capstan radius exceeds anchor distance");
  }
  const double g = gamma();
  if (!(g > 0.0) || !(g < kPi / 2.0)) {
    throw ValidationError("flexor wrap-release angle outside (0, pi/2)");
  }
  const double jump = f_t1 * (r - (r + l_limb) * std::sin(g));
  if (std::fabs(jump) > torque_tol) {
    throw ValidationError(
        "flexor torque branches disagree at the wrap-release angle by " +
        std::to_string(std::fabs(jump)) + " N*m");
  }
}

double flexion_torque(const FlexorGeometry& g, double theta21) {
  if (theta21 < 0.0 || theta21 > kPi) {
    throw ValidationError("flexion angle outside [0, pi]");
  }
  // At theta21 == gamma() both branches agree (validate() enforces it); the
  // wrapped branch is used there.
  if (theta21 <= g.gamma()) {
    return g.f_t1 * g.r;
  }
  return g.f_t1 * (g.r + g.l_limb) * std::sin(theta21);
}

void ElbowActuation::validate() const {
  brachialis.validate();
  biceps.validate();
  if (f_text <= 0.0 || r_ext <= 0.0) {
    throw ValidationError("extensor tension and moment arm must be positive");
  }
}

double combined_flexion_torque(const ElbowActuation& a, double theta21) {
  return flexion_torque(a.brachialis, theta21) +
         flexion_torque(a.biceps, theta21);
}

double extension_torque(const ElbowActuation& a) { return a.f_text * a.r_ext; }

void PronationGeometry::validate() const {
  if (r_sec <= 0.0 || f_t2 <= 0.0) {
    throw ValidationError("pronation sector radius and tension must be positive");
  }
  if (std::fabs(theta_tilt) >= kPi / 2.0) {
    throw ValidationError("pronation routing tilt outside (-pi/2, pi/2)");
  }
}

double pronation_torque(const PronationGeometry& g, double theta22fs) {
  return g.f_t2 * std::cos(g.theta_tilt) * g.r_sec *
         (1.0 + std::cos(g.theta_m0 - theta22fs));
}

void SupinationGeometry::validate() const {
  if (r_sec <= 0.0 || r_t <= 0.0 || f_t3 <= 0.0 || f_t4 <= 0.0) {
    throw ValidationError("supination radii and tensions must be positive");
  }
}

double supination_torque_s1(const SupinationGeometry& g, double theta22fs) {
  return g.f_t3 * g.r_sec * (1.0 + std::cos(g.theta_n0 + theta22fs));
}

double supination_torque_s2(const SupinationGeometry& g, double theta21) {
  return g.f_t4 * g.r_t * std::sin(theta21);
}

double supination_torque(const SupinationGeometry& g, double theta22fs,
                         double theta21) {
  return supination_torque_s1(g, theta22fs) + supination_torque_s2(g, theta21);
}

double solve_flexor_radius(double l_limb, double l_offset) {
  if (l_limb <= 0.0 || l_offset <= 0.0) {
    throw ValidationError("flexor segment dimensions must be positive");
  }
  const double hyp = std::sqrt(l_limb * l_limb + l_offset * l_offset);
  auto residual = [&](double r) {
    FlexorGeometry g;
    g.r = r;
    g.l_limb = l_limb;
    g.l_offset = l_offset;
    g.f_t1 = 1.0;
    return r - (r + l_limb) * std::sin(g.gamma());
  };
  // residual(0+) > 0 (gamma < 0 there, so the straight-line arm is negative)
  // and residual(hyp-) < 0 (arm approaches r + l_limb > r), bracketing the
  // root.
  return bisect_root(residual, 1e-9, hyp * (1.0 - 1e-12), 1e-15);
}

}  // namespace arthro
