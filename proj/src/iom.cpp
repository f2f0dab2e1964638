#include "arthrosim/iom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"
#include "arthrosim/numerics.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

void require_positive(double v, const std::string& name) {
  if (!(v > 0.0)) throw ValidationError(name + " must be > 0");
}

double safe_acos(double c, const char* triangle) {
  if (c > 1.0 || c < -1.0) {
    if (c > 1.0 + 1e-12 || c < -1.0 - 1e-12) {
      throw NumericError(std::string("linkage triangle ") + triangle + " cannot close");
    }
    c = std::clamp(c, -1.0, 1.0);
  }
  return std::acos(c);
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Insertion coordinates in the linkage frame (A at origin, B at (l1, 0)).
// Used for moment arms; lengths go through the closed-form cascade instead.
Point radius_insertion(const IomBundle& b, double theta_a) {
  return {b.ag * std::cos(theta_a), b.ag * std::sin(theta_a)};
}

Point ulna_insertion(const ForearmLinkage& link, const IomBundle& b, double theta_b) {
  return {link.l1 - b.bf * std::cos(theta_b), b.bf * std::sin(theta_b)};
}

void check_insertion_angle(double theta, const char* which) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw NumericError(std::string("bundle cascade out of domain (") + which + ")");
  }
}

}  // namespace

void ForearmLinkage::validate() const {
  require_positive(l1, "linkage.l1");
  require_positive(l3, "linkage.l3");
  require_positive(l4, "linkage.l4");
  require_positive(l5, "linkage.l5");
  if (!(theta_d_rest > 0.0 && theta_d_rest < kPi)) {
    throw ValidationError("linkage.theta_d_rest must lie in (0, pi)");
  }
  (void)ulna_angle(*this, theta_d_rest);  // rest pose must close
}

void IomBundle::validate() const {
  const std::string prefix = "bundles[" + std::to_string(id) + "].";
  require_positive(ag, prefix + "ag");
  require_positive(bf, prefix + "bf");
  require_positive(rest_len, prefix + "rest_len");
  require_positive(stiffness, prefix + "stiffness");
}

double ulna_angle(const ForearmLinkage& link, double theta_d) {
  const double l1 = link.l1, l3 = link.l3, l4 = link.l4, l5 = link.l5;
  const double l2 = std::sqrt(l1 * l1 + l3 * l3 - 2.0 * l1 * l3 * std::cos(theta_d));
  const double theta_h = safe_acos((l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2), "ABD");
  const double theta_c = safe_acos((l2 * l2 + l4 * l4 - l5 * l5) / (2.0 * l2 * l4), "BCD");
  return theta_h + theta_c;
}

double bundle_length(const ForearmLinkage& link, const IomBundle& b, double theta_a) {
  const double theta_d = theta_a - b.angle_dag;
  const double theta_b = ulna_angle(link, theta_d) - b.angle_cbf;
  check_insertion_angle(theta_a, "theta_a");
  check_insertion_angle(theta_b, "theta_b");
  // Triangle A-F'-B gives the diagonal l6 = |AF'| and its angle against AB,
  // then the perpendicular foot E' of F' on ray AG' splits the length.
  const double l7 = b.bf;
  const double l6 =
      std::sqrt(link.l1 * link.l1 + l7 * l7 - 2.0 * link.l1 * l7 * std::cos(theta_b));
  const double theta_f =
      safe_acos((link.l1 * link.l1 + l6 * l6 - l7 * l7) / (2.0 * link.l1 * l6), "AF'B");
  const double theta_g = theta_a - theta_f;
  const double l9 = l6 * std::sin(theta_g);   // F'E'
  const double l10 = l6 * std::cos(theta_g);  // AE'
  const double l8 = b.ag - l10;               // E'G'
  return std::sqrt(l9 * l9 + l8 * l8);
}

double bundle_rest_length(const ForearmLinkage& link, const IomBundle& b) {
  return bundle_length(link, b, link.theta_d_rest + b.angle_dag);
}

double rest_length_deviation(const ForearmLinkage& link, const IomBundle& b) {
  return (bundle_rest_length(link, b) - b.rest_len) / b.rest_len;
}

BundleStrains bundle_strains(const ForearmLinkage& link, const IomBundle& b,
                             double deflection) {
  const double len = bundle_length(link, b, link.theta_d_rest + deflection + b.angle_dag);
  const double model_rest = bundle_rest_length(link, b);
  BundleStrains s;
  s.raw = (len - b.rest_len) / b.rest_len;
  s.taut = std::max(0.0, len - model_rest) / model_rest;
  return s;
}

double restoring_torque(const ForearmLinkage& link, const std::vector<IomBundle>& bundles,
                        double deflection, const std::vector<int>& disabled_ids) {
  const double theta_d = link.theta_d_rest + deflection;
  const double theta_e = ulna_angle(link, theta_d);
  double torque = 0.0;
  for (const auto& b : bundles) {
    if (std::find(disabled_ids.begin(), disabled_ids.end(), b.id) != disabled_ids.end()) {
      continue;
    }
    const double theta_a = theta_d + b.angle_dag;
    const double len = bundle_length(link, b, theta_a);
    const double dl = len - bundle_rest_length(link, b);
    if (dl <= 0.0) continue;  // slack bundles cannot pull
    const double theta_b = theta_e - b.angle_cbf;
    const Point g = radius_insertion(b, theta_a);
    const Point f = ulna_insertion(link, b, theta_b);
    // Perpendicular distance from A (origin) to the bundle's line of action.
    const double cross = f.x * g.y - f.y * g.x;
    const double arm = std::abs(cross) / len;
    torque += b.stiffness * dl * arm;
  }
  return torque;
}

double lateral_equilibrium(const ForearmLinkage& link, const std::vector<IomBundle>& bundles,
                           double force, ForceSide side, double lever,
                           const std::vector<int>& disabled_ids) {
  if (force < 0.0) throw ValidationError("lateral force must be >= 0");
  require_positive(lever, "lever");
  if (force == 0.0) return 0.0;
  const double sign = (side == ForceSide::left) ? 1.0 : -1.0;
  const double applied = force * lever;

  const auto net = [&](double magnitude) {
    return applied - restoring_torque(link, bundles, sign * magnitude, disabled_ids);
  };

  // Expand a deterministic ladder until the restoring torque overtakes the
  // applied torque; closure failure bounds the search domain.
  double prev = 0.0;
  double edge = deg2rad(89.0);
  bool bracketed = false;
  double hi = 0.0;
  for (double mag = deg2rad(0.5); mag <= edge; mag *= 2.0) {
    double v = 0.0;
    try {
      v = net(mag);
    } catch (const NumericError&) {
      edge = mag;
      break;
    }
    if (v <= 0.0) {
      bracketed = true;
      hi = mag;
      break;
    }
    prev = mag;
  }
  if (!bracketed) {
    // Walk up to the closure edge itself before giving up.
    double lo_f = prev, hi_f = edge;
    for (int it = 0; it < 80; ++it) {
      const double m = 0.5 * (lo_f + hi_f);
      try {
        const double v = net(m);
        lo_f = m;
        if (v <= 0.0) {
          bracketed = true;
          hi = m;
          break;
        }
        prev = m;
      } catch (const NumericError&) {
        hi_f = m;
      }
    }
    if (!bracketed) {
      throw NumericError("no lateral equilibrium inside the linkage closure domain (force " +
                         std::to_string(force) + " N)");
    }
  }
  const double m = bisect_root(net, prev, hi, 1e-14);
  return sign * m;
}

}  // namespace arthro
