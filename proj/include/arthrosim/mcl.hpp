#pragma once

namespace arthro {

enum class MclStrainMode {
  rest_length,  // normalize by the 90-degree rest length (strain 0 at 90 deg)
  eccentric,    // normalize by the eccentricity offset (source-formula literal)
};

// Medial collateral ligament strain model. The insertion rotates on a circle
// of radius r_ins about the joint centre O while the origin sits at a fixed
// eccentric offset (l_oa anterior, l_op posterior). With theta21 the flexion
// angle, the origin-to-insertion angles are
//   theta_a1 = theta_a0 + pi/2 - theta21   (anterior)
//   theta_p1 = theta_p0 - pi/2 + theta21   (posterior)
// so both bands are exactly at rest at theta21 = 90 deg.
// All lengths m, angles rad.
struct MclGeometry {
  double l_oa = 0.0;      // anterior origin eccentricity, m
  double l_op = 0.0;      // posterior origin eccentricity, m
  double r_ins = 0.0;     // insertion circle radius, m
  double theta_a0 = 0.0;  // anterior rest angle, rad
  double theta_p0 = 0.0;  // posterior rest angle, rad
  MclStrainMode mode = MclStrainMode::rest_length;

  void validate() const;
  double anterior_rest_length() const;   // length at theta21 = 90 deg
  double posterior_rest_length() const;
};

struct MclLengths {
  double l_a1 = 0.0;  // anterior band length, m
  double l_p1 = 0.0;  // posterior band length, m
};

struct MclStrains {
  double eps_a = 0.0;
  double eps_p = 0.0;
};

MclLengths mcl_lengths(const MclGeometry& g, double theta21);

// Raw (unclamped) strains per the configured normalization mode; negative
// values mean the band is slack.
MclStrains mcl_strains(const MclGeometry& g, double theta21);

}  // namespace arthro
