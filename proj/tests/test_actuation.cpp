#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "arthrosim/actuation.hpp"
#include "arthrosim/config.hpp"
#include "arthrosim/errors.hpp"
#include "arthrosim/units.hpp"
#include "oracles.hpp"

using namespace arthro;

namespace {

Model model() { return build_model(default_config()); }

constexpr double kRomDeg = 140.25;

}  // namespace

TEST_CASE("solved capstan radius makes the torque stages meet at wrap release") {
  const Model m = model();
  for (const FlexorGeometry* f : {&m.elbow.brachialis, &m.elbow.biceps}) {
    const double g = f->gamma();
    CHECK(g > 0.0);
    CHECK(g < kPi / 2.0);
    const double before = flexion_torque(*f, g - 1e-9);
    const double after = flexion_torque(*f, g + 1e-9);
    CHECK(std::fabs(after - before) < 1e-7);  // both stages ~F*R at the seam
    // capstan branch is constant, swing branch follows sin
    CHECK(flexion_torque(*f, g / 2.0) == flexion_torque(*f, g / 3.0));
    CHECK(flexion_torque(*f, g + 0.2) ==
          doctest::Approx(f->f_t1 * (f->r + f->l_limb) * std::sin(g + 0.2))
              .epsilon(1e-12));
  }
}

TEST_CASE("combined flexion peaks above 24 N m strictly inside the range") {
  const Model m = model();
  const auto torque = [&](double t) { return combined_flexion_torque(m.elbow, t); };
  const oracle::GridMax peak = oracle::grid_argmax(torque, 0.0, deg2rad(kRomDeg), 100001);
  CHECK(peak.value >= 24.0);
  CHECK(peak.x > 0.0);
  CHECK(peak.x < deg2rad(kRomDeg));
  CHECK(torque(0.0) < peak.value);
  CHECK(torque(deg2rad(kRomDeg)) < peak.value);
  CHECK(peak.value == doctest::Approx(25.7912).epsilon(1e-4));
  CHECK(rad2deg(peak.x) == doctest::Approx(90.0).epsilon(1e-3));
}

TEST_CASE("extension torque is the posture-independent product") {
  const Model m = model();
  const double a = extension_torque(m.elbow);
  CHECK(a == m.elbow.f_text * m.elbow.r_ext);
  CHECK(a == doctest::Approx(11.25).epsilon(1e-12));
}

TEST_CASE("torque scales linearly with tendon tension") {
  const Model m = model();
  FlexorGeometry f = m.elbow.brachialis;
  const double base = flexion_torque(f, deg2rad(100.0));
  f.f_t1 *= 3.0;
  CHECK(flexion_torque(f, deg2rad(100.0)) == doctest::Approx(3.0 * base).epsilon(1e-12));

  PronationGeometry p = m.pronation;
  const double pb = pronation_torque(p, deg2rad(50.0));
  p.f_t2 *= 2.0;
  CHECK(pronation_torque(p, deg2rad(50.0)) == doctest::Approx(2.0 * pb).epsilon(1e-12));
}

TEST_CASE("pronation torque peaks exactly at the anchor angle") {
  const Model m = model();
  const double t0 = m.pronation.theta_m0;
  const double peak = pronation_torque(m.pronation, t0);
  CHECK(peak == doctest::Approx(2.0 * m.pronation.f_t2 * m.pronation.r_sec *
                                std::cos(m.pronation.theta_tilt))
                    .epsilon(1e-12));
  CHECK(peak == doctest::Approx(14.0).epsilon(0.01));
  for (double off : {-0.3, -0.1, 0.1, 0.3}) {
    CHECK(pronation_torque(m.pronation, t0 + off) < peak);
  }
  // symmetric about the anchor
  CHECK(pronation_torque(m.pronation, t0 - 0.2) ==
        doctest::Approx(pronation_torque(m.pronation, t0 + 0.2)).epsilon(1e-12));
}

TEST_CASE("supinator-only torque vanishes where the wrap runs out") {
  const Model m = model();
  // s1 = f_t3 r_sec (1 + cos(theta_n0 + t)): zero when the cos hits -1
  const double t_zero = kPi - m.supination.theta_n0;
  CHECK(supination_torque_s1(m.supination, t_zero) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(supination_torque_s1(m.supination, 0.0) ==
        doctest::Approx(m.supination.f_t3 * m.supination.r_sec * 0.5).epsilon(1e-9));
}

TEST_CASE("biceps supination term is the odd sine of the elbow angle") {
  const Model m = model();
  const double fs = deg2rad(40.0);
  CHECK(supination_torque_s2(m.supination, 0.0) == 0.0);
  CHECK(supination_torque_s2(m.supination, deg2rad(90.0)) ==
        doctest::Approx(m.supination.f_t4 * m.supination.r_t).epsilon(1e-12));
  const double total = supination_torque(m.supination, fs, deg2rad(90.0));
  CHECK(total == doctest::Approx(supination_torque_s1(m.supination, fs) +
                                 supination_torque_s2(m.supination, deg2rad(90.0)))
                     .epsilon(1e-15));
}

TEST_CASE("flexion torque rejects angles outside [0, pi]") {
  const Model m = model();
  CHECK_THROWS_AS(flexion_torque(m.elbow.brachialis, -0.01), ValidationError);
  CHECK_THROWS_AS(flexion_torque(m.elbow.brachialis, kPi + 0.01), ValidationError);
}

TEST_CASE("wrap-release angle follows the anchor geometry") {
  const Model m = model();
  const FlexorGeometry& f = m.elbow.brachialis;
  const double hyp = std::sqrt(f.l_limb * f.l_limb + f.l_offset * f.l_offset);
  CHECK(f.gamma() == doctest::Approx(std::asin(f.r / hyp) -
                                     std::atan2(f.l_offset, f.l_limb))
                         .epsilon(1e-12));
  // the solved radius satisfies the branch-matching identity R = (R+L) sin(gamma)
  CHECK(f.r == doctest::Approx((f.r + f.l_limb) * std::sin(f.gamma())).epsilon(1e-9));
}
