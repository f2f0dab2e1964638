#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arthrosim/actuation.hpp"
#include "arthrosim/humeroradial.hpp"
#include "arthrosim/iom.hpp"
#include "arthrosim/mcl.hpp"
#include "arthrosim/tfcc.hpp"

namespace arthro {

enum class AngleIoUnit { degrees, radians };

// Frame of the theta22 (forearm rotation) coordinate used by the config:
// "neutral" puts 0 at the neutral rotation posture (pronation positive),
// "full_supination" puts 0 at the full-supination stop.  Actuation wrap
// formulas always work on the full-supination axis t = theta22 - theta22_min,
// which is frame-independent.
enum class Theta22Reference { neutral, full_supination };

const char* to_string(AngleIoUnit u);
const char* to_string(Theta22Reference r);
const char* to_string(MclStrainMode m);
const char* to_string(BundleDirection d);

// File-facing configuration.  Every number is stored exactly as it appears in
// the file: lengths in mm, angles in `angle_io_unit`, forces in N,
// stiffnesses in N/m.  build_model() converts to SI (m, rad); keeping file
// units verbatim here makes save_config(load_config(p)) bit-identical.
struct JointLimitsConfig {
  double theta21_min = 0.0;
  double theta21_max = 140.25;
  double theta22_min = -60.0;
  double theta22_max = 51.5;
  Theta22Reference theta22_reference = Theta22Reference::neutral;
};

struct HumeroradialConfig {
  double l_a = 12.0;       // hinge-to-contact strut [mm]
  double r = 10.0;         // capitulum sphere radius [mm]
  double gamma = 70.0;     // strut/radius-axis angle
  double theta_s = 25.0;   // initial rim angle
  double k = 5.0e4;        // collateral-ligament stiffness [N/m]
  double l_e = 200.0;      // external-force moment arm [mm]
  // Rest length of the collateral ligament [mm]; absent -> derived from rest
  // triangle closure, present -> checked against it.
  std::optional<double> l_s0;
};

struct TfccConfig {
  double l_r = 15.0;             // contact-edge radius [mm]
  double l_or = 1.8;             // rotation-centre offset [mm]
  double theta_d_init = 15.0;    // initial dorsal band construction angle
  double theta_p_init = 120.0;   // initial palmar band construction angle
  double l_re = 15.0;            // wrap-point radius [mm]
  double theta_ecu = 30.0;       // rotation at which the dorsal band wraps
  double tension_threshold = 1.0;  // reporting threshold [mm]
  // Rest lengths and the wrap tie are always derived (zero elongation at
  // theta22 = 0 and branch continuity), never configured.
};

struct LinkageConfig {
  double l1 = 3.7;            // AB [mm]
  double l3 = 250.0;          // AD, radius link [mm]
  double l4 = 250.0;          // BC, ulna link [mm]
  double l5 = 5.0;            // CD tie [mm]
  double theta_d_rest = 90.83;  // rest angle BAD
};

struct BundleConfig {
  int id = 0;
  std::string name;  // optional anatomical label, free text
  BundleDirection direction = BundleDirection::ccw;
  double ag = 0.0;           // radius-side insertion distance [mm]
  double bf = 0.0;           // ulna-side insertion distance [mm]
  double rest_length = 0.0;  // tabulated rest length [mm]
  double angle_dag = 0.0;    // radius-side insertion angle offset
  double angle_cbf = 0.0;    // ulna-side insertion angle offset
  double stiffness = 2.0e4;  // [N/m]
};

struct MclConfig {
  double l_oa = 6.0;      // anterior origin eccentricity [mm]
  double l_op = 6.0;      // posterior origin eccentricity [mm]
  double r_ins = 25.0;    // insertion radius [mm]
  double theta_a0 = 60.0; // anterior origin angle
  double theta_p0 = 60.0; // posterior origin angle
  MclStrainMode strain_mode = MclStrainMode::rest_length;
};

struct FlexorConfig {
  double l_limb = 0.0;    // segment length beyond the capstan [mm]
  double l_offset = 0.0;  // anchor offset from the segment axis [mm]
  double f_t1 = 250.0;    // tendon tension [N]
  // Capstan radius [mm]; absent -> solved so the torque branches meet
  // continuously at the wrap-release angle.
  std::optional<double> r;
};

struct ElbowActuationConfig {
  FlexorConfig brachialis{35.0, 4.0, 250.0, std::nullopt};
  FlexorConfig biceps{40.0, 4.0, 250.0, std::nullopt};
  double f_text = 250.0;  // extensor tension [N]
  double r_ext = 45.0;    // extensor moment arm [mm]
};

struct PronationConfig {
  double r_sec = 9.536784741144414;  // sector radius [mm], calibrated
  double theta_m0 = 100.0;  // anchor angle on the full-supination axis
  double theta_tilt = 0.0;  // out-of-plane routing tilt
  double f_t2 = 734.0;      // tendon tension [N]
};

struct SupinationConfig {
  double r_sec = 9.536784741144414;   // sector radius [mm], calibrated
  double theta_n0 = 120.0;            // anchor angle, full-supination axis
  double r_t = 28.873024523160762;    // tuberosity arm [mm], calibrated
  double f_t3 = 122.0;                // sector tendon tension [N]
  double f_t4 = 250.0;                // biceps tension [N]
};

struct ModelConfig {
  AngleIoUnit angle_io_unit = AngleIoUnit::degrees;
  JointLimitsConfig joint_limits;
  HumeroradialConfig humeroradial;
  TfccConfig tfcc;
  LinkageConfig linkage;
  std::vector<BundleConfig> bundles;  // exactly 7, distinct ids 1-7
  MclConfig mcl;
  ElbowActuationConfig elbow_actuation;
  PronationConfig pronation;
  SupinationConfig supination;
};

// Joint range of motion in SI radians, in the config's declared theta22 frame.
struct JointLimits {
  double theta21_min = 0.0;
  double theta21_max = 0.0;
  double theta22_min = 0.0;
  double theta22_max = 0.0;
  Theta22Reference reference = Theta22Reference::neutral;

  double theta22_span() const { return theta22_max - theta22_min; }
  // Full-supination axis: 0 at the supination stop, increasing with pronation.
  double theta22_to_fs(double theta22) const { return theta22 - theta22_min; }
  void validate() const;
};

// Runtime model: all geometry in SI, validated and with derived quantities
// (ligament rest lengths, wrap ties, capstan radii) resolved.
struct Model {
  JointLimits limits;
  HumeroradialGeometry humeroradial;
  TfccGeometry tfcc;
  ForearmLinkage linkage;
  std::vector<IomBundle> bundles;  // sorted by id
  MclGeometry mcl;
  ElbowActuation elbow;
  PronationGeometry pronation;
  SupinationGeometry supination;
};

// Calibrated defaults (documented in README.md; not measured data).  Angle
// fields are expressed in the requested unit.
ModelConfig default_config(AngleIoUnit unit = AngleIoUnit::degrees);

// Parses JSON text.  Absent keys take defaults; unknown keys are errors
// (reported with their full path); the parsed config is validated.
ModelConfig parse_config(const std::string& text,
                         const std::string& source = "<inline>");
ModelConfig load_config(const std::string& path);

// Canonical pretty-printed JSON (alphabetical keys, trailing newline).
std::string config_to_json(const ModelConfig& c);
void save_config(const ModelConfig& c, const std::string& path);

// FNV-1a hash of the compact canonical JSON; stamped into CSV provenance.
std::string config_hash(const ModelConfig& c);

// Structural checks in file units; error messages name the offending key
// (e.g. "humeroradial.k must be positive").
void validate_config(const ModelConfig& c);

// Converts to SI, resolves derived quantities, and runs every geometry
// validator.  Throws ValidationError on any inconsistency.
Model build_model(const ModelConfig& c);

}  // namespace arthro
