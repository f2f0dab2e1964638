#include "arthrosim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "arthrosim/errors.hpp"
#include "arthrosim/sweep.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

using nlohmann::json;

const char* to_string(AngleIoUnit u) {
  return u == AngleIoUnit::degrees ? "degrees" : "radians";
}

const char* to_string(Theta22Reference r) {
  return r == Theta22Reference::neutral ? "neutral" : "full_supination";
}

const char* to_string(MclStrainMode m) {
  return m == MclStrainMode::rest_length ? "rest_length" : "eccentric";
}

const char* to_string(BundleDirection d) {
  return d == BundleDirection::ccw ? "ccw" : "cw";
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ValidationError(msg); }

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path + " must be a number");
  return v.get<double>();
}

int as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path + " must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path + " must be a string");
  return v.get<std::string>();
}

const json& as_object(const json& v, const std::string& path) {
  if (!v.is_object()) bad(path + " must be an object");
  return v;
}

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) bad("unknown key: " + prefix + it.key());
  }
}

void get_number(const json& obj, const std::string& prefix, const char* key,
                double& out) {
  if (obj.contains(key)) out = as_number(obj.at(key), prefix + key);
}

void get_optional(const json& obj, const std::string& prefix, const char* key,
                  std::optional<double>& out) {
  if (obj.contains(key)) out = as_number(obj.at(key), prefix + key);
}

AngleIoUnit parse_angle_unit(const std::string& s, const std::string& path) {
  if (s == "degrees") return AngleIoUnit::degrees;
  if (s == "radians") return AngleIoUnit::radians;
  bad(path + " must be \"degrees\" or \"radians\"");
}

Theta22Reference parse_reference(const std::string& s, const std::string& path) {
  if (s == "neutral") return Theta22Reference::neutral;
  if (s == "full_supination") return Theta22Reference::full_supination;
  bad(path + " must be \"neutral\" or \"full_supination\"");
}

MclStrainMode parse_strain_mode(const std::string& s, const std::string& path) {
  if (s == "rest_length") return MclStrainMode::rest_length;
  if (s == "eccentric") return MclStrainMode::eccentric;
  bad(path + " must be \"rest_length\" or \"eccentric\"");
}

BundleDirection parse_direction(const std::string& s, const std::string& path) {
  if (s == "ccw") return BundleDirection::ccw;
  if (s == "cw") return BundleDirection::cw;
  bad(path + " must be \"ccw\" or \"cw\"");
}

void parse_joint_limits(const json& j, JointLimitsConfig& c) {
  const std::string p = "joint_limits.";
  check_keys(j, p, {"theta21_min", "theta21_max", "theta22_min", "theta22_max",
                    "theta22_reference"});
  get_number(j, p, "theta21_min", c.theta21_min);
  get_number(j, p, "theta21_max", c.theta21_max);
  get_number(j, p, "theta22_min", c.theta22_min);
  get_number(j, p, "theta22_max", c.theta22_max);
  if (j.contains("theta22_reference")) {
    c.theta22_reference = parse_reference(
        as_string(j.at("theta22_reference"), p + "theta22_reference"),
        p + "theta22_reference");
  }
}

void parse_humeroradial(const json& j, HumeroradialConfig& c) {
  const std::string p = "humeroradial.";
  check_keys(j, p, {"l_a", "r", "gamma", "theta_s", "k", "l_e", "l_s0"});
  get_number(j, p, "l_a", c.l_a);
  get_number(j, p, "r", c.r);
  get_number(j, p, "gamma", c.gamma);
  get_number(j, p, "theta_s", c.theta_s);
  get_number(j, p, "k", c.k);
  get_number(j, p, "l_e", c.l_e);
  get_optional(j, p, "l_s0", c.l_s0);
}

void parse_tfcc(const json& j, TfccConfig& c) {
  const std::string p = "tfcc.";
  check_keys(j, p, {"l_r", "l_or", "theta_d_init", "theta_p_init", "l_re",
                    "theta_ecu", "tension_threshold"});
  get_number(j, p, "l_r", c.l_r);
  get_number(j, p, "l_or", c.l_or);
  get_number(j, p, "theta_d_init", c.theta_d_init);
  get_number(j, p, "theta_p_init", c.theta_p_init);
  get_number(j, p, "l_re", c.l_re);
  get_number(j, p, "theta_ecu", c.theta_ecu);
  get_number(j, p, "tension_threshold", c.tension_threshold);
}

void parse_linkage(const json& j, LinkageConfig& c) {
  const std::string p = "linkage.";
  check_keys(j, p, {"l1", "l3", "l4", "l5", "theta_d_rest"});
  get_number(j, p, "l1", c.l1);
  get_number(j, p, "l3", c.l3);
  get_number(j, p, "l4", c.l4);
  get_number(j, p, "l5", c.l5);
  get_number(j, p, "theta_d_rest", c.theta_d_rest);
}

void parse_bundles(const json& arr, std::vector<BundleConfig>& out) {
  if (!arr.is_array()) bad("bundles must be an array");
  const std::vector<BundleConfig> defaults = out;
  std::vector<BundleConfig> parsed;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "bundles[" + std::to_string(i) + "].";
    const json& j = as_object(arr.at(i), "bundles[" + std::to_string(i) + "]");
    check_keys(j, p, {"id", "name", "direction", "ag", "bf", "rest_length",
                      "angle_dag", "angle_cbf", "stiffness"});
    if (!j.contains("id")) bad(p + "id is required");
    const int id = as_integer(j.at("id"), p + "id");
    BundleConfig b;
    const auto it = std::find_if(defaults.begin(), defaults.end(),
                                 [&](const BundleConfig& d) { return d.id == id; });
    if (it != defaults.end()) b = *it;
    b.id = id;
    if (j.contains("name")) b.name = as_string(j.at("name"), p + "name");
    if (j.contains("direction")) {
      b.direction = parse_direction(as_string(j.at("direction"), p + "direction"),
                                    p + "direction");
    }
    get_number(j, p, "ag", b.ag);
    get_number(j, p, "bf", b.bf);
    get_number(j, p, "rest_length", b.rest_length);
    get_number(j, p, "angle_dag", b.angle_dag);
    get_number(j, p, "angle_cbf", b.angle_cbf);
    get_number(j, p, "stiffness", b.stiffness);
    parsed.push_back(b);
  }
  out = parsed;
}

void parse_mcl(const json& j, MclConfig& c) {
  const std::string p = "mcl.";
  check_keys(j, p, {"l_oa", "l_op", "r_ins", "theta_a0", "theta_p0",
                    "strain_mode"});
  get_number(j, p, "l_oa", c.l_oa);
  get_number(j, p, "l_op", c.l_op);
  get_number(j, p, "r_ins", c.r_ins);
  get_number(j, p, "theta_a0", c.theta_a0);
  get_number(j, p, "theta_p0", c.theta_p0);
  if (j.contains("strain_mode")) {
    c.strain_mode = parse_strain_mode(
        as_string(j.at("strain_mode"), p + "strain_mode"), p + "strain_mode");
  }
}

void parse_flexor(const json& j, const std::string& p, FlexorConfig& c) {
  check_keys(j, p, {"l_limb", "l_offset", "f_t1", "r"});
  get_number(j, p, "l_limb", c.l_limb);
  get_number(j, p, "l_offset", c.l_offset);
  get_number(j, p, "f_t1", c.f_t1);
  get_optional(j, p, "r", c.r);
}

void parse_elbow(const json& j, ElbowActuationConfig& c) {
  const std::string p = "elbow_actuation.";
  check_keys(j, p, {"brachialis", "biceps", "f_text", "r_ext"});
  if (j.contains("brachialis")) {
    parse_flexor(as_object(j.at("brachialis"), p + "brachialis"),
                 p + "brachialis.", c.brachialis);
  }
  if (j.contains("biceps")) {
    parse_flexor(as_object(j.at("biceps"), p + "biceps"), p + "biceps.",
                 c.biceps);
  }
  get_number(j, p, "f_text", c.f_text);
  get_number(j, p, "r_ext", c.r_ext);
}

void parse_pronation(const json& j, PronationConfig& c) {
  const std::string p = "pronation.";
  check_keys(j, p, {"r_sec", "theta_m0", "theta_tilt", "f_t2"});
  get_number(j, p, "r_sec", c.r_sec);
  get_number(j, p, "theta_m0", c.theta_m0);
  get_number(j, p, "theta_tilt", c.theta_tilt);
  get_number(j, p, "f_t2", c.f_t2);
}

void parse_supination(const json& j, SupinationConfig& c) {
  const std::string p = "supination.";
  check_keys(j, p, {"r_sec", "theta_n0", "r_t", "f_t3", "f_t4"});
  get_number(j, p, "r_sec", c.r_sec);
  get_number(j, p, "theta_n0", c.theta_n0);
  get_number(j, p, "r_t", c.r_t);
  get_number(j, p, "f_t3", c.f_t3);
  get_number(j, p, "f_t4", c.f_t4);
}

json bundle_to_json(const BundleConfig& b) {
  json j;
  j["id"] = b.id;
  if (!b.name.empty()) j["name"] = b.name;
  j["direction"] = to_string(b.direction);
  j["ag"] = b.ag;
  j["bf"] = b.bf;
  j["rest_length"] = b.rest_length;
  j["angle_dag"] = b.angle_dag;
  j["angle_cbf"] = b.angle_cbf;
  j["stiffness"] = b.stiffness;
  return j;
}

json flexor_to_json(const FlexorConfig& f) {
  json j;
  j["l_limb"] = f.l_limb;
  j["l_offset"] = f.l_offset;
  j["f_t1"] = f.f_t1;
  if (f.r) j["r"] = *f.r;
  return j;
}

json config_json(const ModelConfig& c) {
  json j;
  j["angle_io_unit"] = to_string(c.angle_io_unit);
  j["joint_limits"] = {{"theta21_min", c.joint_limits.theta21_min},
                       {"theta21_max", c.joint_limits.theta21_max},
                       {"theta22_min", c.joint_limits.theta22_min},
                       {"theta22_max", c.joint_limits.theta22_max},
                       {"theta22_reference",
                        to_string(c.joint_limits.theta22_reference)}};
  j["humeroradial"] = {{"l_a", c.humeroradial.l_a},
                       {"r", c.humeroradial.r},
                       {"gamma", c.humeroradial.gamma},
                       {"theta_s", c.humeroradial.theta_s},
                       {"k", c.humeroradial.k},
                       {"l_e", c.humeroradial.l_e}};
  if (c.humeroradial.l_s0) j["humeroradial"]["l_s0"] = *c.humeroradial.l_s0;
  j["tfcc"] = {{"l_r", c.tfcc.l_r},
               {"l_or", c.tfcc.l_or},
               {"theta_d_init", c.tfcc.theta_d_init},
               {"theta_p_init", c.tfcc.theta_p_init},
               {"l_re", c.tfcc.l_re},
               {"theta_ecu", c.tfcc.theta_ecu},
               {"tension_threshold", c.tfcc.tension_threshold}};
  j["linkage"] = {{"l1", c.linkage.l1},
                  {"l3", c.linkage.l3},
                  {"l4", c.linkage.l4},
                  {"l5", c.linkage.l5},
                  {"theta_d_rest", c.linkage.theta_d_rest}};
  json bundles = json::array();
  for (const auto& b : c.bundles) bundles.push_back(bundle_to_json(b));
  j["bundles"] = bundles;
  j["mcl"] = {{"l_oa", c.mcl.l_oa},
              {"l_op", c.mcl.l_op},
              {"r_ins", c.mcl.r_ins},
              {"theta_a0", c.mcl.theta_a0},
              {"theta_p0", c.mcl.theta_p0},
              {"strain_mode", to_string(c.mcl.strain_mode)}};
  j["elbow_actuation"] = {{"brachialis", flexor_to_json(c.elbow_actuation.brachialis)},
                          {"biceps", flexor_to_json(c.elbow_actuation.biceps)},
                          {"f_text", c.elbow_actuation.f_text},
                          {"r_ext", c.elbow_actuation.r_ext}};
  j["pronation"] = {{"r_sec", c.pronation.r_sec},
                    {"theta_m0", c.pronation.theta_m0},
                    {"theta_tilt", c.pronation.theta_tilt},
                    {"f_t2", c.pronation.f_t2}};
  j["supination"] = {{"r_sec", c.supination.r_sec},
                     {"theta_n0", c.supination.theta_n0},
                     {"r_t", c.supination.r_t},
                     {"f_t3", c.supination.f_t3},
                     {"f_t4", c.supination.f_t4}};
  return j;
}

// Bounds for angle-range checks, expressed in the config's own angle unit.
struct AngleBounds {
  double half_turn;
  double quarter_turn;
  const char* unit;
};

AngleBounds bounds_for(AngleIoUnit u) {
  if (u == AngleIoUnit::degrees) return {180.0, 90.0, "degrees"};
  return {kPi, kPi / 2.0, "radians"};
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) bad(std::string(key) + " must be positive");
}

void require_open_range(double v, double lo, double hi, const char* key,
                        const char* unit) {
  if (!(v > lo) || !(v < hi)) {
    std::ostringstream os;
    os << key << " must lie strictly between " << lo << " and " << hi << " "
       << unit;
    bad(os.str());
  }
}

}  // namespace

ModelConfig default_config(AngleIoUnit unit) {
  ModelConfig c;
  // Table of membrane bundle insertions (mm / degrees), in source order.
  // ccw bundles resist leftward (positive) deflection, cw rightward.
  auto row = [](int id, BundleDirection dir, double ag, double bf, double rest,
                double dag, double cbf) {
    BundleConfig b;
    b.id = id;
    b.direction = dir;
    b.ag = ag;
    b.bf = bf;
    b.rest_length = rest;
    b.angle_dag = dag;
    b.angle_cbf = cbf;
    b.stiffness = 2.0e4;
    return b;
  };
  c.bundles = {
      row(7, BundleDirection::ccw, 58.43, 47.58, 10.91, -1.02, 1.19),
      row(3, BundleDirection::ccw, 18.51, 14.29, 4.53, -3.07, 7.12),
      row(1, BundleDirection::ccw, 11.56, 5.83, 6.01, -7.14, 17.64),
      row(6, BundleDirection::cw, 38.58, 42.77, 4.78, 0.0, 1.83),
      row(5, BundleDirection::cw, 32.32, 38.31, 6.32, 0.0, 2.54),
      row(4, BundleDirection::cw, 25.49, 32.94, 7.48, -1.70, 3.72),
      row(2, BundleDirection::cw, 14.53, 23.14, 8.51, -5.49, 7.13),
  };
  if (unit == AngleIoUnit::radians) {
    c.angle_io_unit = AngleIoUnit::radians;
    auto r = [](double& a) { a = deg2rad(a); };
    r(c.joint_limits.theta21_min);
    r(c.joint_limits.theta21_max);
    r(c.joint_limits.theta22_min);
    r(c.joint_limits.theta22_max);
    r(c.humeroradial.gamma);
    r(c.humeroradial.theta_s);
    r(c.tfcc.theta_d_init);
    r(c.tfcc.theta_p_init);
    r(c.tfcc.theta_ecu);
    r(c.linkage.theta_d_rest);
    for (auto& b : c.bundles) {
      r(b.angle_dag);
      r(b.angle_cbf);
    }
    r(c.mcl.theta_a0);
    r(c.mcl.theta_p0);
    r(c.pronation.theta_m0);
    r(c.pronation.theta_tilt);
    r(c.supination.theta_n0);
  }
  return c;
}

ModelConfig parse_config(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": " + e.what());
  }
  if (!j.is_object()) bad(source + ": config root must be an object");
  check_keys(j, "", {"angle_io_unit", "joint_limits", "humeroradial", "tfcc",
                     "linkage", "bundles", "mcl", "elbow_actuation",
                     "pronation", "supination"});
  AngleIoUnit unit = AngleIoUnit::degrees;
  if (j.contains("angle_io_unit")) {
    unit = parse_angle_unit(as_string(j.at("angle_io_unit"), "angle_io_unit"),
                            "angle_io_unit");
  }
  ModelConfig c = default_config(unit);
  if (j.contains("joint_limits")) {
    parse_joint_limits(as_object(j.at("joint_limits"), "joint_limits"),
                       c.joint_limits);
  }
  if (j.contains("humeroradial")) {
    parse_humeroradial(as_object(j.at("humeroradial"), "humeroradial"),
                       c.humeroradial);
  }
  if (j.contains("tfcc")) parse_tfcc(as_object(j.at("tfcc"), "tfcc"), c.tfcc);
  if (j.contains("linkage")) {
    parse_linkage(as_object(j.at("linkage"), "linkage"), c.linkage);
  }
  if (j.contains("bundles")) parse_bundles(j.at("bundles"), c.bundles);
  if (j.contains("mcl")) parse_mcl(as_object(j.at("mcl"), "mcl"), c.mcl);
  if (j.contains("elbow_actuation")) {
    parse_elbow(as_object(j.at("elbow_actuation"), "elbow_actuation"),
                c.elbow_actuation);
  }
  if (j.contains("pronation")) {
    parse_pronation(as_object(j.at("pronation"), "pronation"), c.pronation);
  }
  if (j.contains("supination")) {
    parse_supination(as_object(j.at("supination"), "supination"), c.supination);
  }
  validate_config(c);
  return c;
}

ModelConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string config_to_json(const ModelConfig& c) {
  return config_json(c).dump(2) + "\n";
}

void save_config(const ModelConfig& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write config file: " + path);
  out << config_to_json(c);
  if (!out) throw ValidationError("failed writing config file: " + path);
}

std::string config_hash(const ModelConfig& c) {
  return fnv1a_hex(config_json(c).dump());
}

void validate_config(const ModelConfig& c) {
  const AngleBounds ab = bounds_for(c.angle_io_unit);

  if (!(c.joint_limits.theta21_min <= c.joint_limits.theta21_max)) {
    bad("joint_limits.theta21_min must not exceed theta21_max");
  }
  if (!(c.joint_limits.theta22_min <= c.joint_limits.theta22_max)) {
    bad("joint_limits.theta22_min must not exceed theta22_max");
  }
  if (c.joint_limits.theta21_min < 0.0) {
    bad("joint_limits.theta21_min must be non-negative");
  }
  if (c.joint_limits.theta21_max > ab.half_turn) {
    std::ostringstream os;
    os << "joint_limits.theta21_max must not exceed " << ab.half_turn << " "
       << ab.unit;
    bad(os.str());
  }

  require_positive(c.humeroradial.l_a, "humeroradial.l_a");
  require_positive(c.humeroradial.r, "humeroradial.r");
  require_positive(c.humeroradial.k, "humeroradial.k");
  require_positive(c.humeroradial.l_e, "humeroradial.l_e");
  require_open_range(c.humeroradial.gamma, 0.0, ab.half_turn,
                     "humeroradial.gamma", ab.unit);
  require_open_range(c.humeroradial.theta_s, 0.0, ab.quarter_turn,
                     "humeroradial.theta_s", ab.unit);
  if (c.humeroradial.l_s0) {
    require_positive(*c.humeroradial.l_s0, "humeroradial.l_s0");
  }

  require_positive(c.tfcc.l_r, "tfcc.l_r");
  require_positive(c.tfcc.l_or, "tfcc.l_or");
  require_positive(c.tfcc.l_re, "tfcc.l_re");
  require_positive(c.tfcc.tension_threshold, "tfcc.tension_threshold");
  require_open_range(c.tfcc.theta_d_init, 0.0, ab.half_turn,
                     "tfcc.theta_d_init", ab.unit);
  require_open_range(c.tfcc.theta_p_init, 0.0, ab.half_turn,
                     "tfcc.theta_p_init", ab.unit);

  require_positive(c.linkage.l1, "linkage.l1");
  require_positive(c.linkage.l3, "linkage.l3");
  require_positive(c.linkage.l4, "linkage.l4");
  require_positive(c.linkage.l5, "linkage.l5");
  require_open_range(c.linkage.theta_d_rest, 0.0, ab.half_turn,
                     "linkage.theta_d_rest", ab.unit);

  if (c.bundles.size() != 7) bad("bundles must contain exactly 7 records");
  std::set<int> ids;
  for (std::size_t i = 0; i < c.bundles.size(); ++i) {
    const auto& b = c.bundles[i];
    const std::string p = "bundles[" + std::to_string(i) + "].";
    if (b.id < 1 || b.id > 7) bad(p + "id must be in 1..7");
    if (!ids.insert(b.id).second) {
      bad(p + "id duplicates id " + std::to_string(b.id));
    }
    require_positive(b.ag, (p + "ag").c_str());
    require_positive(b.bf, (p + "bf").c_str());
    require_positive(b.rest_length, (p + "rest_length").c_str());
    require_positive(b.stiffness, (p + "stiffness").c_str());
  }

  require_positive(c.mcl.l_oa, "mcl.l_oa");
  require_positive(c.mcl.l_op, "mcl.l_op");
  require_positive(c.mcl.r_ins, "mcl.r_ins");
  require_open_range(c.mcl.theta_a0, 0.0, ab.half_turn, "mcl.theta_a0",
                     ab.unit);
  require_open_range(c.mcl.theta_p0, 0.0, ab.half_turn, "mcl.theta_p0",
                     ab.unit);

  auto check_flexor = [&](const FlexorConfig& f, const std::string& p) {
    require_positive(f.l_limb, (p + "l_limb").c_str());
    require_positive(f.l_offset, (p + "l_offset").c_str());
    require_positive(f.f_t1, (p + "f_t1").c_str());
    if (f.r) require_positive(*f.r, (p + "r").c_str());
  };
  check_flexor(c.elbow_actuation.brachialis, "elbow_actuation.brachialis.");
  check_flexor(c.elbow_actuation.biceps, "elbow_actuation.biceps.");
  require_positive(c.elbow_actuation.f_text, "elbow_actuation.f_text");
  require_positive(c.elbow_actuation.r_ext, "elbow_actuation.r_ext");

  require_positive(c.pronation.r_sec, "pronation.r_sec");
  require_positive(c.pronation.f_t2, "pronation.f_t2");
  require_open_range(c.pronation.theta_m0, 0.0, ab.half_turn,
                     "pronation.theta_m0", ab.unit);
  if (!(std::fabs(c.pronation.theta_tilt) < ab.quarter_turn)) {
    std::ostringstream os;
    os << "pronation.theta_tilt magnitude must be below " << ab.quarter_turn
       << " " << ab.unit;
    bad(os.str());
  }

  require_positive(c.supination.r_sec, "supination.r_sec");
  require_positive(c.supination.r_t, "supination.r_t");
  require_positive(c.supination.f_t3, "supination.f_t3");
  require_positive(c.supination.f_t4, "supination.f_t4");
  require_open_range(c.supination.theta_n0, 0.0, ab.half_turn,
                     "supination.theta_n0", ab.unit);
}

void JointLimits::validate() const {
  if (!(theta21_min <= theta21_max) || !(theta22_min <= theta22_max)) {
    throw ValidationError("joint limits must satisfy min <= max");
  }
  if (theta21_min < 0.0 || theta21_max > kPi) {
    throw ValidationError("flexion limits must lie in [0, pi]");
  }
}

Model build_model(const ModelConfig& c) {
  validate_config(c);
  const bool deg = c.angle_io_unit == AngleIoUnit::degrees;
  auto rad = [deg](double a) { return deg ? deg2rad(a) : a; };

  Model m;
  m.limits.theta21_min = rad(c.joint_limits.theta21_min);
  m.limits.theta21_max = rad(c.joint_limits.theta21_max);
  m.limits.theta22_min = rad(c.joint_limits.theta22_min);
  m.limits.theta22_max = rad(c.joint_limits.theta22_max);
  m.limits.reference = c.joint_limits.theta22_reference;
  m.limits.validate();

  {
    const auto& h = c.humeroradial;
    if (h.l_s0) {
      HumeroradialGeometry g;
      g.l_a = mm2m(h.l_a);
      g.r = mm2m(h.r);
      g.gamma = rad(h.gamma);
      g.theta_s = rad(h.theta_s);
      g.k = h.k;
      g.l_e = mm2m(h.l_e);
      g.l_s0 = mm2m(*h.l_s0);
      g.validate();
      m.humeroradial = g;
    } else {
      m.humeroradial = HumeroradialGeometry::from_rest_pose(
          mm2m(h.l_a), mm2m(h.r), rad(h.gamma), rad(h.theta_s), h.k,
          mm2m(h.l_e));
    }
  }

  {
    const auto& t = c.tfcc;
    TfccGeometry g;
    g.l_r = mm2m(t.l_r);
    g.l_or = mm2m(t.l_or);
    g.theta_d_init = rad(t.theta_d_init);
    g.theta_p_init = rad(t.theta_p_init);
    g.l_re = mm2m(t.l_re);
    g.theta_ecu = rad(t.theta_ecu);
    g.tension_threshold = mm2m(t.tension_threshold);
    g.finalize();
    g.validate();
    m.tfcc = g;
  }

  {
    const auto& l = c.linkage;
    ForearmLinkage g;
    g.l1 = mm2m(l.l1);
    g.l3 = mm2m(l.l3);
    g.l4 = mm2m(l.l4);
    g.l5 = mm2m(l.l5);
    g.theta_d_rest = rad(l.theta_d_rest);
    g.validate();
    m.linkage = g;
  }

  for (const auto& bc : c.bundles) {
    IomBundle b;
    b.id = bc.id;
    b.direction = bc.direction;
    b.ag = mm2m(bc.ag);
    b.bf = mm2m(bc.bf);
    b.rest_len = mm2m(bc.rest_length);
    b.angle_dag = rad(bc.angle_dag);
    b.angle_cbf = rad(bc.angle_cbf);
    b.stiffness = bc.stiffness;
    b.name = bc.name;
    b.validate();
    m.bundles.push_back(b);
  }
  std::sort(m.bundles.begin(), m.bundles.end(),
            [](const IomBundle& a, const IomBundle& b) { return a.id < b.id; });

  {
    const auto& mc = c.mcl;
    MclGeometry g;
    g.l_oa = mm2m(mc.l_oa);
    g.l_op = mm2m(mc.l_op);
    g.r_ins = mm2m(mc.r_ins);
    g.theta_a0 = rad(mc.theta_a0);
    g.theta_p0 = rad(mc.theta_p0);
    g.mode = mc.strain_mode;
    g.validate();
    m.mcl = g;
  }

  auto build_flexor = [&](const FlexorConfig& f) {
    FlexorGeometry g;
    g.l_limb = mm2m(f.l_limb);
    g.l_offset = mm2m(f.l_offset);
    g.f_t1 = f.f_t1;
    g.r = f.r ? mm2m(*f.r) : solve_flexor_radius(g.l_limb, g.l_offset);
    g.validate();
    return g;
  };
  m.elbow.brachialis = build_flexor(c.elbow_actuation.brachialis);
  m.elbow.biceps = build_flexor(c.elbow_actuation.biceps);
  m.elbow.f_text = c.elbow_actuation.f_text;
  m.elbow.r_ext = mm2m(c.elbow_actuation.r_ext);
  m.elbow.validate();

  m.pronation.r_sec = mm2m(c.pronation.r_sec);
  m.pronation.theta_m0 = rad(c.pronation.theta_m0);
  m.pronation.theta_tilt = rad(c.pronation.theta_tilt);
  m.pronation.f_t2 = c.pronation.f_t2;
  m.pronation.validate();

  m.supination.r_sec = mm2m(c.supination.r_sec);
  m.supination.theta_n0 = rad(c.supination.theta_n0);
  m.supination.r_t = mm2m(c.supination.r_t);
  m.supination.f_t3 = c.supination.f_t3;
  m.supination.f_t4 = c.supination.f_t4;
  m.supination.validate();

  return m;
}

}  // namespace arthro
