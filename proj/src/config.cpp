#include "aismc/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

std::string at_line(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  if (mark.line < 0) return "";
  return " (line " + std::to_string(mark.line + 1) + ")";
}

std::string join(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

void require_map(const YAML::Node& node, const std::string& field) {
  if (!node.IsMap()) throw ValidationError(field, "expected a mapping" + at_line(node));
}

void check_keys(const YAML::Node& map, const std::string& section,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(join(section, key), "unknown key" + at_line(kv.first));
    }
  }
}

YAML::Node present(const YAML::Node& node, const std::string& field) {
  if (node.IsNull()) throw ValidationError(field, "missing value" + at_line(node));
  return node;
}

double read_double(const YAML::Node& node, const std::string& field) {
  present(node, field);
  if (!node.IsScalar()) throw ValidationError(field, "expected a number" + at_line(node));
  try {
    return node.as<double>();
  } catch (const YAML::BadConversion&) {
    throw ValidationError(field, "expected a number, got '" + node.Scalar() + "'" + at_line(node));
  }
}

int read_int(const YAML::Node& node, const std::string& field) {
  present(node, field);
  const std::string& text = node.IsScalar() ? node.Scalar() : std::string();
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ValidationError(field, "expected an integer" + at_line(node));
  }
  return value;
}

std::uint64_t read_seed(const YAML::Node& node, const std::string& field) {
  present(node, field);
  const std::string& text = node.IsScalar() ? node.Scalar() : std::string();
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ValidationError(field, "expected a non-negative 64-bit integer" + at_line(node));
  }
  return value;
}

bool read_bool(const YAML::Node& node, const std::string& field) {
  present(node, field);
  try {
    return node.as<bool>();
  } catch (const YAML::BadConversion&) {
    throw ValidationError(field, "expected true or false" + at_line(node));
  }
}

std::string read_string(const YAML::Node& node, const std::string& field) {
  present(node, field);
  if (!node.IsScalar()) throw ValidationError(field, "expected a string" + at_line(node));
  return node.Scalar();
}

/// A scalar is broadcast to every component; a sequence must have size n.
template <int N>
Eigen::Matrix<double, N, 1> read_vector(const YAML::Node& node, const std::string& field) {
  present(node, field);
  Eigen::Matrix<double, N, 1> v;
  if (node.IsScalar()) {
    v.setConstant(read_double(node, field));
    return v;
  }
  if (!node.IsSequence() || node.size() != static_cast<std::size_t>(N)) {
    throw ValidationError(field, "expected " + std::to_string(N) + " values" + at_line(node));
  }
  for (int i = 0; i < N; ++i) {
    v(i) = read_double(node[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

template <typename T, typename F>
std::vector<T> read_list(const YAML::Node& node, const std::string& field, F element) {
  present(node, field);
  if (!node.IsSequence()) throw ValidationError(field, "expected a list" + at_line(node));
  std::vector<T> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(element(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

SwitchingKind switching_kind_from_string(const std::string& name, const std::string& field) {
  if (name == "saturation") return SwitchingKind::Saturation;
  if (name == "tanh") return SwitchingKind::Tanh;
  if (name == "sign") return SwitchingKind::Sign;
  throw ValidationError(field, "unknown switching kind '" + name + "' (expected saturation, tanh or sign)");
}

const char* to_string(SwitchingKind kind) {
  switch (kind) {
    case SwitchingKind::Saturation: return "saturation";
    case SwitchingKind::Tanh: return "tanh";
    case SwitchingKind::Sign: return "sign";
  }
  return "?";
}

ControllerKind read_controller(const YAML::Node& node, const std::string& field) {
  const std::string name = read_string(node, field);
  try {
    return controller_kind_from_string(name);
  } catch (const ValidationError& e) {
    throw ValidationError(field, std::string(e.what()) + at_line(node));
  }
}

int read_task(const YAML::Node& node, const std::string& field) {
  const int id = read_int(node, field);
  if (id < 1 || id > 3) throw ValidationError(field, "unknown task " + std::to_string(id) + at_line(node));
  return id;
}

// Each section reader overwrites only the keys that are present.

void read_timing(const YAML::Node& n, TimingConfig& t) {
  const std::string s = "timing";
  require_map(n, s);
  check_keys(n, s, {"dt_physics", "control_period", "duration"});
  if (n["dt_physics"]) t.dt_physics = read_double(n["dt_physics"], s + ".dt_physics");
  if (n["control_period"]) t.control_period = read_double(n["control_period"], s + ".control_period");
  if (n["duration"]) t.duration = read_double(n["duration"], s + ".duration");
}

void read_reference(const YAML::Node& n, ReferenceConfig& r) {
  const std::string s = "reference";
  require_map(n, s);
  check_keys(n, s, {"step_amplitude", "step_time", "filter_time_constant"});
  if (n["step_amplitude"]) r.step_amplitude = read_double(n["step_amplitude"], s + ".step_amplitude");
  if (n["step_time"]) r.step_time = read_double(n["step_time"], s + ".step_time");
  if (n["filter_time_constant"]) {
    r.filter_time_constant = read_double(n["filter_time_constant"], s + ".filter_time_constant");
  }
}

void read_vehicle(const YAML::Node& n, VehicleModel& v) {
  const std::string s = "vehicle";
  require_map(n, s);
  check_keys(n, s,
             {"mass", "inertia", "added_mass", "linear_damping", "quadratic_damping", "weight",
              "buoyancy", "center_of_gravity", "center_of_buoyancy", "max_thrust"});
  if (n["mass"]) v.mass = read_double(n["mass"], s + ".mass");
  if (n["inertia"]) v.inertia = read_vector<3>(n["inertia"], s + ".inertia");
  if (n["added_mass"]) v.added_mass = read_vector<6>(n["added_mass"], s + ".added_mass");
  if (n["linear_damping"]) v.linear_damping = read_vector<6>(n["linear_damping"], s + ".linear_damping");
  if (n["quadratic_damping"]) {
    v.quadratic_damping = read_vector<6>(n["quadratic_damping"], s + ".quadratic_damping");
  }
  if (n["weight"]) v.weight = read_double(n["weight"], s + ".weight");
  if (n["buoyancy"]) v.buoyancy = read_double(n["buoyancy"], s + ".buoyancy");
  if (n["center_of_gravity"]) {
    v.center_of_gravity = read_vector<3>(n["center_of_gravity"], s + ".center_of_gravity");
  }
  if (n["center_of_buoyancy"]) {
    v.center_of_buoyancy = read_vector<3>(n["center_of_buoyancy"], s + ".center_of_buoyancy");
  }
  if (n["max_thrust"]) v.max_thrust = read_double(n["max_thrust"], s + ".max_thrust");
}

void read_thruster_array(const YAML::Node& n, const std::string& field,
                         std::array<Vector3, kThrusterCount>& out) {
  present(n, field);
  if (!n.IsSequence() || n.size() != static_cast<std::size_t>(kThrusterCount)) {
    throw ValidationError(field, "expected " + std::to_string(kThrusterCount) + " entries" + at_line(n));
  }
  for (int i = 0; i < kThrusterCount; ++i) {
    out[i] = read_vector<3>(n[i], field + "[" + std::to_string(i) + "]");
  }
}

void read_thrusters(const YAML::Node& n, ThrusterLayout& t) {
  const std::string s = "thrusters";
  require_map(n, s);
  check_keys(n, s, {"positions", "directions"});
  if (n["positions"]) read_thruster_array(n["positions"], s + ".positions", t.positions);
  if (n["directions"]) read_thruster_array(n["directions"], s + ".directions", t.directions);
}

void read_disturbance(const YAML::Node& n, DisturbanceConfig& d) {
  const std::string s = "disturbance";
  require_map(n, s);
  check_keys(n, s, {"sigma", "t_corr", "seed", "mismatch_scale"});
  if (n["sigma"]) d.sigma = read_vector<6>(n["sigma"], s + ".sigma");
  if (n["t_corr"]) d.correlation_time = read_vector<6>(n["t_corr"], s + ".t_corr");
  if (n["seed"]) d.seed = read_seed(n["seed"], s + ".seed");
  if (n["mismatch_scale"]) d.mismatch_scale = read_double(n["mismatch_scale"], s + ".mismatch_scale");
}

void read_sliding(const YAML::Node& n, SlidingGains& g) {
  const std::string s = "sliding";
  require_map(n, s);
  check_keys(n, s, {"c1", "c2", "gamma", "k"});
  if (n["c1"]) g.c1 = read_vector<6>(n["c1"], s + ".c1");
  if (n["c2"]) g.c2 = read_vector<6>(n["c2"], s + ".c2");
  if (n["gamma"]) g.gamma = read_vector<6>(n["gamma"], s + ".gamma");
  if (n["k"]) g.k = read_vector<6>(n["k"], s + ".k");
}

void read_adaptive(const YAML::Node& n, AdaptiveState& a) {
  const std::string s = "adaptive";
  require_map(n, s);
  check_keys(n, s, {"k_bar", "lambda", "beta", "k_init"});
  if (n["k_bar"]) a.k_bar = read_vector<6>(n["k_bar"], s + ".k_bar");
  if (n["lambda"]) a.lambda = read_vector<6>(n["lambda"], s + ".lambda");
  if (n["beta"]) a.beta = read_vector<6>(n["beta"], s + ".beta");
  if (n["k_init"]) a.k_hat = read_vector<6>(n["k_init"], s + ".k_init");
}

void read_pid(const YAML::Node& n, PidGains& g) {
  const std::string s = "pid";
  require_map(n, s);
  check_keys(n, s, {"kp", "ki", "kd", "integral_limit"});
  if (n["kp"]) g.kp = read_vector<6>(n["kp"], s + ".kp");
  if (n["ki"]) g.ki = read_vector<6>(n["ki"], s + ".ki");
  if (n["kd"]) g.kd = read_vector<6>(n["kd"], s + ".kd");
  if (n["integral_limit"]) g.integral_limit = read_vector<6>(n["integral_limit"], s + ".integral_limit");
}

void read_switching(const YAML::Node& n, SwitchingFunction& f) {
  const std::string s = "switching";
  require_map(n, s);
  check_keys(n, s, {"kind", "width"});
  if (n["kind"]) f.kind = switching_kind_from_string(read_string(n["kind"], s + ".kind"), s + ".kind");
  if (n["width"]) f.width = read_double(n["width"], s + ".width");
}

void read_initial_state(const YAML::Node& n, VehicleState& x) {
  const std::string s = "initial_state";
  require_map(n, s);
  check_keys(n, s, {"eta", "nu"});
  if (n["eta"]) x.eta = read_vector<6>(n["eta"], s + ".eta");
  if (n["nu"]) x.nu = read_vector<6>(n["nu"], s + ".nu");
}

void read_noise(const YAML::Node& n, MeasurementNoise& m) {
  const std::string s = "measurement_noise";
  require_map(n, s);
  check_keys(n, s, {"enabled", "pose_sigma", "velocity_sigma"});
  if (n["enabled"]) m.enabled = read_bool(n["enabled"], s + ".enabled");
  if (n["pose_sigma"]) m.pose_sigma = read_vector<6>(n["pose_sigma"], s + ".pose_sigma");
  if (n["velocity_sigma"]) m.velocity_sigma = read_vector<6>(n["velocity_sigma"], s + ".velocity_sigma");
}

void read_evaluation(const YAML::Node& n, TimeWindow& w) {
  const std::string s = "evaluation";
  require_map(n, s);
  check_keys(n, s, {"window_start", "window_end"});
  if (n["window_start"]) w.start = read_double(n["window_start"], s + ".window_start");
  if (n["window_end"]) w.end = read_double(n["window_end"], s + ".window_end");
}

void read_output(const YAML::Node& n, OutputConfig& o) {
  const std::string s = "output";
  require_map(n, s);
  check_keys(n, s, {"directory", "prefix"});
  if (n["directory"]) o.directory = read_string(n["directory"], s + ".directory");
  if (n["prefix"]) o.prefix = read_string(n["prefix"], s + ".prefix");
}

void read_compare(const YAML::Node& n, CompareConfig& c) {
  const std::string s = "compare";
  require_map(n, s);
  check_keys(n, s, {"tasks", "controllers", "seeds"});
  if (n["tasks"]) c.tasks = read_list<int>(n["tasks"], s + ".tasks", read_task);
  if (n["controllers"]) {
    c.controllers = read_list<ControllerKind>(n["controllers"], s + ".controllers", read_controller);
  }
  if (n["seeds"]) c.seeds = read_list<std::uint64_t>(n["seeds"], s + ".seeds", read_seed);
}

void read_sweep(const YAML::Node& n, SweepConfig& sweep) {
  const std::string s = "sweep";
  require_map(n, s);
  check_keys(n, s, {"axes"});
  if (!n["axes"]) return;
  sweep.axes = read_list<SweepAxis>(n["axes"], s + ".axes", [](const YAML::Node& a, const std::string& f) {
    require_map(a, f);
    check_keys(a, f, {"parameter", "scales"});
    SweepAxis axis;
    axis.parameter = read_string(a["parameter"], f + ".parameter");
    axis.scales = read_list<double>(a["scales"], f + ".scales", read_double);
    return axis;
  });
}

// Shortest representation that parses back to the same double.
std::string number(double v) {
  if (std::isnan(v)) return ".nan";
  if (std::isinf(v)) return v > 0 ? ".inf" : "-.inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename Vec>
void emit_vector(YAML::Emitter& out, const char* key, const Vec& v) {
  out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << number(v(i));
  out << YAML::EndSeq;
}

void emit_number(YAML::Emitter& out, const char* key, double v) {
  out << YAML::Key << key << YAML::Value << number(v);
}

}  // namespace

void RunConfig::validate() const {
  sim.validate();
  if (!std::isfinite(window.start) || window.start < 0.0) {
    throw ValidationError("evaluation.window_start", "must be finite and non-negative");
  }
  if (std::isnan(window.end) || window.end < window.start) {
    throw ValidationError("evaluation.window_end", "must not precede window_start");
  }
  if (output.prefix.empty()) throw ValidationError("output.prefix", "must not be empty");

  if (compare.tasks.empty()) throw ValidationError("compare.tasks", "must list at least one task");
  for (int t : compare.tasks) {
    if (t < 1 || t > 3) throw ValidationError("compare.tasks", "unknown task " + std::to_string(t));
  }
  if (std::set<int>(compare.tasks.begin(), compare.tasks.end()).size() != compare.tasks.size()) {
    throw ValidationError("compare.tasks", "duplicate task");
  }
  const std::set<ControllerKind> kinds(compare.controllers.begin(), compare.controllers.end());
  if (kinds.size() != compare.controllers.size()) {
    throw ValidationError("compare.controllers", "duplicate controller");
  }
  for (ControllerKind k : {ControllerKind::Pid, ControllerKind::Smc, ControllerKind::Aismc}) {
    if (!kinds.contains(k)) {
      throw ValidationError("compare.controllers", "must include " + std::string(to_string(k)));
    }
  }
  if (compare.seeds.empty()) throw ValidationError("compare.seeds", "must list at least one seed");
  if (std::set<std::uint64_t>(compare.seeds.begin(), compare.seeds.end()).size() != compare.seeds.size()) {
    throw ValidationError("compare.seeds", "duplicate seed");
  }

  for (std::size_t i = 0; i < sweep.axes.size(); ++i) {
    const SweepAxis& axis = sweep.axes[i];
    const std::string field = "sweep.axes[" + std::to_string(i) + "]";
    const auto& known = sweep_parameters();
    if (std::find(known.begin(), known.end(), axis.parameter) == known.end()) {
      throw ValidationError(field + ".parameter", "unknown gain '" + axis.parameter + "'");
    }
    if (axis.scales.empty()) throw ValidationError(field + ".scales", "must not be empty");
    for (double v : axis.scales) {
      if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(field + ".scales", "must be positive");
    }
  }
}

RunConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line >= 0 ? static_cast<std::size_t>(e.mark.line) + 1 : 0);
  }

  RunConfig c;
  if (root.IsNull()) {
    c.validate();
    return c;
  }
  require_map(root, "<root>");
  check_keys(root, "",
             {"task", "controller", "timing", "reference", "vehicle", "thrusters", "disturbance",
              "sliding", "adaptive", "pid", "switching", "initial_state", "measurement_noise",
              "evaluation", "output", "compare", "sweep"});

  try {
    if (root["task"]) c.sim.task = task_from_int(read_task(root["task"], "task"));
    if (root["controller"]) c.sim.controller.kind = read_controller(root["controller"], "controller");
    if (root["timing"]) read_timing(root["timing"], c.sim.timing);
    if (root["reference"]) read_reference(root["reference"], c.sim.reference);
    if (root["vehicle"]) read_vehicle(root["vehicle"], c.sim.vehicle);
    if (root["thrusters"]) read_thrusters(root["thrusters"], c.sim.thrusters);
    if (root["disturbance"]) read_disturbance(root["disturbance"], c.sim.disturbance);
    if (root["sliding"]) read_sliding(root["sliding"], c.sim.controller.sliding);
    if (root["adaptive"]) read_adaptive(root["adaptive"], c.sim.controller.adaptive);
    if (root["pid"]) read_pid(root["pid"], c.sim.controller.pid);
    if (root["switching"]) read_switching(root["switching"], c.sim.controller.switching);
    if (root["initial_state"]) read_initial_state(root["initial_state"], c.sim.initial_state);
    if (root["measurement_noise"]) read_noise(root["measurement_noise"], c.sim.noise);
    if (root["evaluation"]) read_evaluation(root["evaluation"], c.window);
    if (root["output"]) read_output(root["output"], c.output);
    if (root["compare"]) read_compare(root["compare"], c.compare);
    if (root["sweep"]) read_sweep(root["sweep"], c.sweep);
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line >= 0 ? static_cast<std::size_t>(e.mark.line) + 1 : 0);
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file '" + path + "'");
  return parse_config(text.str());
}

std::string emit_config(const RunConfig& c) {
  const SimulationConfig& sim = c.sim;
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "task" << YAML::Value << static_cast<int>(sim.task);
  out << YAML::Key << "controller" << YAML::Value << std::string(to_string(sim.controller.kind));

  out << YAML::Key << "timing" << YAML::Value << YAML::BeginMap;
  emit_number(out, "dt_physics", sim.timing.dt_physics);
  emit_number(out, "control_period", sim.timing.control_period);
  emit_number(out, "duration", sim.timing.duration);
  out << YAML::EndMap;

  out << YAML::Key << "reference" << YAML::Value << YAML::BeginMap;
  emit_number(out, "step_amplitude", sim.reference.step_amplitude);
  emit_number(out, "step_time", sim.reference.step_time);
  emit_number(out, "filter_time_constant", sim.reference.filter_time_constant);
  out << YAML::EndMap;

  const VehicleModel& v = sim.vehicle;
  out << YAML::Key << "vehicle" << YAML::Value << YAML::BeginMap;
  emit_number(out, "mass", v.mass);
  emit_vector(out, "inertia", v.inertia);
  emit_vector(out, "added_mass", v.added_mass);
  emit_vector(out, "linear_damping", v.linear_damping);
  emit_vector(out, "quadratic_damping", v.quadratic_damping);
  emit_number(out, "weight", v.weight);
  emit_number(out, "buoyancy", v.buoyancy);
  emit_vector(out, "center_of_gravity", v.center_of_gravity);
  emit_vector(out, "center_of_buoyancy", v.center_of_buoyancy);
  emit_number(out, "max_thrust", v.max_thrust);
  out << YAML::EndMap;

  out << YAML::Key << "thrusters" << YAML::Value << YAML::BeginMap;
  for (const auto& [key, arr] : {std::pair{"positions", &sim.thrusters.positions},
                                 std::pair{"directions", &sim.thrusters.directions}}) {
    out << YAML::Key << key << YAML::Value << YAML::BeginSeq;
    for (const Vector3& p : *arr) {
      out << YAML::Flow << YAML::BeginSeq << number(p.x()) << number(p.y()) << number(p.z())
          << YAML::EndSeq;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;

  const DisturbanceConfig& d = sim.disturbance;
  out << YAML::Key << "disturbance" << YAML::Value << YAML::BeginMap;
  emit_vector(out, "sigma", d.sigma);
  emit_vector(out, "t_corr", d.correlation_time);
  out << YAML::Key << "seed" << YAML::Value << std::to_string(d.seed);
  emit_number(out, "mismatch_scale", d.mismatch_scale);
  out << YAML::EndMap;

  const ControllerConfig& ctl = sim.controller;
  out << YAML::Key << "sliding" << YAML::Value << YAML::BeginMap;
  emit_vector(out, "c1", ctl.sliding.c1);
  emit_vector(out, "c2", ctl.sliding.c2);
  emit_vector(out, "gamma", ctl.sliding.gamma);
  emit_vector(out, "k", ctl.sliding.k);
  out << YAML::EndMap;

  out << YAML::Key << "adaptive" << YAML::Value << YAML::BeginMap;
  emit_vector(out, "k_bar", ctl.adaptive.k_bar);
  emit_vector(out, "lambda", ctl.adaptive.lambda);
  emit_vector(out, "beta", ctl.adaptive.beta);
  emit_vector(out, "k_init", ctl.adaptive.k_hat);
  out << YAML::EndMap;

  out << YAML::Key << "pid" << YAML::Value << YAML::BeginMap;
  emit_vector(out, "kp", ctl.pid.kp);
  emit_vector(out, "ki", ctl.pid.ki);
  emit_vector(out, "kd", ctl.pid.kd);
  emit_vector(out, "integral_limit", ctl.pid.integral_limit);
  out << YAML::EndMap;

  out << YAML::Key << "switching" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << to_string(ctl.switching.kind);
  emit_number(out, "width", ctl.switching.width);
  out << YAML::EndMap;

  out << YAML::Key << "initial_state" << YAML::Value << YAML::BeginMap;
  emit_vector(out, "eta", sim.initial_state.eta);
  emit_vector(out, "nu", sim.initial_state.nu);
  out << YAML::EndMap;

  out << YAML::Key << "measurement_noise" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "enabled" << YAML::Value << sim.noise.enabled;
  emit_vector(out, "pose_sigma", sim.noise.pose_sigma);
  emit_vector(out, "velocity_sigma", sim.noise.velocity_sigma);
  out << YAML::EndMap;

  out << YAML::Key << "evaluation" << YAML::Value << YAML::BeginMap;
  emit_number(out, "window_start", c.window.start);
  emit_number(out, "window_end", c.window.end);
  out << YAML::EndMap;

  out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "directory" << YAML::Value << YAML::DoubleQuoted << c.output.directory;
  out << YAML::Key << "prefix" << YAML::Value << YAML::DoubleQuoted << c.output.prefix;
  out << YAML::EndMap;

  out << YAML::Key << "compare" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "tasks" << YAML::Value << YAML::Flow << c.compare.tasks;
  out << YAML::Key << "controllers" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (ControllerKind k : c.compare.controllers) out << std::string(to_string(k));
  out << YAML::EndSeq;
  out << YAML::Key << "seeds" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (std::uint64_t s : c.compare.seeds) out << std::to_string(s);
  out << YAML::EndSeq;
  out << YAML::EndMap;

  out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "axes" << YAML::Value << YAML::BeginSeq;
  for (const SweepAxis& axis : c.sweep.axes) {
    out << YAML::BeginMap;
    out << YAML::Key << "parameter" << YAML::Value << axis.parameter;
    out << YAML::Key << "scales" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (double s : axis.scales) out << number(s);
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> names{
      "sliding.c1", "sliding.c2",     "sliding.gamma",  "sliding.k", "adaptive.k_bar",
      "adaptive.lambda", "adaptive.k_init", "pid.kp", "pid.ki",    "pid.kd"};
  return names;
}

Vector6& gain_vector(ControllerConfig& controller, std::string_view parameter) {
  if (parameter == "sliding.c1") return controller.sliding.c1;
  if (parameter == "sliding.c2") return controller.sliding.c2;
  if (parameter == "sliding.gamma") return controller.sliding.gamma;
  if (parameter == "sliding.k") return controller.sliding.k;
  if (parameter == "adaptive.k_bar") return controller.adaptive.k_bar;
  if (parameter == "adaptive.lambda") return controller.adaptive.lambda;
  if (parameter == "adaptive.k_init") return controller.adaptive.k_hat;
  if (parameter == "pid.kp") return controller.pid.kp;
  if (parameter == "pid.ki") return controller.pid.ki;
  if (parameter == "pid.kd") return controller.pid.kd;
  throw ValidationError("sweep.parameter", "unknown gain '" + std::string(parameter) + "'");
}

}  // namespace aismc
