// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: a JSON document with strict schema checking. Every key
// is optional and falls back to a documented default; unknown keys are
// rejected with their dotted path. Physical quantities carry their unit in the
// key name; angles follow the top-level "angle_unit" ("degrees" by default).
#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rissim/channel.hpp"
#include "rissim/errors.hpp"
#include "rissim/experiments.hpp"
#include "rissim/geometry.hpp"
#include "rissim/link.hpp"
#include "rissim/oracle.hpp"
#include "rissim/scattering.hpp"

namespace rissim {

using Json = nlohmann::ordered_json;

enum class AngleUnit { degrees, radians };

enum class OrientationMode { identity, specular, normal };

struct SceneConfig {
  Vec3 tx_position{-0.25, 0.0, 0.25 * std::sqrt(3.0)};  // 0.5 m at 30 degrees zenith, azimuth 180
  Vec3 rx_position{0.25, 0.0, 0.25 * std::sqrt(3.0)};
  OrientationMode orientation = OrientationMode::identity;
  Vec3 normal{0.0, 0.0, 1.0};  // used when orientation == normal
};

/// Angle quads for the `rcs` command: explicit list, or a grid with
/// theta_i, theta_s in [0, theta_max] at `step`, one phi_i, several phi_s.
struct RcsRequest {
  std::vector<AngleQuad> angles;  // radians; overrides the grid when non-empty
  double step = deg(5.0);
  double theta_max = deg(85.0);
  double phi_i = deg(180.0);
  std::vector<double> phi_s{deg(0.0), deg(45.0), deg(90.0), deg(135.0)};

  [[nodiscard]] std::vector<AngleQuad> quads() const {
    if (!angles.empty()) return angles;
    const AngleGrid grid{step, theta_max};
    std::vector<AngleQuad> out;
    for (double ti : grid.thetas())
      for (double ts : grid.thetas())
        for (double ps : phi_s) out.push_back({ti, phi_i, ts, ps});
    return out;
  }
};

struct SweepConfig {
  SweepPlan plan;
  /// Textual form of each model entry, kept for serialization.
  struct ModelEntry {
    std::string label;
    std::string rcs_model;  // metal | ris | tang
    std::string policy;     // metal_rotated | metal_flat | ris_continuous | ris_discrete | ris_uniform
    int levels = 2;
    int max_sweeps = 10;
  };
  std::vector<ModelEntry> entries;
};

struct OptimizeConfig {
  int levels = 2;
  int max_sweeps = 10;
  std::vector<double> amplitude_table;
};

struct FixedConfiguration {
  int levels = 2;
  std::vector<int> phase_levels;
};

struct OracleConfig {
  QuadratureSpec quadrature;
  double grid_step = deg(5.0);
  double theta_max = deg(85.0);
  std::vector<double> cell_sizes_wavelengths{0.25, 0.5, 1.0};
  double threshold = 1e-3;
};

struct RunConfig {
  AngleUnit angle_unit = AngleUnit::degrees;
  double frequency_hz = default_frequency_hz;
  PropagationParams propagation;
  SurfaceSpec surface{16, 16, 0.5 * speed_of_light / default_frequency_hz, 0.5 * speed_of_light / default_frequency_hz};
  SceneConfig scene;
  double mu = DiffractionParams::default_mu;
  SummationMode summation = SummationMode::naive;
  RcsRequest rcs;
  std::optional<SweepConfig> sweep;
  OptimizeConfig optimize;
  std::optional<FixedConfiguration> ris_configuration;
  OracleConfig oracle;

  [[nodiscard]] Scene make_scene() const {
    Scene s{scene.tx_position, scene.rx_position, surface, SurfaceOrientation{}};
    if (scene.orientation == OrientationMode::specular)
      s.orientation = specular_orientation(scene.tx_position, scene.rx_position);
    else if (scene.orientation == OrientationMode::normal)
      s.orientation = orientation_from_normal(scene.normal);
    return s;
  }

  [[nodiscard]] DiffractionParams diffraction() const { return DiffractionParams(mu); }
};

namespace config_detail {

/// Reads one JSON object, tracking which keys were consumed so that leftovers
/// can be reported as unknown.
class ObjectReader {
public:
  ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  [[nodiscard]] std::string path_of(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  double number(const std::string& key, double fallback) {
    const Json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number()) throw ConfigError(path_of(key), "expected a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) throw ConfigError(path_of(key), "expected a finite number");
    return d;
  }

  int integer(const std::string& key, int fallback) {
    const Json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) throw ConfigError(path_of(key), "expected an integer");
    return v->get<int>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const Json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) throw ConfigError(path_of(key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) {
    const Json* v = find(key);
    if (!v) return fallback;
    if (!v->is_array()) throw ConfigError(path_of(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const Json& e = (*v)[i];
      if (!e.is_number()) throw ConfigError(path_of(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Vec3 vec3(const std::string& key, const Vec3& fallback) {
    if (!has(key)) {
      seen_.insert(key);
      return fallback;
    }
    const auto v = numbers(key, {});
    if (v.size() != 3) throw ConfigError(path_of(key), "expected three coordinates");
    return {v[0], v[1], v[2]};
  }

  void reject_unknown() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.contains(key)) throw ConfigError(path_of(key), "unknown key");
  }

private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

inline double angle_in(double value, AngleUnit unit) { return unit == AngleUnit::degrees ? deg(value) : value; }
inline double angle_out(double radians, AngleUnit unit) {
  return unit == AngleUnit::degrees ? to_degrees(radians) : radians;
}

template <typename Fn>
void checked(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

inline SweepConfig::ModelEntry parse_model_entry(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  SweepConfig::ModelEntry e;
  e.label = r.string("label", "");
  e.rcs_model = r.string("rcs_model", "");
  e.policy = r.string("policy", "");
  e.levels = r.integer("levels", 2);
  e.max_sweeps = r.integer("max_sweeps", 10);
  r.reject_unknown();
  if (e.label.empty()) throw ConfigError(path + ".label", "label is required");
  for (char c : e.label)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ConfigError(path + ".label", "labels may contain only letters, digits and '_'");
  if (e.rcs_model != "metal" && e.rcs_model != "ris" && e.rcs_model != "tang")
    throw ConfigError(path + ".rcs_model", "expected one of metal, ris, tang");
  static const std::set<std::string> policies{"metal_rotated", "metal_flat", "ris_continuous", "ris_discrete",
                                              "ris_uniform"};
  if (!policies.contains(e.policy))
    throw ConfigError(path + ".policy",
                      "expected one of metal_rotated, metal_flat, ris_continuous, ris_discrete, ris_uniform");
  if (e.levels < 2) throw ConfigError(path + ".levels", "at least two levels are required");
  if (e.max_sweeps < 1) throw ConfigError(path + ".max_sweeps", "must be positive");
  return e;
}

inline ModelSpec to_model_spec(const SweepConfig::ModelEntry& e, double mu) {
  ModelSpec m;
  m.label = e.label;
  if (e.rcs_model == "metal")
    m.model = MetalModel{};
  else if (e.rcs_model == "ris")
    m.model = RisModel{DiffractionParams(mu)};
  else
    m.model = TangModel{};
  if (e.policy == "metal_rotated")
    m.policy = MetalRotated{};
  else if (e.policy == "metal_flat")
    m.policy = MetalFlat{};
  else if (e.policy == "ris_continuous")
    m.policy = RisOptimizedContinuous{};
  else if (e.policy == "ris_discrete")
    m.policy = RisOptimizedDiscrete{e.levels, e.max_sweeps};
  else
    m.policy = RisUniform{};
  return m;
}

}  // namespace config_detail

inline RunConfig parse_config(const Json& root) {
  using config_detail::angle_in;
  using config_detail::checked;
  using config_detail::ObjectReader;

  RunConfig c;
  ObjectReader r(root, "");

  const std::string unit = r.string("angle_unit", "degrees");
  if (unit == "degrees")
    c.angle_unit = AngleUnit::degrees;
  else if (unit == "radians")
    c.angle_unit = AngleUnit::radians;
  else
    throw ConfigError("angle_unit", "expected 'degrees' or 'radians'");
  const AngleUnit au = c.angle_unit;

  if (const Json* j = r.find("propagation")) {
    ObjectReader p(*j, "propagation");
    c.frequency_hz = p.number("frequency_hz", c.frequency_hz);
    c.propagation.beta0 = p.number("beta0", c.propagation.beta0);
    c.propagation.gamma = p.number("gamma", c.propagation.gamma);
    c.propagation.p_t = p.number("tx_power_watts", c.propagation.p_t);
    p.reject_unknown();
  }
  if (!(c.frequency_hz > 0.0)) throw ConfigError("propagation.frequency_hz", "must be positive");
  c.propagation.lambda = speed_of_light / c.frequency_hz;
  checked("propagation", [&] { c.propagation.validate(); });

  const double half_wave = 0.5 * c.propagation.lambda;
  c.surface = SurfaceSpec{16, 16, half_wave, half_wave};
  if (const Json* j = r.find("surface")) {
    ObjectReader s(*j, "surface");
    c.surface.n_v = s.integer("columns", c.surface.n_v);
    c.surface.n_h = s.integer("rows", c.surface.n_h);
    c.surface.d_v = s.number("cell_width_meters", c.surface.d_v);
    c.surface.d_h = s.number("cell_length_meters", c.surface.d_h);
    s.reject_unknown();
  }
  checked("surface", [&] { c.surface.validate(); });

  if (const Json* j = r.find("scene")) {
    ObjectReader s(*j, "scene");
    c.scene.tx_position = s.vec3("tx_position_meters", c.scene.tx_position);
    c.scene.rx_position = s.vec3("rx_position_meters", c.scene.rx_position);
    const std::string o = s.string("orientation", "identity");
    if (o == "identity")
      c.scene.orientation = OrientationMode::identity;
    else if (o == "specular")
      c.scene.orientation = OrientationMode::specular;
    else if (o == "normal")
      c.scene.orientation = OrientationMode::normal;
    else
      throw ConfigError("scene.orientation", "expected identity, specular or normal");
    c.scene.normal = s.vec3("normal", c.scene.normal);
    s.reject_unknown();
    if (c.scene.orientation == OrientationMode::normal && !(norm(c.scene.normal) > 0.0))
      throw ConfigError("scene.normal", "normal must be non-zero");
  }

  if (const Json* j = r.find("diffraction")) {
    ObjectReader d(*j, "diffraction");
    c.mu = d.number("mu", c.mu);
    d.reject_unknown();
  }
  checked("diffraction.mu", [&] { (void)DiffractionParams(c.mu); });

  const std::string sum = r.string("summation", "naive");
  if (sum == "naive")
    c.summation = SummationMode::naive;
  else if (sum == "compensated")
    c.summation = SummationMode::compensated;
  else
    throw ConfigError("summation", "expected 'naive' or 'compensated'");

  if (const Json* j = r.find("rcs")) {
    ObjectReader s(*j, "rcs");
    if (const Json* a = s.find("angles")) {
      if (!a->is_array()) throw ConfigError("rcs.angles", "expected an array of [theta_i, phi_i, theta_s, phi_s]");
      for (std::size_t i = 0; i < a->size(); ++i) {
        const std::string path = "rcs.angles[" + std::to_string(i) + "]";
        const Json& e = (*a)[i];
        if (!e.is_array() || e.size() != 4) throw ConfigError(path, "expected four angles");
        double v[4];
        for (std::size_t k = 0; k < 4; ++k) {
          if (!e[k].is_number()) throw ConfigError(path, "expected four angles");
          v[k] = angle_in(e[k].get<double>(), au);
        }
        const AngleQuad q{v[0], v[1], v[2], v[3]};
        if (!(q.theta_i >= 0.0 && q.theta_i < 0.5 * std::numbers::pi && q.theta_s >= 0.0 &&
              q.theta_s < 0.5 * std::numbers::pi))
          throw ConfigError(path, "elevations must lie in [0, 90) degrees");
        c.rcs.angles.push_back(q);
      }
    }
    c.rcs.step = angle_in(s.number("grid_step", config_detail::angle_out(c.rcs.step, au)), au);
    c.rcs.theta_max = angle_in(s.number("theta_max", config_detail::angle_out(c.rcs.theta_max, au)), au);
    c.rcs.phi_i = angle_in(s.number("phi_i", config_detail::angle_out(c.rcs.phi_i, au)), au);
    std::vector<double> phis;
    for (double p : c.rcs.phi_s) phis.push_back(config_detail::angle_out(p, au));
    phis = s.numbers("phi_s", phis);
    c.rcs.phi_s.clear();
    for (double p : phis) c.rcs.phi_s.push_back(angle_in(p, au));
    s.reject_unknown();
    if (!(c.rcs.step > 0.0)) throw ConfigError("rcs.grid_step", "must be positive");
    if (!(c.rcs.theta_max >= 0.0 && c.rcs.theta_max < 0.5 * std::numbers::pi))
      throw ConfigError("rcs.theta_max", "must lie in [0, 90) degrees");
  }

  if (const Json* j = r.find("sweep")) {
    ObjectReader s(*j, "sweep");
    SweepConfig sc;
    const std::string kind = s.string("kind", "distance");
    if (kind == "distance") {
      DistanceSweep d;
      d.zenith = angle_in(s.number("zenith", config_detail::angle_out(deg(30.0), au)), au);
      d.d_min = s.number("min_meters", 0.5);
      d.d_max = s.number("max_meters", 8.0);
      d.n_steps = s.integer("steps", 16);
      sc.plan.kind = d;
    } else if (kind == "angle") {
      AngleSweep a;
      a.distance = s.number("distance_meters", 0.5);
      a.z_min = angle_in(s.number("min_zenith", 0.0), au);
      a.z_max = angle_in(s.number("max_zenith", config_detail::angle_out(deg(60.0), au)), au);
      a.n_steps = s.integer("steps", 13);
      sc.plan.kind = a;
    } else {
      throw ConfigError("sweep.kind", "expected 'distance' or 'angle'");
    }
    sc.plan.azimuth = angle_in(s.number("azimuth", 0.0), au);
    sc.plan.summation = c.summation;
    if (const Json* m = s.find("models")) {
      if (!m->is_array() || m->empty()) throw ConfigError("sweep.models", "expected a non-empty array");
      for (std::size_t i = 0; i < m->size(); ++i)
        sc.entries.push_back(config_detail::parse_model_entry((*m)[i], "sweep.models[" + std::to_string(i) + "]"));
    } else {
      sc.entries = {{"ris", "ris", "ris_continuous"}, {"metal", "metal", "metal_rotated"}};
    }
    for (const auto& e : sc.entries) sc.plan.models.push_back(config_detail::to_model_spec(e, c.mu));
    s.reject_unknown();
    checked("sweep", [&] { sc.plan.validate(); });
    c.sweep = std::move(sc);
  }

  if (const Json* j = r.find("optimize")) {
    ObjectReader o(*j, "optimize");
    c.optimize.levels = o.integer("levels", c.optimize.levels);
    c.optimize.max_sweeps = o.integer("max_sweeps", c.optimize.max_sweeps);
    c.optimize.amplitude_table = o.numbers("amplitude_table", {});
    o.reject_unknown();
  }
  if (c.optimize.levels < 2) throw ConfigError("optimize.levels", "at least two levels are required");
  if (c.optimize.max_sweeps < 1) throw ConfigError("optimize.max_sweeps", "must be positive");
  if (!c.optimize.amplitude_table.empty()) {
    if (c.optimize.amplitude_table.size() != static_cast<std::size_t>(c.optimize.levels))
      throw ConfigError("optimize.amplitude_table", "needs one amplitude per level");
    for (double a : c.optimize.amplitude_table)
      if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("optimize.amplitude_table", "amplitudes must lie in [0, 1]");
  }

  if (const Json* j = r.find("ris_configuration")) {
    ObjectReader f(*j, "ris_configuration");
    FixedConfiguration fc;
    fc.levels = f.integer("levels", 2);
    for (double v : f.numbers("phase_levels", {})) {
      if (v != std::floor(v)) throw ConfigError("ris_configuration.phase_levels", "expected integer level indices");
      fc.phase_levels.push_back(static_cast<int>(v));
    }
    f.reject_unknown();
    if (fc.levels < 2) throw ConfigError("ris_configuration.levels", "at least two levels are required");
    if (fc.phase_levels.size() != c.surface.element_count())
      throw ConfigError("ris_configuration.phase_levels", "needs one level per element");
    for (int m : fc.phase_levels)
      if (m < 0 || m >= fc.levels) throw ConfigError("ris_configuration.phase_levels", "level index out of range");
    c.ris_configuration = std::move(fc);
  }

  if (const Json* j = r.find("oracle")) {
    ObjectReader o(*j, "oracle");
    const int nx = o.integer("nodes_x", 64);
    const int ny = o.integer("nodes_y", 64);
    if (nx < 4) throw ConfigError("oracle.nodes_x", "at least 4 nodes are required");
    if (ny < 4) throw ConfigError("oracle.nodes_y", "at least 4 nodes are required");
    c.oracle.quadrature.n_points_x = static_cast<std::size_t>(nx);
    c.oracle.quadrature.n_points_y = static_cast<std::size_t>(ny);
    const std::string rule = o.string("rule", "gauss_legendre");
    if (rule == "gauss_legendre")
      c.oracle.quadrature.rule = QuadratureRule::gauss_legendre;
    else if (rule == "midpoint")
      c.oracle.quadrature.rule = QuadratureRule::midpoint;
    else
      throw ConfigError("oracle.rule", "expected 'gauss_legendre' or 'midpoint'");
    c.oracle.grid_step = angle_in(o.number("grid_step", config_detail::angle_out(c.oracle.grid_step, au)), au);
    c.oracle.theta_max = angle_in(o.number("theta_max", config_detail::angle_out(c.oracle.theta_max, au)), au);
    c.oracle.cell_sizes_wavelengths = o.numbers("cell_sizes_wavelengths", c.oracle.cell_sizes_wavelengths);
    c.oracle.threshold = o.number("threshold", c.oracle.threshold);
    o.reject_unknown();
    if (!(c.oracle.grid_step > 0.0)) throw ConfigError("oracle.grid_step", "must be positive");
    if (!(c.oracle.theta_max >= 0.0 && c.oracle.theta_max < 0.5 * std::numbers::pi))
      throw ConfigError("oracle.theta_max", "must lie in [0, 90) degrees");
    if (c.oracle.cell_sizes_wavelengths.empty())
      throw ConfigError("oracle.cell_sizes_wavelengths", "needs at least one cell size");
    for (double f : c.oracle.cell_sizes_wavelengths)
      if (!(f > 0.0)) throw ConfigError("oracle.cell_sizes_wavelengths", "cell sizes must be positive");
    if (!(c.oracle.threshold > 0.0)) throw ConfigError("oracle.threshold", "must be positive");
  }

  r.reject_unknown();
  return c;
}

inline RunConfig parse_config_text(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(root);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

/// Fully resolved configuration, including defaults, in the same schema.
inline Json to_json(const RunConfig& c) {
  using config_detail::angle_out;
  const AngleUnit au = c.angle_unit;
  const auto vec = [](const Vec3& v) { return Json::array({v.x, v.y, v.z}); };
  const auto angles = [&](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(angle_out(x, au));
    return a;
  };

  Json j;
  j["angle_unit"] = au == AngleUnit::degrees ? "degrees" : "radians";
  j["propagation"] = {{"frequency_hz", c.frequency_hz},
                      {"beta0", c.propagation.beta0},
                      {"gamma", c.propagation.gamma},
                      {"tx_power_watts", c.propagation.p_t}};
  j["surface"] = {{"columns", c.surface.n_v},
                  {"rows", c.surface.n_h},
                  {"cell_width_meters", c.surface.d_v},
                  {"cell_length_meters", c.surface.d_h}};
  const char* orientation = c.scene.orientation == OrientationMode::identity   ? "identity"
                            : c.scene.orientation == OrientationMode::specular ? "specular"
                                                                               : "normal";
  j["scene"] = {{"tx_position_meters", vec(c.scene.tx_position)},
                {"rx_position_meters", vec(c.scene.rx_position)},
                {"orientation", orientation},
                {"normal", vec(c.scene.normal)}};
  j["diffraction"] = {{"mu", c.mu}};
  j["summation"] = c.summation == SummationMode::naive ? "naive" : "compensated";

  Json rcs;
  if (!c.rcs.angles.empty()) {
    Json list = Json::array();
    for (const auto& q : c.rcs.angles)
      list.push_back(Json::array(
          {angle_out(q.theta_i, au), angle_out(q.phi_i, au), angle_out(q.theta_s, au), angle_out(q.phi_s, au)}));
    rcs["angles"] = list;
  }
  rcs["grid_step"] = angle_out(c.rcs.step, au);
  rcs["theta_max"] = angle_out(c.rcs.theta_max, au);
  rcs["phi_i"] = angle_out(c.rcs.phi_i, au);
  rcs["phi_s"] = angles(c.rcs.phi_s);
  j["rcs"] = rcs;

  if (c.sweep) {
    Json s;
    if (const auto* d = std::get_if<DistanceSweep>(&c.sweep->plan.kind)) {
      s["kind"] = "distance";
      s["zenith"] = angle_out(d->zenith, au);
      s["min_meters"] = d->d_min;
      s["max_meters"] = d->d_max;
      s["steps"] = d->n_steps;
    } else {
      const auto& a = std::get<AngleSweep>(c.sweep->plan.kind);
      s["kind"] = "angle";
      s["distance_meters"] = a.distance;
      s["min_zenith"] = angle_out(a.z_min, au);
      s["max_zenith"] = angle_out(a.z_max, au);
      s["steps"] = a.n_steps;
    }
    s["azimuth"] = angle_out(c.sweep->plan.azimuth, au);
    Json models = Json::array();
    for (const auto& e : c.sweep->entries)
      models.push_back({{"label", e.label},
                        {"rcs_model", e.rcs_model},
                        {"policy", e.policy},
                        {"levels", e.levels},
                        {"max_sweeps", e.max_sweeps}});
    s["models"] = models;
    j["sweep"] = s;
  }

  j["optimize"] = {{"levels", c.optimize.levels},
                   {"max_sweeps", c.optimize.max_sweeps},
                   {"amplitude_table", c.optimize.amplitude_table}};
  if (c.ris_configuration)
    j["ris_configuration"] = {{"levels", c.ris_configuration->levels},
                              {"phase_levels", c.ris_configuration->phase_levels}};
  j["oracle"] = {{"nodes_x", c.oracle.quadrature.n_points_x},
                 {"nodes_y", c.oracle.quadrature.n_points_y},
                 {"rule", c.oracle.quadrature.rule == QuadratureRule::gauss_legendre ? "gauss_legendre" : "midpoint"},
                 {"grid_step", angle_out(c.oracle.grid_step, au)},
                 {"theta_max", angle_out(c.oracle.theta_max, au)},
                 {"cell_sizes_wavelengths", c.oracle.cell_sizes_wavelengths},
                 {"threshold", c.oracle.threshold}};
  return j;
}

}  // namespace rissim
