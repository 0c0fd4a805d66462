// SPDX-License-Identifier: Apache-2.0
//
// Sweep drivers comparing a phase-configured RIS with a rotated metal plate,
// the near/far-field boundary, crossover search and plate-rotation checks.
//
// Symmetric placement: Tx and Rx sit at the same distance and zenith from the
// surface center, Tx at azimuth (azimuth + pi) and Rx at `azimuth`. The RIS is
// never rotated; the metal plate is rotated to the specular orientation.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "rissim/channel.hpp"
#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"
#include "rissim/link.hpp"
#include "rissim/parallel.hpp"
#include "rissim/scattering.hpp"

namespace rissim {

/// Rayleigh-type boundary 2 N_v N_h d_v d_h / lambda between array near and far field.
inline double far_field_boundary(const SurfaceSpec& spec, double lambda) {
  spec.validate();
  if (!(lambda > 0.0)) throw InvalidArgument("wavelength must be positive");
  return 2.0 * static_cast<double>(spec.element_count()) * spec.d_v * spec.d_h / lambda;
}

// Configuration policies applied at each sweep point.
struct MetalRotated {};
struct MetalFlat {};
struct RisOptimizedContinuous {};
struct RisOptimizedDiscrete {
  int levels = 2;
  int max_sweeps = 10;
};
struct RisUniform {};
using ConfigPolicy = std::variant<MetalRotated, MetalFlat, RisOptimizedContinuous, RisOptimizedDiscrete, RisUniform>;

struct ModelSpec {
  std::string label;
  RcsModel model;
  ConfigPolicy policy;
};

/// Tx at (distance, zenith, azimuth + pi), Rx at (distance, zenith, azimuth).
struct SymmetricPlacement {
  Vec3 tx;
  Vec3 rx;

  static SymmetricPlacement at(double distance, double zenith, double azimuth = 0.0) {
    return {polar_position(distance, zenith, azimuth + std::numbers::pi), polar_position(distance, zenith, azimuth)};
  }
};

/// Received power [W] for one model/policy at one Tx/Rx placement.
inline double evaluate_policy(const ModelSpec& spec, const SurfaceSpec& surface, const Vec3& tx, const Vec3& rx,
                              const PropagationParams& params, SummationMode summation = SummationMode::naive) {
  Scene scene{tx, rx, surface, SurfaceOrientation{}};
  if (std::holds_alternative<MetalRotated>(spec.policy)) scene.orientation = specular_orientation(tx, rx);

  const std::vector<Complex> terms = element_terms(scene, params, spec.model);
  const RisConfiguration config = std::visit(
      [&](const auto& p) -> RisConfiguration {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RisOptimizedContinuous>) {
          return optimize_phases_continuous(terms);
        } else if constexpr (std::is_same_v<P, RisOptimizedDiscrete>) {
          return optimize_phases_discrete(terms, GreedyOptions{p.levels, p.max_sweeps, {}}).config;
        } else {
          return RisConfiguration::uniform(terms.size());
        }
      },
      spec.policy);
  return power_from_sum(params, configured_sum(terms, config, summation));
}

struct DistanceSweep {
  double zenith = 0.0;  // [rad]
  double d_min = 0.5;   // [m]
  double d_max = 8.0;   // [m]
  int n_steps = 16;
};

struct AngleSweep {
  double distance = 0.5;  // [m]
  double z_min = 0.0;     // [rad]
  double z_max = 1.0;     // [rad]
  int n_steps = 13;
};

struct SweepPlan {
  std::variant<DistanceSweep, AngleSweep> kind;
  std::vector<ModelSpec> models;
  double azimuth = 0.0;
  SummationMode summation = SummationMode::naive;

  void validate() const {
    if (models.empty()) throw InvalidArgument("sweep plan needs at least one model");
    if (const auto* d = std::get_if<DistanceSweep>(&kind)) {
      if (!(d->d_min > 0.0) || !(d->d_max >= d->d_min)) throw InvalidArgument("distance range must satisfy 0 < min <= max");
      if (d->n_steps < 2) throw InvalidArgument("a sweep needs at least two steps");
      if (!(d->zenith >= 0.0 && d->zenith < 0.5 * std::numbers::pi)) throw InvalidArgument("zenith must lie in [0, pi/2)");
    } else {
      const auto& a = std::get<AngleSweep>(kind);
      if (!(a.distance > 0.0)) throw InvalidArgument("distance must be positive");
      if (a.n_steps < 2) throw InvalidArgument("a sweep needs at least two steps");
      if (!(a.z_min >= 0.0 && a.z_max >= a.z_min && a.z_max < 0.5 * std::numbers::pi))
        throw InvalidArgument("zenith range must satisfy 0 <= min <= max < pi/2");
    }
    for (std::size_t i = 0; i < models.size(); ++i)
      for (std::size_t j = i + 1; j < models.size(); ++j)
        if (models[i].label == models[j].label) throw InvalidArgument("duplicate model label '" + models[i].label + "'");
  }

  /// Independent-variable samples, ascending, endpoints included.
  [[nodiscard]] std::vector<double> x_values() const {
    const auto linspace = [](double a, double b, int n) {
      std::vector<double> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
      return v;
    };
    if (const auto* d = std::get_if<DistanceSweep>(&kind)) return linspace(d->d_min, d->d_max, d->n_steps);
    const auto& a = std::get<AngleSweep>(kind);
    return linspace(a.z_min, a.z_max, a.n_steps);
  }
};

struct SweepRow {
  double x = 0.0;
  std::vector<double> p_watts;  // one entry per model, plan order
};

struct SweepResult {
  std::string x_name;  // "distance_m" or "zenith_rad"
  std::vector<std::string> labels;
  std::vector<SweepRow> rows;
};

/// Scene violation at a particular sweep point.
class SweepPointError : public SceneError {
public:
  SweepPointError(std::size_t index, const std::string& what)
      : SceneError("sweep point " + std::to_string(index) + ": " + what), index_(index) {}
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

inline SweepResult run_sweep(const SweepPlan& plan, const SurfaceSpec& surface, const PropagationParams& params,
                             unsigned threads = 1) {
  plan.validate();
  surface.validate();
  params.validate();
  const bool by_distance = std::holds_alternative<DistanceSweep>(plan.kind);
  const std::vector<double> xs = plan.x_values();

  SweepResult result;
  result.x_name = by_distance ? "distance_m" : "zenith_rad";
  for (const auto& m : plan.models) result.labels.push_back(m.label);
  result.rows.resize(xs.size());

  parallel_for(xs.size(), threads, [&](std::size_t i) {
    double distance = 0.0, zenith = 0.0;
    if (by_distance) {
      distance = xs[i];
      zenith = std::get<DistanceSweep>(plan.kind).zenith;
    } else {
      distance = std::get<AngleSweep>(plan.kind).distance;
      zenith = xs[i];
    }
    const auto place = SymmetricPlacement::at(distance, zenith, plan.azimuth);
    SweepRow row{xs[i], {}};
    try {
      for (const auto& m : plan.models)
        row.p_watts.push_back(evaluate_policy(m, surface, place.tx, place.rx, params, plan.summation));
    } catch (const SceneError& e) {
      throw SweepPointError(i, e.what());
    }
    result.rows[i] = std::move(row);
  });
  return result;
}

inline SweepResult run_distance_sweep(const SweepPlan& plan, const SurfaceSpec& surface,
                                      const PropagationParams& params, unsigned threads = 1) {
  if (!std::holds_alternative<DistanceSweep>(plan.kind)) throw InvalidArgument("plan is not a distance sweep");
  return run_sweep(plan, surface, params, threads);
}

inline SweepResult run_angle_sweep(const SweepPlan& plan, const SurfaceSpec& surface, const PropagationParams& params,
                                   unsigned threads = 1) {
  if (!std::holds_alternative<AngleSweep>(plan.kind)) throw InvalidArgument("plan is not an angle sweep");
  return run_sweep(plan, surface, params, threads);
}

/// Gap in dB between the continuously optimized RIS and the specular metal plate
/// at a symmetric placement.
inline double ris_metal_gap_db(const SurfaceSpec& surface, const PropagationParams& params, double mu,
                               double distance, double zenith, double azimuth = 0.0) {
  const auto place = SymmetricPlacement::at(distance, zenith, azimuth);
  const ModelSpec ris{"ris", RisModel{DiffractionParams(mu)}, RisOptimizedContinuous{}};
  const ModelSpec metal{"metal", MetalModel{}, MetalRotated{}};
  const double p_ris = evaluate_policy(ris, surface, place.tx, place.rx, params);
  const double p_metal = evaluate_policy(metal, surface, place.tx, place.rx, params);
  return 10.0 * std::log10(p_ris / p_metal);
}

/// Bisection for a sign change of `f` on [a, b]; nullopt when f(a), f(b) share a sign.
inline std::optional<double> bisect(const std::function<double(double)>& f, double a, double b, double tolerance,
                                    int max_iterations = 60) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) return std::nullopt;
  for (int it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

/// Distance where the RIS and metal received powers are equal at a fixed zenith.
inline std::optional<double> crossover_distance(const SurfaceSpec& surface, const PropagationParams& params, double mu,
                                                double zenith, double d_min, double d_max, double tolerance) {
  if (!(d_min > 0.0) || !(d_max > d_min)) throw InvalidArgument("crossover bracket must satisfy 0 < d_min < d_max");
  return bisect([&](double d) { return ris_metal_gap_db(surface, params, mu, d, zenith); }, d_min, d_max, tolerance);
}

/// First zenith in [z_min, z_max] where the metal plate catches up with the RIS.
/// The range is scanned with `scan_step`; the first interval whose gap goes from
/// positive to non-positive is refined by bisection.
inline std::optional<double> crossover_zenith(const SurfaceSpec& surface, const PropagationParams& params, double mu,
                                              double distance, double z_min, double z_max, double scan_step,
                                              double tolerance) {
  if (!(scan_step > 0.0) || !(z_max > z_min)) throw InvalidArgument("invalid zenith scan");
  const auto gap = [&](double z) { return ris_metal_gap_db(surface, params, mu, distance, z); };
  const auto steps = static_cast<int>(std::ceil((z_max - z_min) / scan_step - 1e-9));
  double prev_z = z_min;
  double prev_gap = gap(prev_z);
  for (int i = 1; i <= steps; ++i) {
    const double z = std::min(z_max, z_min + i * scan_step);
    const double g = gap(z);
    if (prev_gap > 0.0 && g <= 0.0) return bisect(gap, prev_z, z, tolerance);
    prev_z = z;
    prev_gap = g;
  }
  return std::nullopt;
}

/// Plate normal parameterized by two tilts: n = Ry(tilt_y) Rx(tilt_x) z.
inline Vec3 tilted_normal(double tilt_x, double tilt_y) noexcept {
  return {std::cos(tilt_x) * std::sin(tilt_y), -std::sin(tilt_x), std::cos(tilt_x) * std::cos(tilt_y)};
}

struct Tilts {
  double x;
  double y;
};

inline Tilts tilts_of(const Vec3& normal) {
  const Vec3 n = unit(normal);
  return {-std::asin(std::clamp(n.y, -1.0, 1.0)), std::atan2(n.x, n.z)};
}

struct RotationCheck {
  double resolution = 0.0;
  std::vector<double> tilt_grid;       // shared by both axes
  std::vector<double> power_map;       // row = tilt_x index, column = tilt_y index; 0 where a side is behind the plate
  Tilts best{};
  double best_power = 0.0;
  Tilts specular{};
  double specular_power = 0.0;
  bool specular_within_one_cell = false;
  /// Specular power is at least the smallest power in the 3x3 grid neighborhood of the argmax.
  bool specular_power_consistent = false;
};

/// Exhaustive two-axis tilt search for the metal plate orientation that
/// maximizes received power, compared against the specular orientation.
inline RotationCheck verify_plate_rotation(const Vec3& tx, const Vec3& rx, const SurfaceSpec& surface,
                                           const PropagationParams& params, double resolution,
                                           double max_tilt = std::numbers::pi / 3.0, unsigned threads = 1) {
  if (!(resolution > 0.0) || !(max_tilt > 0.0)) throw InvalidArgument("invalid rotation grid");
  RotationCheck out;
  out.resolution = resolution;
  const auto half = static_cast<int>(std::floor(max_tilt / resolution + 1e-9));
  for (int i = -half; i <= half; ++i) out.tilt_grid.push_back(i * resolution);
  const std::size_t g = out.tilt_grid.size();
  out.power_map.assign(g * g, 0.0);

  const auto plate_power = [&](const SurfaceOrientation& orientation) {
    const Scene scene{tx, rx, surface, orientation};
    return received_power(LinkModel::metal(scene, params)).p_r;
  };

  parallel_for(g * g, threads, [&](std::size_t idx) {
    const SurfaceOrientation o = orientation_from_normal(tilted_normal(out.tilt_grid[idx / g], out.tilt_grid[idx % g]));
    try {
      out.power_map[idx] = plate_power(o);
    } catch (const FrontSideViolation&) {
      out.power_map[idx] = 0.0;
    }
  });

  const auto best_it = std::max_element(out.power_map.begin(), out.power_map.end());
  const auto best_idx = static_cast<std::size_t>(best_it - out.power_map.begin());
  const std::size_t bi = best_idx / g, bj = best_idx % g;
  out.best = {out.tilt_grid[bi], out.tilt_grid[bj]};
  out.best_power = *best_it;

  const SurfaceOrientation spec_o = specular_orientation(tx, rx);
  out.specular = tilts_of(spec_o.normal());
  out.specular_power = plate_power(spec_o);

  const double slack = resolution * (1.0 + 1e-9);
  out.specular_within_one_cell =
      std::abs(out.specular.x - out.best.x) <= slack && std::abs(out.specular.y - out.best.y) <= slack;

  double neighborhood_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = (bi == 0 ? 0 : bi - 1); i <= std::min(g - 1, bi + 1); ++i)
    for (std::size_t j = (bj == 0 ? 0 : bj - 1); j <= std::min(g - 1, bj + 1); ++j)
      neighborhood_min = std::min(neighborhood_min, out.power_map[i * g + j]);
  out.specular_power_consistent = out.specular_power >= neighborhood_min;
  return out;
}

/// Ratio of the strongest received power at off-target candidate positions
/// (farther than `exclusion_radius` from the intended receiver) to the power
/// at the intended receiver, for a fixed surface configuration.
inline double relative_side_lobe_level(const LinkModel& link, const std::vector<Vec3>& candidates,
                                       double exclusion_radius) {
  const double on_target = received_power(link).p_r;
  double off_target = 0.0;
  for (const Vec3& c : candidates) {
    if (norm(c - link.scene.rx_pos) <= exclusion_radius) continue;
    LinkModel probe = link;
    probe.scene.rx_pos = c;
    try {
      off_target = std::max(off_target, received_power(probe).p_r);
    } catch (const SceneError&) {
    }
  }
  return off_target / on_target;
}

}  // namespace rissim
