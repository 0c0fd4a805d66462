// SPDX-License-Identifier: Apache-2.0
//
// Coherent aggregation of per-element contributions into received signal and
// power, and phase-configuration optimizers for the RIS.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rissim/channel.hpp"
#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"
#include "rissim/scattering.hpp"
#include "rissim/summation.hpp"

namespace rissim {

struct LinkModel {
  Scene scene;
  PropagationParams params;
  RcsModel model = MetalModel{};
  RisConfiguration config;
  SummationMode summation = SummationMode::naive;

  /// Metal plate: every R_n = 1.
  static LinkModel metal(const Scene& scene, const PropagationParams& params) {
    return {scene, params, MetalModel{}, RisConfiguration::uniform(scene.surface.element_count())};
  }

  void validate() const {
    scene.validate();
    params.validate();
    config.validate(scene.surface.element_count());
  }
};

namespace detail {

inline void require_finite(const Complex& z, std::size_t index, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NonFiniteValue(std::string("non-finite ") + what + " at element " + std::to_string(index));
}

}  // namespace detail

/// Configuration-independent terms t_n = h_n f_n g_n, in element order.
inline std::vector<Complex> element_terms(const Scene& scene, const PropagationParams& params, const RcsModel& model) {
  scene.validate();
  params.validate();
  const CellDims dims(scene.surface, params.lambda);
  const Vec3 local_tx = scene.orientation.to_local(scene.tx_pos);
  const Vec3 local_rx = scene.orientation.to_local(scene.rx_pos);
  const std::size_t count = scene.surface.element_count();
  std::vector<Complex> terms(count);
  for (std::size_t n = 0; n < count; ++n) {
    const Vec3 local = element_local_position(scene.surface, n);
    const Vec3 world = scene.orientation.to_world(local);
    const Complex h = channel_coefficient(scene.tx_pos, world, params);
    const Complex g = channel_coefficient(scene.rx_pos, world, params);
    const double f = bsd(model, angles_at(local_tx, local_rx, local), dims);
    detail::require_finite(h, n, "Tx channel coefficient");
    detail::require_finite(g, n, "Rx channel coefficient");
    detail::require_finite(f, n, "scattering amplitude");
    terms[n] = h * f * g;
  }
  return terms;
}

inline std::vector<Complex> element_terms(const LinkModel& link) {
  return element_terms(link.scene, link.params, link.model);
}

/// Sum of t_n R_n for a configuration.
inline Complex configured_sum(std::span<const Complex> terms, const RisConfiguration& config,
                              SummationMode mode = SummationMode::naive) {
  std::vector<Complex> weighted(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) weighted[n] = terms[n] * config.responses[n].value();
  return sum_terms<double>(weighted, mode);
}

inline Complex received_signal(const LinkModel& link) {
  link.validate();
  return configured_sum(element_terms(link), link.config, link.summation);
}

struct PowerResult {
  double p_r = 0.0;  // [W]
  Complex complex_sum;
  std::optional<std::vector<Complex>> per_element_terms;

  [[nodiscard]] double dbm() const noexcept { return watts_to_dbm(p_r); }

  static double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts * 1000.0); }
};

/// P_r = (P_t lambda^2 / 4 pi) |sum|^2.
inline double power_from_sum(const PropagationParams& params, const Complex& sum) noexcept {
  return params.p_t * params.lambda * params.lambda / (4.0 * std::numbers::pi) * std::norm(sum);
}

inline PowerResult received_power(const LinkModel& link, bool keep_terms = false) {
  link.validate();
  std::vector<Complex> terms = element_terms(link);
  PowerResult out;
  out.complex_sum = configured_sum(terms, link.config, link.summation);
  out.p_r = power_from_sum(link.params, out.complex_sum);
  if (!std::isfinite(out.p_r)) throw NonFiniteValue("non-finite received power");
  if (keep_terms) {
    for (std::size_t n = 0; n < terms.size(); ++n) terms[n] *= link.config.responses[n].value();
    out.per_element_terms = std::move(terms);
  }
  return out;
}

/// Conjugate phase alignment: each t_n R_n becomes real and non-negative.
inline RisConfiguration optimize_phases_continuous(std::span<const Complex> terms,
                                                   const std::vector<double>& amplitudes = {}) {
  RisConfiguration c;
  c.responses.reserve(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const double alpha = amplitudes.empty() ? 1.0 : amplitudes[n];
    c.responses.push_back(element_response(wrap_phase(std::arg(terms[n])), alpha));
  }
  return c;
}

inline RisConfiguration optimize_phases_continuous(const LinkModel& link) {
  link.validate();
  std::vector<double> amplitudes;
  amplitudes.reserve(link.config.responses.size());
  for (const auto& r : link.config.responses) amplitudes.push_back(r.alpha);
  return optimize_phases_continuous(element_terms(link), amplitudes);
}

/// Common phase used when rounding the continuous optimum to levels. The
/// continuous optimum is only defined up to a common phase; `best_common_phase`
/// picks the one whose rounding gives the largest |sum| (the global optimum for
/// unit amplitudes), `zero` rounds arg(t_n) as is.
enum class StartReference { best_common_phase, zero };

struct GreedyOptions {
  int levels = 2;
  int max_sweeps = 10;
  /// Optional amplitude per level (size = levels); empty means alpha = 1.
  std::vector<double> amplitudes;
  StartReference start = StartReference::best_common_phase;
};

struct GreedyResult {
  RisConfiguration config;
  std::vector<int> quantized_start_levels;
  /// |sum| for the quantized continuous solution.
  double quantized_start_magnitude = 0.0;
  /// |sum| with every element at level 0.
  double uniform_magnitude = 0.0;
  /// |sum| at the chosen start, then after every completed sweep.
  std::vector<double> magnitude_history;
  int sweeps = 0;
  bool converged = false;
};

/// Nearest-level rounding of arg(t_n) - psi, for the common phase psi chosen by
/// `reference`. Rounding only changes at one psi per element within one level
/// step, so the best psi is found with a sorted sweep over those breakpoints.
inline std::vector<int> quantized_start(std::span<const Complex> terms, int levels,
                                        const std::vector<Complex>& level_response, StartReference reference) {
  const double step = 2.0 * std::numbers::pi / levels;
  std::vector<double> u(terms.size());
  std::vector<int> current(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    u[n] = wrap_phase(std::arg(terms[n])) / step;
    current[n] = nearest_level(std::arg(terms[n]), levels);
  }
  if (reference == StartReference::zero || terms.empty()) return current;

  // Element n moves down one level when psi / step passes frac(u_n - 1/2).
  std::vector<std::pair<double, std::size_t>> breakpoints(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const double c = u[n] - 0.5;
    breakpoints[n] = {c - std::floor(c), n};
  }
  std::sort(breakpoints.begin(), breakpoints.end());

  Complex total{0.0, 0.0};
  for (std::size_t n = 0; n < terms.size(); ++n) total += terms[n] * level_response[static_cast<std::size_t>(current[n])];
  std::vector<int> best = current;
  double best_mag = std::abs(total);
  for (const auto& [c, n] : breakpoints) {
    const int next = (current[n] + levels - 1) % levels;
    total += terms[n] * (level_response[static_cast<std::size_t>(next)] - level_response[static_cast<std::size_t>(current[n])]);
    current[n] = next;
    if (const double mag = std::abs(total); mag > best_mag * (1.0 + 1e-12)) {
      best_mag = mag;
      best = current;
    }
  }
  return best;
}

/// Greedy coordinate descent over discrete phase levels.
///
/// Starts from the better of the nearest-level rounding of the continuous
/// optimum (see StartReference) and the uniform configuration, then visits elements in index order
/// setting each to the level that maximizes |sum|. Stops after a sweep with no
/// change or after `max_sweeps` sweeps. |sum| never decreases.
inline GreedyResult optimize_phases_discrete(std::span<const Complex> terms, const GreedyOptions& options) {
  const int levels = options.levels;
  if (levels < 2) throw InvalidArgument("discrete optimization needs at least two levels");
  if (options.max_sweeps < 1) throw InvalidArgument("max_sweeps must be positive");
  if (!options.amplitudes.empty() && options.amplitudes.size() != static_cast<std::size_t>(levels))
    throw InvalidArgument("amplitude table size must equal the level count");

  std::vector<Complex> level_response(static_cast<std::size_t>(levels));
  for (int m = 0; m < levels; ++m) {
    const double alpha = options.amplitudes.empty() ? 1.0 : options.amplitudes[static_cast<std::size_t>(m)];
    level_response[static_cast<std::size_t>(m)] = element_response(level_phase(m, levels), alpha).value();
  }

  const auto magnitude_of = [&](const std::vector<int>& lv) {
    Complex acc{0.0, 0.0};
    for (std::size_t n = 0; n < terms.size(); ++n) acc += terms[n] * level_response[static_cast<std::size_t>(lv[n])];
    return std::abs(acc);
  };

  const std::vector<int> quantized = quantized_start(terms, levels, level_response, options.start);
  const std::vector<int> uniform(terms.size(), 0);

  GreedyResult result;
  result.quantized_start_levels = quantized;
  result.quantized_start_magnitude = magnitude_of(quantized);
  result.uniform_magnitude = magnitude_of(uniform);
  // Ties go to the uniform configuration; the quantized start must win beyond rounding noise.
  const bool use_start = result.quantized_start_magnitude > result.uniform_magnitude * (1.0 + 1e-12);
  std::vector<int> current = use_start ? quantized : uniform;
  double current_magnitude = use_start ? result.quantized_start_magnitude : result.uniform_magnitude;
  result.magnitude_history.push_back(current_magnitude);

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    Complex total{0.0, 0.0};
    for (std::size_t n = 0; n < terms.size(); ++n) total += terms[n] * level_response[static_cast<std::size_t>(current[n])];
    bool changed = false;
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const Complex own = terms[n] * level_response[static_cast<std::size_t>(current[n])];
      const Complex rest = total - own;
      int best = current[n];
      double best_mag = std::abs(total);
      for (int m = 0; m < levels; ++m) {
        if (m == current[n]) continue;
        const double mag = std::abs(rest + terms[n] * level_response[static_cast<std::size_t>(m)]);
        // Strict improvement beyond rounding noise keeps the sweep monotone and finite.
        if (mag > best_mag * (1.0 + 1e-12)) {
          best = m;
          best_mag = mag;
        }
      }
      if (best != current[n]) {
        current[n] = best;
        total = rest + terms[n] * level_response[static_cast<std::size_t>(best)];
        changed = true;
      }
    }
    ++result.sweeps;
    current_magnitude = magnitude_of(current);
    result.magnitude_history.push_back(current_magnitude);
    if (!changed) {
      result.converged = true;
      break;
    }
  }

  result.config = RisConfiguration::discrete(current, levels, options.amplitudes);
  return result;
}

inline GreedyResult optimize_phases_discrete(const LinkModel& link, const GreedyOptions& options) {
  link.validate();
  return optimize_phases_discrete(element_terms(link), options);
}

}  // namespace rissim
