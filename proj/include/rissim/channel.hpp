// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"

namespace rissim {

using Complex = std::complex<double>;

inline constexpr double speed_of_light = 299'792'458.0;
inline constexpr double default_frequency_hz = 5.8e9;

struct PropagationParams {
  double lambda = speed_of_light / default_frequency_hz;  // [m]
  double beta0 = 1.0;                                      // reference gain
  double gamma = 2.0;                                      // path-loss exponent
  double p_t = 1.0;                                        // transmit power [W]

  void validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("wavelength must be positive");
    if (!(beta0 > 0.0) || !std::isfinite(beta0)) throw InvalidArgument("beta0 must be positive");
    if (!(gamma >= 1.0) || !std::isfinite(gamma)) throw InvalidArgument("path-loss exponent must be >= 1");
    if (!(p_t > 0.0) || !std::isfinite(p_t)) throw InvalidArgument("transmit power must be positive");
  }
};

/// Path-loss amplitude sqrt(beta0 cos(theta) / (4 pi d^gamma)). Directions behind
/// the antenna boresight (cos < 0) receive zero gain.
inline double path_loss_amplitude(double distance, double directivity, const PropagationParams& params) noexcept {
  const double c = std::max(0.0, std::cos(directivity));
  return std::sqrt(params.beta0 * c / (4.0 * std::numbers::pi * std::pow(distance, params.gamma)));
}

/// Channel between a link end (Tx or Rx) and one element centered at `element_pos`.
inline Complex channel_coefficient(const Vec3& end_pos, const Vec3& element_pos, const PropagationParams& params) {
  const double d = norm(end_pos - element_pos);
  if (!(d > 0.0)) throw ZeroDistance("link end coincides with an element");
  const double beta = path_loss_amplitude(d, directivity_angle(end_pos, element_pos), params);
  return std::polar(beta, -2.0 * std::numbers::pi * d / params.lambda);
}

/// Reconfigurable part R = alpha * exp(-j phi).
struct ElementResponse {
  double alpha = 1.0;
  double phi = 0.0;

  [[nodiscard]] Complex value() const noexcept { return std::polar(alpha, -phi); }
};

inline ElementResponse element_response(double phi, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw AmplitudeOutOfRange("element amplitude must lie in [0, 1]");
  return {alpha, phi};
}

struct ContinuousPhase {};
struct DiscretePhase {
  int levels = 2;
};
using Quantization = std::variant<ContinuousPhase, DiscretePhase>;

inline double wrap_phase(double phi) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

/// Phase of discrete level m out of L: 2 pi m / L.
inline double level_phase(int level, int levels) noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(level) / static_cast<double>(levels);
}

/// Nearest level index for a phase.
inline int nearest_level(double phi, int levels) noexcept {
  const double step = 2.0 * std::numbers::pi / levels;
  const auto m = static_cast<long>(std::lround(wrap_phase(phi) / step));
  return static_cast<int>(m % levels);
}

/// Per-element responses in row-major element order.
struct RisConfiguration {
  std::vector<ElementResponse> responses;
  Quantization quantization = ContinuousPhase{};
  /// Level index per element when the configuration is discrete.
  std::vector<int> levels;

  /// All elements at zero phase and unit amplitude; also the metal-plate response.
  static RisConfiguration uniform(std::size_t count) {
    RisConfiguration c;
    c.responses.assign(count, ElementResponse{});
    return c;
  }

  /// Discrete configuration from level indices. `amplitudes`, when given, maps level -> alpha.
  static RisConfiguration discrete(const std::vector<int>& level_indices, int levels,
                                   const std::vector<double>& amplitudes = {}) {
    if (levels < 2) throw InvalidArgument("a discrete configuration needs at least two levels");
    if (!amplitudes.empty() && amplitudes.size() != static_cast<std::size_t>(levels))
      throw InvalidArgument("amplitude table size must equal the level count");
    RisConfiguration c;
    c.quantization = DiscretePhase{levels};
    c.levels = level_indices;
    c.responses.reserve(level_indices.size());
    for (int m : level_indices) {
      if (m < 0 || m >= levels) throw InvalidArgument("level index out of range");
      const double alpha = amplitudes.empty() ? 1.0 : amplitudes[static_cast<std::size_t>(m)];
      c.responses.push_back(element_response(level_phase(m, levels), alpha));
    }
    return c;
  }

  void validate(std::size_t element_count) const {
    if (responses.size() != element_count)
      throw InvalidArgument("configuration length " + std::to_string(responses.size()) +
                            " does not match element count " + std::to_string(element_count));
    for (const auto& r : responses)
      if (!(r.alpha >= 0.0 && r.alpha <= 1.0)) throw AmplitudeOutOfRange("element amplitude must lie in [0, 1]");
    if (const auto* d = std::get_if<DiscretePhase>(&quantization)) {
      if (d->levels < 2) throw InvalidArgument("a discrete configuration needs at least two levels");
      for (const auto& r : responses) {
        const double on_lattice = level_phase(nearest_level(r.phi, d->levels), d->levels);
        const double diff = std::remainder(r.phi - on_lattice, 2.0 * std::numbers::pi);
        if (std::abs(diff) > 1e-12) throw InvalidArgument("phase is not on the discrete level lattice");
      }
    }
  }
};

}  // namespace rissim
