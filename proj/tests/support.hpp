// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "rissim/channel.hpp"
#include "rissim/geometry.hpp"

namespace rissim::testing {

inline double lambda0() { return speed_of_light / default_frequency_hz; }

inline PropagationParams default_params() {
  PropagationParams p;
  p.lambda = lambda0();
  return p;
}

inline SurfaceSpec half_wave_surface(int n_v, int n_h) { return {n_v, n_h, 0.5 * lambda0(), 0.5 * lambda0()}; }

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Uniformly random proper rotation from a random unit quaternion.
inline Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n, x /= n, y /= n, z /= n;
  Mat3 r;
  r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w),     2 * (x * z + y * w),
         2 * (x * y + z * w),     1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
         2 * (x * z - y * w),     2 * (y * z + x * w),     1 - 2 * (x * x + y * y)};
  return r;
}

// Point in front of the xOy plane at distance [r_min, r_max] and zenith below z_max.
inline Vec3 random_front_point(std::mt19937_64& rng, double r_min, double r_max, double z_max = 80.0) {
  std::uniform_real_distribution<double> r(r_min, r_max), z(0.0, deg(z_max)), a(-std::numbers::pi, std::numbers::pi);
  const double distance = r(rng);
  const double zenith = z(rng);
  return polar_position(distance, zenith, a(rng));
}

}  // namespace rissim::testing
