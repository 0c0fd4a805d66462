// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "rissim/errors.hpp"

namespace rissim {

enum class QuadratureRule { gauss_legendre, midpoint };

struct QuadratureNodes {
  std::vector<double> points;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]. Roots by Newton iteration on the
/// three-term Legendre recurrence.
inline QuadratureNodes gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw InvalidArgument("quadrature needs at least one node");
  QuadratureNodes q{std::vector<double>(n), std::vector<double>(n)};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t m = (n + 1) / 2;
  const auto nd = static_cast<double>(n);
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const auto jd = static_cast<double>(j);
        p1 = ((2.0 * jd + 1.0) * z * p2 - jd * p3) / (jd + 1.0);
      }
      dp = nd * (z * p1 - p2) / (z * z - 1.0);
      const double z_prev = z;
      z = z_prev - p1 / dp;
      if (std::abs(z - z_prev) <= 1e-15) {
        // One more derivative evaluation at the converged root.
        p1 = 1.0;
        p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double p3 = p2;
          p2 = p1;
          const auto jd = static_cast<double>(j);
          p1 = ((2.0 * jd + 1.0) * z * p2 - jd * p3) / (jd + 1.0);
        }
        dp = nd * (z * p1 - p2) / (z * z - 1.0);
        break;
      }
    }
    q.points[i] = mid - half * z;
    q.points[n - 1 - i] = mid + half * z;
    q.weights[i] = 2.0 * half / ((1.0 - z * z) * dp * dp);
    q.weights[n - 1 - i] = q.weights[i];
  }
  return q;
}

inline QuadratureNodes midpoint_rule(std::size_t n, double a, double b) {
  if (n == 0) throw InvalidArgument("quadrature needs at least one node");
  QuadratureNodes q{std::vector<double>(n), std::vector<double>(n)};
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.points[i] = a + (static_cast<double>(i) + 0.5) * h;
    q.weights[i] = h;
  }
  return q;
}

inline QuadratureNodes make_nodes(QuadratureRule rule, std::size_t n, double a, double b) {
  return rule == QuadratureRule::gauss_legendre ? gauss_legendre(n, a, b) : midpoint_rule(n, a, b);
}

}  // namespace rissim
