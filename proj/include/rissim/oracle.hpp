// SPDX-License-Identifier: Apache-2.0
//
// Physical-optics reference for the metal-cell RCS: the induced surface
// current 2 n x H_in is integrated numerically over the cell and the radiation
// integrals N_theta, N_phi are turned into an RCS. No closed-form sinc terms
// are used here.
//
// Normalization: currents are in units of 2 E0 / eta0, vector potentials in
// units of E0 / eta0. The observation distance cancels analytically:
// |E_s| r / E0 = k |N| / (4 pi), sigma = 4 pi (|E_s| r / E0)^2.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"
#include "rissim/parallel.hpp"
#include "rissim/quadrature.hpp"
#include "rissim/scattering.hpp"

namespace rissim {

struct QuadratureSpec {
  std::size_t n_points_x = 64;
  std::size_t n_points_y = 64;
  QuadratureRule rule = QuadratureRule::gauss_legendre;

  void validate() const {
    if (n_points_x < 4 || n_points_y < 4) throw InvalidArgument("quadrature needs at least 4 nodes per axis");
  }
};

/// Plane-wave phase of the incident field on the cell (z = 0).
inline std::complex<double> incident_field_phase(double theta_i, double phi_i, double x, double y, double k) {
  const double s = std::sin(theta_i);
  return std::polar(1.0, -k * (s * std::cos(phi_i) * x + s * std::sin(phi_i) * y));
}

/// x-directed physical-optics current, normalized by 2 E0 / eta0.
inline std::complex<double> surface_current_amplitude(double theta_i, double phi_i, double x, double y, double k) {
  return std::cos(theta_i) * incident_field_phase(theta_i, phi_i, x, y, k);
}

/// Radiation-integral phase towards the scattered direction.
inline std::complex<double> scattered_kernel(double theta_s, double phi_s, double x, double y, double k) {
  const double s = std::sin(theta_s);
  return std::polar(1.0, -k * (s * std::cos(phi_s) * x + s * std::sin(phi_s) * y));
}

struct VectorPotentials {
  std::complex<double> n_theta;
  std::complex<double> n_phi;
};

/// Quadrature over one d_v x d_h cell, with nodes prepared once for repeated
/// evaluation over many angle quads.
class PhysicalOpticsOracle {
public:
  PhysicalOpticsOracle(const CellDims& dims, const QuadratureSpec& quad) : dims_(dims), quad_(quad) {
    quad.validate();
    x_ = make_nodes(quad.rule, quad.n_points_x, -0.5 * dims.d_v(), 0.5 * dims.d_v());
    y_ = make_nodes(quad.rule, quad.n_points_y, -0.5 * dims.d_h(), 0.5 * dims.d_h());
    cx_re_.resize(x_.points.size());
    cx_im_.resize(x_.points.size());
    cy_re_.resize(y_.points.size());
    cy_im_.resize(y_.points.size());
  }

  [[nodiscard]] const CellDims& dims() const noexcept { return dims_; }
  [[nodiscard]] const QuadratureSpec& spec() const noexcept { return quad_; }

  /// Throws QuadratureUnderresolved when the integrand phase advances by more
  /// than pi/2 over one quadrature interval along either axis.
  void check_resolution(const AngleQuad& q) const {
    const double k = dims_.k();
    const double si = std::sin(q.theta_i), ss = std::sin(q.theta_s);
    const double slope_x = k * std::abs(si * std::cos(q.phi_i) + ss * std::cos(q.phi_s));
    const double slope_y = k * std::abs(si * std::sin(q.phi_i) + ss * std::sin(q.phi_s));
    const double step_x = dims_.d_v() / static_cast<double>(quad_.n_points_x);
    const double step_y = dims_.d_h() / static_cast<double>(quad_.n_points_y);
    if (slope_x * step_x > 0.5 * std::numbers::pi || slope_y * step_y > 0.5 * std::numbers::pi)
      throw QuadratureUnderresolved("phase variation per quadrature interval exceeds pi/2");
  }

  /// Integral of J(x', y') K(x', y') over the cell [m^2].
  /// The integrand at node (j, l) is w_j w_l J(x_j, y_l) K(x_j, y_l); the
  /// plane-wave exponentials are evaluated per axis and multiplied per node.
  std::complex<double> current_moment(const AngleQuad& q) {
    check_resolution(q);
    const double k = dims_.k();
    const double si = std::sin(q.theta_i), ss = std::sin(q.theta_s);
    const double ux_i = si * std::cos(q.phi_i), uy_i = si * std::sin(q.phi_i);
    const double ux_s = ss * std::cos(q.phi_s), uy_s = ss * std::sin(q.phi_s);
    for (std::size_t j = 0; j < x_.points.size(); ++j) {
      const double x = x_.points[j];
      // J * K phase along x: exp(-jk ux_i x) exp(-jk ux_s x).
      const auto c = std::polar(x_.weights[j], -k * (ux_i + ux_s) * x);
      cx_re_[j] = c.real();
      cx_im_[j] = c.imag();
    }
    for (std::size_t l = 0; l < y_.points.size(); ++l) {
      const double y = y_.points[l];
      const auto c = std::polar(y_.weights[l], -k * (uy_i + uy_s) * y);
      cy_re_[l] = c.real();
      cy_im_[l] = c.imag();
    }
    // Four interleaved partial sums per row keep the FP pipeline busy.
    const std::size_t ny = cy_re_.size();
    const std::size_t ny4 = ny - ny % 4;
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < cx_re_.size(); ++j) {
      const double ar = cx_re_[j], ai = cx_im_[j];
      double pr[4] = {0.0, 0.0, 0.0, 0.0};
      double pi[4] = {0.0, 0.0, 0.0, 0.0};
      for (std::size_t l = 0; l < ny4; l += 4)
        for (std::size_t u = 0; u < 4; ++u) {
          pr[u] += ar * cy_re_[l + u] - ai * cy_im_[l + u];
          pi[u] += ar * cy_im_[l + u] + ai * cy_re_[l + u];
        }
      for (std::size_t l = ny4; l < ny; ++l) {
        pr[0] += ar * cy_re_[l] - ai * cy_im_[l];
        pi[0] += ar * cy_im_[l] + ai * cy_re_[l];
      }
      re += (pr[0] + pr[1]) + (pr[2] + pr[3]);
      im += (pi[0] + pi[1]) + (pi[2] + pi[3]);
    }
    return std::cos(q.theta_i) * std::complex<double>(re, im);
  }

  VectorPotentials vector_potentials(const AngleQuad& q) {
    // N = 2 * integral of the normalized current against the angular projection.
    const std::complex<double> moment = 2.0 * current_moment(q);
    return {moment * (std::cos(q.theta_s) * std::cos(q.phi_s)), moment * (-std::sin(q.phi_s))};
  }

  double rcs(const AngleQuad& q) {
    const VectorPotentials n = vector_potentials(q);
    const double k = dims_.k();
    const double e_theta = k * std::abs(n.n_theta) / (4.0 * std::numbers::pi);
    const double e_phi = k * std::abs(n.n_phi) / (4.0 * std::numbers::pi);
    return 4.0 * std::numbers::pi * (e_theta * e_theta + e_phi * e_phi);
  }

private:
  CellDims dims_;
  QuadratureSpec quad_;
  QuadratureNodes x_;
  QuadratureNodes y_;
  std::vector<double> cx_re_, cx_im_, cy_re_, cy_im_;
};

inline VectorPotentials vector_potentials(const AngleQuad& q, const CellDims& dims, const QuadratureSpec& quad) {
  PhysicalOpticsOracle oracle(dims, quad);
  return oracle.vector_potentials(q);
}

inline double rcs_po_oracle(const AngleQuad& q, const CellDims& dims, const QuadratureSpec& quad) {
  PhysicalOpticsOracle oracle(dims, quad);
  return oracle.rcs(q);
}

/// Regular angle grid: theta_i, theta_s in [0, theta_max] and phi_i, phi_s in
/// [-pi, pi), all with spacing `step`.
struct AngleGrid {
  double step = 5.0 * std::numbers::pi / 180.0;
  double theta_max = 85.0 * std::numbers::pi / 180.0;

  [[nodiscard]] std::vector<double> thetas() const {
    std::vector<double> v;
    for (int i = 0; i * step <= theta_max * (1.0 + 1e-12); ++i) v.push_back(i * step);
    return v;
  }

  [[nodiscard]] std::vector<double> phis() const {
    std::vector<double> v;
    for (int i = 0; -std::numbers::pi + i * step < std::numbers::pi * (1.0 - 1e-12); ++i)
      v.push_back(-std::numbers::pi + i * step);
    return v;
  }
};

struct OracleComparison {
  double max_relative_error = 0.0;
  double mean_relative_error = 0.0;
  std::size_t samples = 0;
  AngleQuad worst{};
};

/// Relative error of the quadrature RCS against a closed-form value. Exact
/// nulls make the plain relative error 0/0, so the denominator is floored at
/// `null_floor` times the boresight RCS of the cell.
inline double oracle_relative_error(double oracle, double closed_form, double boresight, double null_floor = 1e-10) {
  return std::abs(oracle - closed_form) / std::max(closed_form, null_floor * boresight);
}

/// Runs the quadrature oracle against `closed_form(q, dims)` over every quad of
/// the grid. The reduction is ordered by theta_i index, so results do not
/// depend on the thread count.
template <typename ClosedForm>
OracleComparison compare_oracle_grid(const CellDims& dims, const QuadratureSpec& quad, const AngleGrid& grid,
                                     ClosedForm&& closed_form, unsigned threads = 1) {
  const std::vector<double> thetas = grid.thetas();
  const std::vector<double> phis = grid.phis();
  const double boresight = closed_form(AngleQuad{}, dims);

  struct Partial {
    double max_err = 0.0;
    double sum_err = 0.0;
    std::size_t count = 0;
    AngleQuad worst{};
  };
  std::vector<Partial> partials(thetas.size());

  parallel_for(thetas.size(), threads, [&](std::size_t i) {
    PhysicalOpticsOracle oracle(dims, quad);
    Partial& part = partials[i];
    for (double phi_i : phis)
      for (double theta_s : thetas)
        for (double phi_s : phis) {
          const AngleQuad q{thetas[i], phi_i, theta_s, phi_s};
          const double err = oracle_relative_error(oracle.rcs(q), closed_form(q, dims), boresight);
          part.sum_err += err;
          ++part.count;
          if (err > part.max_err) {
            part.max_err = err;
            part.worst = q;
          }
        }
  });

  OracleComparison out;
  double sum = 0.0;
  for (const Partial& p : partials) {
    sum += p.sum_err;
    out.samples += p.count;
    if (p.max_err > out.max_relative_error) {
      out.max_relative_error = p.max_err;
      out.worst = p.worst;
    }
  }
  out.mean_relative_error = out.samples ? sum / static_cast<double>(out.samples) : 0.0;
  return out;
}

}  // namespace rissim
