// SPDX-License-Identifier: Apache-2.0
//
// Closed-form element RCS models and the bidirectional scattering
// distribution (BSD) amplitude f = sqrt(sigma).
#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <variant>

#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"

namespace rissim {

/// Cell size and wavelength. The wavenumber is derived, so k * lambda = 2 pi.
class CellDims {
public:
  CellDims(double d_v, double d_h, double lambda) : d_v_(d_v), d_h_(d_h), lambda_(lambda) {
    if (!(d_v > 0.0) || !(d_h > 0.0) || !(lambda > 0.0) || !std::isfinite(d_v) || !std::isfinite(d_h) ||
        !std::isfinite(lambda))
      throw InvalidArgument("cell dimensions and wavelength must be positive and finite");
  }

  CellDims(const SurfaceSpec& spec, double lambda) : CellDims(spec.d_v, spec.d_h, lambda) {}

  [[nodiscard]] double d_v() const noexcept { return d_v_; }
  [[nodiscard]] double d_h() const noexcept { return d_h_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double k() const noexcept { return 2.0 * std::numbers::pi / lambda_; }
  [[nodiscard]] double area() const noexcept { return d_v_ * d_h_; }

  /// Cells larger than a wavelength are outside the intended regime but still evaluated.
  [[nodiscard]] bool sub_wavelength() const noexcept { return d_v_ <= lambda_ && d_h_ <= lambda_; }

private:
  double d_v_;
  double d_h_;
  double lambda_;
};

/// Edge-diffraction loss factor mu in [0, 1].
class DiffractionParams {
public:
  static constexpr double default_mu = 0.2;

  DiffractionParams() = default;
  explicit DiffractionParams(double mu) : mu_(mu) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("diffraction loss factor mu must lie in [0, 1]");
  }

  [[nodiscard]] double mu() const noexcept { return mu_; }

private:
  double mu_ = default_mu;
};

struct MetalModel {};
struct RisModel {
  DiffractionParams diffraction;
};
/// cos^2(theta_i) cos^2(theta_s) unit pattern, used as a dimensionless RCS.
struct TangModel {};

using RcsModel = std::variant<MetalModel, RisModel, TangModel>;

/// sin(x)/x with a Taylor branch around the removable singularity.
inline double sinc(double x) noexcept {
  if (std::abs(x) <= 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

struct SincArguments {
  double x;
  double y;
};

inline SincArguments xy_arguments(const AngleQuad& q, const CellDims& dims) noexcept {
  const double si = std::sin(q.theta_i), ss = std::sin(q.theta_s);
  const double x = std::numbers::pi * dims.d_v() / dims.lambda() * (ss * std::cos(q.phi_s) + si * std::cos(q.phi_i));
  const double y = std::numbers::pi * dims.d_h() / dims.lambda() * (ss * std::sin(q.phi_s) + si * std::sin(q.phi_i));
  return {x, y};
}

/// Bistatic RCS of one perfectly conducting d_v x d_h cell under x-polarized excitation.
inline double rcs_metal_cell(const AngleQuad& q, const CellDims& dims) noexcept {
  const auto [x, y] = xy_arguments(q, dims);
  const double a = dims.area() / dims.lambda();
  const double ci = std::cos(q.theta_i), cs = std::cos(q.theta_s);
  const double cp = std::cos(q.phi_s), sp = std::sin(q.phi_s);
  const double sx = sinc(x), sy = sinc(y);
  return 4.0 * std::numbers::pi * a * a * (ci * ci) * (cs * cs * cp * cp + sp * sp) * (sx * sx) * (sy * sy);
}

/// Edge-diffraction correction; lies in [1 - mu, 1 + mu]. Depends on d_v only.
inline double diffraction_factor(const AngleQuad& q, const CellDims& dims, const DiffractionParams& p) noexcept {
  const double half_sum = 0.5 * (std::sin(q.theta_i) + std::sin(q.theta_s));
  return 1.0 - p.mu() * std::sin(0.5 * (q.theta_i + q.theta_s)) * std::cos(dims.k() * dims.d_v() * half_sum);
}

inline double rcs_ris_cell(const AngleQuad& q, const CellDims& dims, const DiffractionParams& p) noexcept {
  return rcs_metal_cell(q, dims) * diffraction_factor(q, dims, p);
}

inline double rcs_tang_cell(const AngleQuad& q) noexcept {
  const double ci = std::cos(q.theta_i), cs = std::cos(q.theta_s);
  return ci * ci * cs * cs;
}

inline double rcs(const RcsModel& model, const AngleQuad& q, const CellDims& dims) noexcept {
  struct Visitor {
    const AngleQuad& q;
    const CellDims& dims;
    double operator()(const MetalModel&) const noexcept { return rcs_metal_cell(q, dims); }
    double operator()(const RisModel& m) const noexcept { return rcs_ris_cell(q, dims, m.diffraction); }
    double operator()(const TangModel&) const noexcept { return rcs_tang_cell(q); }
  };
  return std::visit(Visitor{q, dims}, model);
}

/// BSD amplitude sqrt(sigma) for the selected model.
inline double bsd(const RcsModel& model, const AngleQuad& q, const CellDims& dims) noexcept {
  return std::sqrt(rcs(model, q, dims));
}

}  // namespace rissim
