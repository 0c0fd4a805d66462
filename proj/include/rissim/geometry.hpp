// SPDX-License-Identifier: Apache-2.0
//
// Positions, the surface-local frame and angle extraction.
//
// The surface lies in its local xOy plane with the geometric center at the
// origin and the normal along local +z. Columns run along local x (pitch d_v),
// rows along local y (pitch d_h). Elements are indexed row-major starting at
// the most-negative (x, y) corner.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "rissim/errors.hpp"

namespace rissim {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) noexcept { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) noexcept { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) noexcept { x *= s; y *= s; z *= s; return *this; }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) noexcept { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) noexcept { return std::hypot(v.x, v.y, v.z); }

/// uni(r): the direction of r. Throws ZeroDistance for the zero vector.
inline Vec3 unit(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw ZeroDistance("cannot normalize a zero-length vector");
  return v / n;
}

/// Angle between two non-zero vectors in [0, pi], stable for nearly parallel inputs.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static constexpr Mat3 identity() noexcept { return {}; }

  static constexpr Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) noexcept {
    return {{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
  }

  static Mat3 rotation_x(double a) noexcept {
    const double c = std::cos(a), s = std::sin(a);
    return {{1, 0, 0, 0, c, -s, 0, s, c}};
  }
  static Mat3 rotation_y(double a) noexcept {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, 0, s, 0, 1, 0, -s, 0, c}};
  }
  static Mat3 rotation_z(double a) noexcept {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
  }

  constexpr double operator()(std::size_t r, std::size_t c) const noexcept { return m[r * 3 + c]; }

  [[nodiscard]] constexpr Vec3 column(std::size_t c) const noexcept { return {m[c], m[3 + c], m[6 + c]}; }

  [[nodiscard]] constexpr Mat3 transposed() const noexcept {
    return {{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
  }

  [[nodiscard]] constexpr double determinant() const noexcept {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  friend constexpr Vec3 operator*(const Mat3& a, const Vec3& v) noexcept {
    return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z, a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
            a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
  }

  friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) noexcept {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        out.m[r * 3 + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return out;
  }
};

/// N_v x N_h grid of edge-to-edge cells, centered on the local origin.
struct SurfaceSpec {
  int n_v = 1;       // columns, along local x
  int n_h = 1;       // rows, along local y
  double d_v = 0.0;  // cell width [m]
  double d_h = 0.0;  // cell length [m]

  [[nodiscard]] std::size_t element_count() const noexcept {
    return static_cast<std::size_t>(n_v) * static_cast<std::size_t>(n_h);
  }

  void validate() const {
    if (n_v < 1 || n_h < 1) throw InvalidArgument("surface needs at least one row and one column");
    if (!(d_v > 0.0) || !(d_h > 0.0) || !std::isfinite(d_v) || !std::isfinite(d_h))
      throw InvalidArgument("cell dimensions must be positive and finite");
  }
};

/// Surface-frame to world-frame rotation.
class SurfaceOrientation {
public:
  SurfaceOrientation() = default;

  explicit SurfaceOrientation(const Mat3& rotation) : rotation_(rotation) {
    constexpr double tol = 1e-10;
    const Mat3 gram = rotation.transposed() * rotation;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        if (std::abs(gram(r, c) - (r == c ? 1.0 : 0.0)) > tol)
          throw InvalidArgument("surface orientation is not orthonormal");
    if (std::abs(rotation.determinant() - 1.0) > tol)
      throw InvalidArgument("surface orientation must be a proper rotation (det = +1)");
  }

  [[nodiscard]] const Mat3& rotation() const noexcept { return rotation_; }
  [[nodiscard]] Vec3 normal() const noexcept { return rotation_.column(2); }
  [[nodiscard]] Vec3 to_world(const Vec3& local) const noexcept { return rotation_ * local; }
  [[nodiscard]] Vec3 to_local(const Vec3& world) const noexcept { return rotation_.transposed() * world; }

private:
  Mat3 rotation_ = Mat3::identity();
};

/// Element center in the surface frame (z = 0).
inline Vec3 element_local_position(const SurfaceSpec& spec, std::size_t index) {
  if (index >= spec.element_count()) throw InvalidArgument("element index out of range");
  const auto n_v = static_cast<std::size_t>(spec.n_v);
  const double col = static_cast<double>(index % n_v);
  const double row = static_cast<double>(index / n_v);
  return {(col - 0.5 * (spec.n_v - 1)) * spec.d_v, (row - 0.5 * (spec.n_h - 1)) * spec.d_h, 0.0};
}

inline std::vector<Vec3> element_positions(const SurfaceSpec& spec, const SurfaceOrientation& orientation) {
  spec.validate();
  std::vector<Vec3> out;
  out.reserve(spec.element_count());
  for (std::size_t n = 0; n < spec.element_count(); ++n)
    out.push_back(orientation.to_world(element_local_position(spec, n)));
  return out;
}

struct Scene {
  Vec3 tx_pos;
  Vec3 rx_pos;
  SurfaceSpec surface;
  SurfaceOrientation orientation;

  /// Throws FrontSideViolation unless both ends sit strictly in front of the surface.
  void validate() const {
    surface.validate();
    if (!(orientation.to_local(tx_pos).z > 0.0))
      throw FrontSideViolation("transmitter is not in front of the surface");
    if (!(orientation.to_local(rx_pos).z > 0.0))
      throw FrontSideViolation("receiver is not in front of the surface");
  }
};

/// Elevation (from the local normal) and azimuth of the incident and scattered
/// directions at one element, in the surface frame.
///
/// (theta_i, phi_i) are the spherical angles of the direction from the element
/// towards the transmitter and (theta_s, phi_s) those of the direction towards
/// the receiver. With this convention the specular pair is theta_i = theta_s,
/// phi_i = phi_s + pi.
struct AngleQuad {
  double theta_i = 0.0;
  double phi_i = 0.0;
  double theta_s = 0.0;
  double phi_s = 0.0;
};

struct Spherical {
  double theta;
  double phi;
};

/// Spherical angles of a local-frame direction; theta measured from +z.
inline Spherical spherical_angles(const Vec3& v) {
  if (!(norm(v) > 0.0)) throw ZeroDistance("direction of a zero-length vector");
  return {std::atan2(std::hypot(v.x, v.y), v.z), std::atan2(v.y, v.x)};
}

/// Angles at an element given local-frame transmitter, receiver and element positions.
inline AngleQuad angles_at(const Vec3& local_tx, const Vec3& local_rx, const Vec3& local_element) {
  const Vec3 to_tx = local_tx - local_element;
  const Vec3 to_rx = local_rx - local_element;
  if (!(to_tx.z > 0.0)) throw FrontSideViolation("transmitter is not in front of the element");
  if (!(to_rx.z > 0.0)) throw FrontSideViolation("receiver is not in front of the element");
  const Spherical inc = spherical_angles(to_tx);
  const Spherical sca = spherical_angles(to_rx);
  return {inc.theta, inc.phi, sca.theta, sca.phi};
}

inline AngleQuad incident_scatter_angles(const Scene& scene, std::size_t element_index) {
  return angles_at(scene.orientation.to_local(scene.tx_pos), scene.orientation.to_local(scene.rx_pos),
                   element_local_position(scene.surface, element_index));
}

enum class LinkEnd { tx, rx };

/// Angle at `end_pos` between the ray to the world origin and the ray to `element_pos`.
inline double directivity_angle(const Vec3& end_pos, const Vec3& element_pos) {
  if (!(norm(end_pos) > 0.0)) throw UndefinedAngle("link end coincides with the surface center");
  const Vec3 to_element = element_pos - end_pos;
  if (!(norm(to_element) > 0.0)) throw ZeroDistance("link end coincides with an element");
  return angle_between(-end_pos, to_element);
}

inline double directivity_angle(const Scene& scene, std::size_t element_index, LinkEnd end) {
  const Vec3 element = scene.orientation.to_world(element_local_position(scene.surface, element_index));
  return directivity_angle(end == LinkEnd::tx ? scene.tx_pos : scene.rx_pos, element);
}

/// Orientation with the given normal. Roll: local x stays in the plane spanned
/// by the normal and world x (world y when the normal is parallel to world x).
inline SurfaceOrientation orientation_from_normal(const Vec3& normal) {
  const Vec3 n = unit(normal);
  Vec3 ref{1.0, 0.0, 0.0};
  if (norm(cross(n, ref)) < 1e-9) ref = {0.0, 1.0, 0.0};
  const Vec3 x_axis = unit(ref - dot(ref, n) * n);
  const Vec3 y_axis = cross(n, x_axis);
  return SurfaceOrientation(Mat3::from_columns(x_axis, y_axis, n));
}

/// Orientation of a plate centered at the origin whose specular reflection of
/// the transmitter lands on the receiver: the normal bisects uni(tx) and uni(rx).
inline SurfaceOrientation specular_orientation(const Vec3& tx_pos, const Vec3& rx_pos) {
  const Vec3 bisector = unit(tx_pos) + unit(rx_pos);
  if (norm(bisector) < 1e-9) throw DegenerateBisector("transmitter and receiver are opposite through the origin");
  return orientation_from_normal(bisector);
}

inline constexpr double deg(double degrees) noexcept { return degrees * std::numbers::pi / 180.0; }
inline constexpr double to_degrees(double radians) noexcept { return radians * 180.0 / std::numbers::pi; }

/// Position at `distance` from the origin with the given zenith and azimuth (world frame).
inline Vec3 polar_position(double distance, double zenith, double azimuth) noexcept {
  return {distance * std::sin(zenith) * std::cos(azimuth), distance * std::sin(zenith) * std::sin(azimuth),
          distance * std::cos(zenith)};
}

}  // namespace rissim
