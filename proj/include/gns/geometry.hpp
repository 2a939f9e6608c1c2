#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gns {

/// A point on the unit sphere embedded in R^3 (|v| = 1 within 1e-12).
struct UnitVec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double dot(const UnitVec3& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// Maps `value` to the unique representative in [lo, hi) congruent to it
/// modulo the interval width (floored modulo). In-range values are returned
/// unchanged, so the function is an exact identity on [lo, hi).
inline double wrap(double value, double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("wrap: requires lo < hi");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("wrap: value must be finite");
  }
  if (value >= lo && value < hi) {
    return value;
  }
  const double width = hi - lo;
  double r = std::fmod(value - lo, width);
  if (r < 0.0) {
    r += width;
  }
  double out = lo + r;
  if (out >= hi) {
    out = lo;  // rounding can push r up to width
  }
  return out;
}

/// (theta, phi) -> (sin t cos p, sin t sin p, cos t), theta in [0,pi],
/// phi in [0,2pi).
inline UnitVec3 angles_to_cart(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("angles_to_cart: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("angles_to_cart: phi must lie in [0, 2pi)");
  }
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

/// Inverse of angles_to_cart. phi is undefined at the poles; when
/// |z| = 1 within 1e-12 the convention phi = 0 is used.
inline std::pair<double, double> cart_to_angles(const UnitVec3& v) {
  const double z = std::clamp(v.z, -1.0, 1.0);
  const double theta = std::acos(z);
  if (std::abs(v.z) >= 1.0 - 1e-12) {
    return {theta, 0.0};
  }
  double phi = std::atan2(v.y, v.x);
  if (phi < 0.0) {
    phi += 2.0 * std::numbers::pi;
  }
  if (phi >= 2.0 * std::numbers::pi) {
    phi = 0.0;
  }
  return {theta, phi};
}

/// Radial projection of (x, y, z) onto the unit sphere. Empty when the
/// norm is below 1e-300 and the direction is meaningless.
inline std::optional<UnitVec3> try_project_to_sphere(double x, double y, double z) {
  const double norm = std::hypot(x, y, z);
  if (!(norm >= 1e-300) || !std::isfinite(norm)) {
    return std::nullopt;
  }
  return UnitVec3{x / norm, y / norm, z / norm};
}

/// Throwing variant of try_project_to_sphere.
inline UnitVec3 project_to_sphere(double x, double y, double z) {
  auto v = try_project_to_sphere(x, y, z);
  if (!v) {
    throw std::domain_error("project_to_sphere: input too close to the origin");
  }
  return *v;
}

}  // namespace gns
