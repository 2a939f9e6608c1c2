#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gns/rng.hpp"

namespace gns {

/// Bounded interval with a uniform prior. The domain is closed: [lo, hi].
struct Linear {
  double lo;
  double hi;
};

/// Periodic interval with a uniform prior. The domain is half-open,
/// [lo, hi), so every angle has a unique representative. A torus is a
/// product of Circular parameters.
struct Circular {
  double lo;
  double hi;
};

/// Polar/azimuth pair (theta in [0, pi], phi in [0, 2pi)) jointly uniform
/// on the surface of the unit sphere. Indices name the dimensions of the
/// sampling space holding theta and phi.
struct SphericalPair {
  std::size_t theta_index;
  std::size_t phi_index;
};

using ParameterKind = std::variant<Linear, Circular, SphericalPair>;

/// Position in the D-dimensional sampling space.
struct Point {
  std::vector<double> coords;
};

/// A Point with its cached log-likelihood.
struct LivePoint {
  Point point;
  double log_l;
};

/// Ordered set of parameter kinds covering dimensions 0..D-1 exactly once.
/// Interval kinds claim the lowest unassigned dimension in declaration
/// order; spherical pairs claim the two dimensions they name.
class ParameterSpace {
 public:
  explicit ParameterSpace(std::vector<ParameterKind> kinds);

  std::size_t dimension() const { return dim_; }
  const std::vector<ParameterKind>& kinds() const { return kinds_; }

  /// Dimension index owned by an interval kind (Linear or Circular).
  /// For spherical pairs use the indices stored in the kind itself.
  std::size_t interval_dimension(std::size_t kind_index) const {
    return interval_dims_[kind_index];
  }

  /// True iff every coordinate lies inside its kind's domain.
  bool contains(std::span<const double> coords) const;
  bool contains(const Point& p) const { return contains(p.coords); }

  /// Log prior density. Uniform everywhere in the domain: interval kinds
  /// contribute -log(hi-lo), spherical pairs -log(4pi) with respect to the
  /// sphere's surface measure. Out-of-domain points get -infinity.
  double log_prior_density(const Point& p) const;

  /// Draw from the prior: uniform on intervals, uniform on the sphere
  /// surface (cos theta uniform on [-1,1], phi uniform on [0,2pi)).
  Point sample_prior(RngState& rng) const;

  // Convenience factories for the common one-object spaces.
  static ParameterSpace circle(double lo, double hi);
  static ParameterSpace torus(std::size_t n_circular, double lo, double hi);
  static ParameterSpace sphere();
  static ParameterSpace box(std::size_t n_dims, double lo, double hi);

 private:
  std::vector<ParameterKind> kinds_;
  std::vector<std::size_t> interval_dims_;  // kind index -> dimension, 0 for pairs
  std::size_t dim_ = 0;
};

}  // namespace gns
