#pragma once

#include <vector>

#include "gns/param_space.hpp"
#include "gns/rng.hpp"

namespace gns {

/// Trial-distribution widths, one entry per kind descriptor of the space:
/// interval kinds get a standard deviation in parameter units, each
/// spherical pair one shared Euclidean standard deviation for the 3-D
/// Gaussian perturbation. All entries must be positive and finite.
struct ProposalScales {
  std::vector<double> sigma;
};

/// A proposed trial point together with log q(current|trial) - log q(trial|current).
/// The wrapped and sphere-projected trials are symmetric, so the ratio is 0.
struct TrialOutcome {
  Point trial;
  double log_q_ratio;
};

struct ProposalOptions {
  /// When false, circular dimensions are proposed like linear ones (no
  /// wrapping; out-of-domain trials are left to die on the zero prior).
  /// Ablation switch used by the acceptance tests only.
  bool wrap_circular = true;
};

/// Draws one trial point from the geometric trial distribution:
///   Linear    - current + N(0, sigma^2), untruncated and unwrapped;
///   Circular  - wrapped normal around the current value;
///   Spherical - 3-D Gaussian perturbation of the embedded unit vector,
///               projected back onto the sphere.
/// Circular and spherical coordinates of the trial always lie in the
/// domain; linear ones may leave it and get rejected downstream.
TrialOutcome propose(const Point& current, const ParameterSpace& space,
                     const ProposalScales& scales, RngState& rng,
                     const ProposalOptions& opts = {});

/// Step-size heuristic: sigma = fraction * (hi - lo) for interval kinds and
/// fraction * 2 (a fraction of the sphere diameter) for spherical pairs.
/// fraction must lie in (0, 1].
ProposalScales suggest_scales(const ParameterSpace& space, double fraction);

/// Throws unless the scales match the space and every entry is valid.
void validate_scales(const ParameterSpace& space, const ProposalScales& scales);

}  // namespace gns
