#pragma once

#include <cstddef>

#include "gns/mh_kernel.hpp"
#include "gns/param_space.hpp"

namespace gns {

/// Deterministic midpoint-rule grid over a parameter space. Interval kinds
/// get one axis over [lo, hi]; a spherical pair gets one axis over
/// cos(theta) in [-1, 1] (which absorbs the sin(theta) area element) and
/// one over phi. At most 3 integration axes; at most 1e8 grid cells.
struct QuadratureSpec {
  std::size_t points_per_dim;
  ParameterSpace space;
};

/// log Z = log integral of likelihood times prior, by midpoint quadrature.
/// Grid chunks are reduced in a fixed order, so the result is bit-stable
/// for any thread count. Parallelised over chunks with OpenMP.
double grid_log_evidence(const QuadratureSpec& spec,
                         const LogLikelihoodFn& log_l);

/// Straight-line serial reference for grid_log_evidence: one streaming
/// pass over the cells in flat order. Kept for testing the parallel
/// kernel; agrees with it up to floating-point reassociation.
double grid_log_evidence_serial(const QuadratureSpec& spec,
                                const LogLikelihoodFn& log_l);

enum class MomentKind {
  linear_mean,    // Linear dimensions and spherical polar angles
  circular_mean,  // Circular dimensions and spherical azimuths
};

/// Posterior expectation of one coordinate on the same grid. The circular
/// mean is the atan2 of the expected sine and cosine, mapped back into the
/// dimension's domain.
double grid_posterior_moment(const QuadratureSpec& spec,
                             const LogLikelihoodFn& log_l,
                             std::size_t dimension, MomentKind kind);

}  // namespace gns
