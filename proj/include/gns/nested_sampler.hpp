#pragma once

#include <cstdint>
#include <vector>

#include "gns/mh_kernel.hpp"
#include "gns/param_space.hpp"
#include "gns/proposal.hpp"
#include "gns/rng.hpp"

namespace gns {

struct SamplerConfig {
  std::size_t n_live = 500;
  std::size_t chain_steps = 20;
  double termination_frac = 1e-3;
  std::size_t max_iterations = 1000000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A livepoint at the moment it was discarded: its log-likelihood, the log
/// prior volume of its iso-likelihood contour and its (unnormalised) log
/// posterior weight.
struct DeadPointRecord {
  Point point;
  double log_l;
  double log_x;
  double log_weight;
};

struct RunResult {
  double log_z;
  double log_z_err;
  double information_nats;
  std::size_t n_iterations;
  std::vector<DeadPointRecord> dead_points;
  /// Contributions of the livepoints remaining at termination, each with an
  /// equal share of the final prior volume.
  std::vector<DeadPointRecord> final_live;
  std::vector<Point> posterior_samples;
  double acceptance_rate;
  std::uint64_t likelihood_evals;  // includes the n_live initial draws

  // diagnostics
  bool truncated = false;  // max_iterations hit before the stopping rule
  std::uint64_t chain_steps_total = 0;
  std::uint64_t trials_out_of_domain = 0;
  std::uint64_t constraint_violations = 0;  // replacements at or below L_min
};

/// The nested-sampling loop. Maintains n_live livepoints drawn from the
/// prior; at each iteration the worst one is recorded as a dead point at
/// prior volume X_i = exp(-i/n_live) and replaced by the end state of an
/// MH chain run under the constraint logL > L_min. Stops when the largest
/// possible remaining contribution max(logL)*X_i drops below
/// termination_frac times the accumulated evidence. The final livepoints
/// are absorbed with equal shares of the remaining volume, the evidence is
/// a log-sum-exp over all weights, and equal-weight posterior samples are
/// drawn by systematic resampling.
RunResult run(const SamplerConfig& config, const ParameterSpace& space,
              const LogLikelihoodFn& log_l, const ProposalScales& scales,
              std::size_t posterior_count = 10000,
              const ProposalOptions& opts = {});

/// Systematic resampling of dead points plus final-livepoint records with
/// probabilities exp(log_weight - log_z). Multiplicities match the expected
/// counts within +-1.
std::vector<Point> posterior_resample(
    const std::vector<DeadPointRecord>& dead_points,
    const std::vector<DeadPointRecord>& final_live_records, double log_z,
    std::size_t count, RngState& rng);

}  // namespace gns
