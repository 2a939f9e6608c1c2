#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "gns/param_space.hpp"
#include "gns/proposal.hpp"
#include "gns/rng.hpp"

namespace gns {

/// Log-likelihood contract: deterministic (same point, same value), may
/// return -infinity, must be safe for concurrent read-only use.
using LogLikelihoodFn = std::function<double(const Point&)>;

struct ChainStats {
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
  std::uint64_t likelihood_evals = 0;
  std::uint64_t out_of_domain = 0;  // trials rejected on a zero prior

  ChainStats& operator+=(const ChainStats& o) {
    steps += o.steps;
    accepted += o.accepted;
    likelihood_evals += o.likelihood_evals;
    out_of_domain += o.out_of_domain;
    return *this;
  }
};

struct StepOutcome {
  LivePoint next;
  bool accepted;
  bool likelihood_evaluated;
  bool trial_in_domain;
};

/// One step of the likelihood-constrained Metropolis-Hastings chain.
/// The Metropolis test on the prior (and proposal ratio) runs first, so a
/// trial with zero prior mass is rejected without paying for a likelihood
/// evaluation; only survivors are checked against logL > log_l_min.
/// Either rejection leaves the chain where it was.
StepOutcome mh_step(const LivePoint& current, double log_l_min,
                    const ParameterSpace& space, const LogLikelihoodFn& log_l,
                    const ProposalScales& scales, RngState& rng,
                    const ProposalOptions& opts = {});

/// Applies mh_step n_steps times and returns the final chain state with
/// aggregate statistics. If current.log_l > log_l_min on entry, the
/// constraint holds at every step of the chain.
std::pair<LivePoint, ChainStats> evolve_chain(
    const LivePoint& start, double log_l_min, std::size_t n_steps,
    const ParameterSpace& space, const LogLikelihoodFn& log_l,
    const ProposalScales& scales, RngState& rng,
    const ProposalOptions& opts = {});

}  // namespace gns
