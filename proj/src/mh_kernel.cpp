#include "gns/mh_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace gns {

StepOutcome mh_step(const LivePoint& current, double log_l_min,
                    const ParameterSpace& space, const LogLikelihoodFn& log_l,
                    const ProposalScales& scales, RngState& rng,
                    const ProposalOptions& opts) {
  TrialOutcome trial = propose(current.point, space, scales, rng, opts);

  const double log_prior_trial = space.log_prior_density(trial.trial);
  const double log_prior_current = space.log_prior_density(current.point);
  const double log_ratio =
      log_prior_trial - log_prior_current + trial.log_q_ratio;
  const bool in_domain = std::isfinite(log_prior_trial);

  const double u = rng.uniform();
  if (std::log(u) >= std::min(0.0, log_ratio)) {
    return {current, false, false, in_domain};
  }

  const double trial_log_l = log_l(trial.trial);
  if (trial_log_l > log_l_min) {
    return {{std::move(trial.trial), trial_log_l}, true, true, in_domain};
  }
  return {current, false, true, in_domain};
}

std::pair<LivePoint, ChainStats> evolve_chain(
    const LivePoint& start, double log_l_min, std::size_t n_steps,
    const ParameterSpace& space, const LogLikelihoodFn& log_l,
    const ProposalScales& scales, RngState& rng, const ProposalOptions& opts) {
  if (n_steps < 1) {
    throw std::invalid_argument("evolve_chain: n_steps must be at least 1");
  }
  LivePoint state = start;
  ChainStats stats;
  for (std::size_t s = 0; s < n_steps; ++s) {
    StepOutcome out =
        mh_step(state, log_l_min, space, log_l, scales, rng, opts);
    state = std::move(out.next);
    ++stats.steps;
    stats.accepted += out.accepted ? 1 : 0;
    stats.likelihood_evals += out.likelihood_evaluated ? 1 : 0;
    stats.out_of_domain += out.trial_in_domain ? 0 : 1;
  }
  return {std::move(state), stats};
}

}  // namespace gns
