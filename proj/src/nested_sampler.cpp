#include "gns/nested_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gns/logsumexp.hpp"

namespace gns {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void SamplerConfig::validate() const {
  if (n_live < 2) {
    throw std::invalid_argument("SamplerConfig: n_live must be >= 2");
  }
  if (chain_steps < 1) {
    throw std::invalid_argument("SamplerConfig: chain_steps must be >= 1");
  }
  if (!(termination_frac > 0.0 && termination_frac < 1.0)) {
    throw std::invalid_argument(
        "SamplerConfig: termination_frac must lie in (0, 1)");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("SamplerConfig: max_iterations must be >= 1");
  }
}

RunResult run(const SamplerConfig& config, const ParameterSpace& space,
              const LogLikelihoodFn& log_l, const ProposalScales& scales,
              std::size_t posterior_count, const ProposalOptions& opts) {
  config.validate();
  validate_scales(space, scales);

  RngState init_rng = make_stream(config.seed, SeedStream::init);
  RngState chain_rng = make_stream(config.seed, SeedStream::chain);
  RngState resample_rng = make_stream(config.seed, SeedStream::resample);

  const std::size_t n = config.n_live;
  std::vector<LivePoint> live;
  live.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Point p = space.sample_prior(init_rng);
    const double ll = log_l(p);
    live.push_back({std::move(p), ll});
  }
  if (std::all_of(live.begin(), live.end(),
                  [](const LivePoint& lp) { return lp.log_l == kNegInf; })) {
    throw std::runtime_error(
        "run: every initial livepoint has zero likelihood; "
        "the model does not overlap the prior");
  }

  RunResult result;
  result.likelihood_evals = n;

  // X_i = exp(-i/n): log dX_i = -(i-1)/n + log(1 - exp(-1/n)).
  const double log_shrink = std::log1p(-std::exp(-1.0 / double(n)));
  const double log_term_frac = std::log(config.termination_frac);

  LogSumExpAccumulator log_z_acc;
  std::uint64_t accepted_total = 0;
  std::size_t iter = 0;
  bool terminated = false;

  while (iter < config.max_iterations) {
    ++iter;

    std::size_t worst = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (live[j].log_l < live[worst].log_l) worst = j;
    }
    const double log_l_min = live[worst].log_l;
    const double log_x = -double(iter) / double(n);
    const double log_weight =
        log_l_min + (-double(iter - 1) / double(n)) + log_shrink;

    result.dead_points.push_back(
        {live[worst].point, log_l_min, log_x, log_weight});
    log_z_acc.add(log_weight);

    // Chain start: a uniformly random livepoint other than the one dying.
    std::size_t start = chain_rng.uniform_index(n - 1);
    if (start >= worst) ++start;

    auto [end_point, stats] =
        evolve_chain(live[start], log_l_min, config.chain_steps, space, log_l,
                     scales, chain_rng, opts);
    live[worst] = std::move(end_point);

    accepted_total += stats.accepted;
    result.likelihood_evals += stats.likelihood_evals;
    result.chain_steps_total += stats.steps;
    result.trials_out_of_domain += stats.out_of_domain;
    if (!(live[worst].log_l > log_l_min)) {
      ++result.constraint_violations;
    }

    double log_l_max = kNegInf;
    for (const auto& lp : live) {
      if (lp.log_l > log_l_max) log_l_max = lp.log_l;
    }
    if (log_l_max + log_x < log_term_frac + log_z_acc.value()) {
      terminated = true;
      break;
    }
  }
  result.n_iterations = iter;
  result.truncated = !terminated;

  // Remaining livepoints each carry an equal share of the final volume.
  const double log_x_final = -double(iter) / double(n);
  const double log_share = log_x_final - std::log(double(n));
  result.final_live.reserve(n);
  for (const auto& lp : live) {
    result.final_live.push_back(
        {lp.point, lp.log_l, log_x_final, lp.log_l + log_share});
  }

  std::vector<double> all_log_weights;
  all_log_weights.reserve(result.dead_points.size() + n);
  for (const auto& r : result.dead_points) all_log_weights.push_back(r.log_weight);
  for (const auto& r : result.final_live) all_log_weights.push_back(r.log_weight);
  result.log_z = log_sum_exp(all_log_weights);

  double information = 0.0;
  {
    auto add_information = [&](const DeadPointRecord& r) {
      const double p = std::exp(r.log_weight - result.log_z);
      if (p > 0.0) information += p * (r.log_l - result.log_z);
    };
    for (const auto& r : result.dead_points) add_information(r);
    for (const auto& r : result.final_live) add_information(r);
  }
  result.information_nats = information;
  result.log_z_err = std::sqrt(std::max(information, 0.0) / double(n));

  result.acceptance_rate =
      result.chain_steps_total > 0
          ? double(accepted_total) / double(result.chain_steps_total)
          : 0.0;

  result.posterior_samples =
      posterior_resample(result.dead_points, result.final_live, result.log_z,
                         posterior_count, resample_rng);
  return result;
}

std::vector<Point> posterior_resample(
    const std::vector<DeadPointRecord>& dead_points,
    const std::vector<DeadPointRecord>& final_live_records, double log_z,
    std::size_t count, RngState& rng) {
  std::vector<Point> samples;
  if (count == 0) {
    return samples;
  }
  const std::size_t total = dead_points.size() + final_live_records.size();
  if (total == 0) {
    throw std::invalid_argument("posterior_resample: no records");
  }
  const auto record = [&](std::size_t j) -> const DeadPointRecord& {
    return j < dead_points.size() ? dead_points[j]
                                  : final_live_records[j - dead_points.size()];
  };

  samples.reserve(count);
  const double u0 = rng.uniform();
  double cumulative = std::exp(record(0).log_weight - log_z);
  std::size_t j = 0;
  for (std::size_t s = 0; s < count; ++s) {
    const double target = (double(s) + u0) / double(count);
    while (cumulative < target && j + 1 < total) {
      ++j;
      cumulative += std::exp(record(j).log_weight - log_z);
    }
    samples.push_back(record(j).point);
  }
  return samples;
}

}  // namespace gns
