#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gns/logsumexp.hpp"
#include "gns/mh_kernel.hpp"
#include "support.hpp"

using namespace gns;
namespace nums = std::numbers;

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

TEST_CASE("with a uniform prior, acceptance reduces to the constraint") {
  // In-domain circular trials have prior ratio 1, so the Metropolis test
  // always passes and the likelihood decides.
  const ParameterSpace space = ParameterSpace::circle(0.0, 2.0 * nums::pi);
  const ProposalScales scales{{0.5}};
  const LogLikelihoodFn flat = [](const Point&) { return 0.0; };
  RngState rng(1);
  LivePoint state{Point{{1.0}}, 0.0};
  for (int i = 0; i < 1000; ++i) {
    const StepOutcome out = mh_step(state, kNegInf, space, flat, scales, rng);
    CHECK(out.likelihood_evaluated);
    CHECK(out.accepted);  // flat likelihood always beats -inf
    state = out.next;
  }
}

TEST_CASE("out-of-domain linear trials are rejected without paying for L") {
  // A domain so narrow that essentially every trial leaves it.
  const ParameterSpace space = ParameterSpace::box(1, 0.0, 1e-9);
  const ProposalScales scales{{1.0}};
  int likelihood_calls = 0;
  const LogLikelihoodFn counting = [&](const Point&) {
    ++likelihood_calls;
    return 0.0;
  };
  RngState rng(2);
  const LivePoint start{Point{{5e-10}}, 0.0};
  const auto [end, stats] =
      evolve_chain(start, kNegInf, 2000, space, counting, scales, rng);
  CHECK(stats.steps == 2000);
  CHECK(stats.likelihood_evals == likelihood_calls);
  CHECK(stats.out_of_domain + stats.likelihood_evals == stats.steps);
  CHECK(stats.out_of_domain > 1990);  // nearly all trials leave the domain
  CHECK(end.point.coords == start.point.coords);
}

TEST_CASE("likelihood economy: evals track the in-domain fraction") {
  // Chain pinned at the left edge of [0,1]: with sigma 0.1, half of all
  // Gaussian steps land below 0 and must skip the likelihood.
  const ParameterSpace space = ParameterSpace::box(1, 0.0, 1.0);
  const ProposalScales scales{{0.1}};
  const Point origin{{0.0}};
  // Only the exact starting point has logL above the constraint, so the
  // chain never moves and the out-of-domain rate stays at one half.
  const LogLikelihoodFn spike = [&](const Point& p) {
    return p.coords[0] == 0.0 ? 0.0 : kNegInf;
  };
  RngState rng(3);
  const std::size_t n = 100000;
  const auto [end, stats] =
      evolve_chain({origin, 0.0}, -1.0, n, space, spike, scales, rng);
  CHECK(end.point.coords[0] == 0.0);
  const double ratio = double(stats.likelihood_evals) / double(stats.steps);
  const double se = std::sqrt(0.25 / double(n));
  CHECK(std::abs(ratio - 0.5) < 3.0 * se);
}

TEST_CASE("the likelihood constraint is invariant along the chain") {
  const ParameterSpace space = ParameterSpace::circle(0.0, 2.0 * nums::pi);
  const ProposalScales scales{{0.7}};
  const LogLikelihoodFn vm = [](const Point& p) {
    return 5.0 * std::cos(p.coords[0] - 1.0);
  };
  RngState rng(4);
  int checked = 0;
  for (double log_l_min : {-1.0, 0.0, 2.0, 4.0}) {
    LivePoint state{Point{{1.0}}, vm(Point{{1.0}})};
    REQUIRE(state.log_l > log_l_min);
    for (int i = 0; i < 25000; ++i) {
      state = mh_step(state, log_l_min, space, vm, scales, rng).next;
      CHECK(state.log_l > log_l_min);
      ++checked;
    }
  }
  CHECK(checked == 100000);
}

TEST_CASE("chain histogram under a flat likelihood is uniform") {
  const ParameterSpace space = ParameterSpace::circle(0.0, 1.0);
  const ProposalScales scales{{0.5}};
  const LogLikelihoodFn flat = [](const Point&) { return 0.0; };
  RngState rng(5);
  const int n = 100000, bins = 20;
  std::vector<int> counts(bins, 0);
  LivePoint state{Point{{0.5}}, 0.0};
  for (int i = 0; i < n; ++i) {
    state = mh_step(state, kNegInf, space, flat, scales, rng).next;
    const int b = std::min(bins - 1, int(state.point.coords[0] * bins));
    ++counts[b];
  }
  const double expected = double(n) / bins;
  double chi2 = 0.0;
  for (int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi2 < testsupport::kChi2Crit19At1pct);
}

TEST_CASE("chains are reproducible from the seed") {
  const ParameterSpace space(
      {Circular{0.0, 2.0 * nums::pi}, SphericalPair{1, 2}});
  const ProposalScales scales = suggest_scales(space, 0.1);
  const LogLikelihoodFn vm = [](const Point& p) {
    return 3.0 * std::cos(p.coords[0]) + std::cos(p.coords[1]);
  };
  const LivePoint start{Point{{0.3, 1.0, 2.0}}, vm(Point{{0.3, 1.0, 2.0}})};
  RngState rng1(6), rng2(6);
  const auto [end1, stats1] =
      evolve_chain(start, -5.0, 500, space, vm, scales, rng1);
  const auto [end2, stats2] =
      evolve_chain(start, -5.0, 500, space, vm, scales, rng2);
  CHECK(end1.point.coords == end2.point.coords);
  CHECK(end1.log_l == end2.log_l);
  CHECK(stats1.accepted == stats2.accepted);
  CHECK(stats1.likelihood_evals == stats2.likelihood_evals);
}

TEST_CASE("a vanishing proposal scale leaves the chain in place") {
  const ParameterSpace space = ParameterSpace::circle(0.0, 2.0 * nums::pi);
  const ProposalScales scales{{1e-12}};
  const LogLikelihoodFn flat = [](const Point&) { return 0.0; };
  RngState rng(7);
  const LivePoint start{Point{{2.5}}, 0.0};
  const auto [end, stats] =
      evolve_chain(start, kNegInf, 1, space, flat, scales, rng);
  CHECK(stats.steps == 1);
  CHECK(stats.accepted <= 1);
  CHECK(std::abs(end.point.coords[0] - 2.5) < 1e-10);
}

TEST_CASE("n_steps must be positive") {
  const ParameterSpace space = ParameterSpace::circle(0.0, 1.0);
  const ProposalScales scales{{0.1}};
  const LogLikelihoodFn flat = [](const Point&) { return 0.0; };
  RngState rng(8);
  CHECK_THROWS_AS(
      evolve_chain({Point{{0.5}}, 0.0}, kNegInf, 0, space, flat, scales, rng),
      std::invalid_argument);
}

TEST_CASE("the chain hops between edge modes on the circle") {
  // Bimodal likelihood with modes at 0.05 and 0.95 on [0,1): linearly far
  // apart, but only 0.1 apart through the seam.
  const ParameterSpace space = ParameterSpace::circle(0.0, 1.0);
  const ProposalScales scales{{0.2}};
  const double kappa = 5.0;
  const LogLikelihoodFn bimodal = [kappa](const Point& p) {
    const double a = kappa * std::cos(2.0 * nums::pi * (p.coords[0] - 0.05));
    const double b = kappa * std::cos(2.0 * nums::pi * (p.coords[0] - 0.95));
    return std::log(0.5) + log_add_exp(a, b);
  };

  // Grid posterior mass within 0.1 of each mode, as the reference.
  const int grid_n = 20000;
  double mass_a = 0.0, mass_b = 0.0, mass_total = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double theta = (i + 0.5) / grid_n;
    const double w = std::exp(bimodal(Point{{theta}}));
    mass_total += w;
    if (testsupport::circular_distance(theta, 0.05, 1.0) < 0.1) mass_a += w;
    if (testsupport::circular_distance(theta, 0.95, 1.0) < 0.1) mass_b += w;
  }
  mass_a /= mass_total;
  mass_b /= mass_total;

  RngState rng(9);
  LivePoint state{Point{{0.05}}, bimodal(Point{{0.05}})};
  const int n = 10000;
  int near_a = 0, near_b = 0;
  for (int i = 0; i < n; ++i) {
    state = mh_step(state, kNegInf, space, bimodal, scales, rng).next;
    const double t = state.point.coords[0];
    if (testsupport::circular_distance(t, 0.05, 1.0) < 0.1) ++near_a;
    if (testsupport::circular_distance(t, 0.95, 1.0) < 0.1) ++near_b;
  }
  const double frac_a = double(near_a) / n;
  const double frac_b = double(near_b) / n;
  CHECK(frac_a >= 0.05);
  CHECK(frac_b >= 0.05);
  // And the occupation matches the grid posterior to MCMC accuracy.
  CHECK(std::abs(frac_a - mass_a) < 0.15);
  CHECK(std::abs(frac_b - mass_b) < 0.15);
}
