#include "gns/proposal.hpp"

#include <cmath>
#include <stdexcept>

#include "gns/geometry.hpp"

namespace gns {

void validate_scales(const ParameterSpace& space,
                     const ProposalScales& scales) {
  if (scales.sigma.size() != space.kinds().size()) {
    throw std::invalid_argument(
        "ProposalScales: expected one sigma per kind descriptor");
  }
  for (double s : scales.sigma) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument(
          "ProposalScales: sigma entries must be positive and finite");
    }
  }
}

TrialOutcome propose(const Point& current, const ParameterSpace& space,
                     const ProposalScales& scales, RngState& rng,
                     const ProposalOptions& opts) {
  validate_scales(space, scales);
  if (current.coords.size() != space.dimension()) {
    throw std::invalid_argument("propose: point dimension mismatch");
  }

  Point trial = current;
  const auto& kinds = space.kinds();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const double sigma = scales.sigma[i];
    if (const auto* lin = std::get_if<Linear>(&kinds[i])) {
      (void)lin;
      const std::size_t d = space.interval_dimension(i);
      trial.coords[d] = current.coords[d] + sigma * rng.normal();
    } else if (const auto* c = std::get_if<Circular>(&kinds[i])) {
      const std::size_t d = space.interval_dimension(i);
      const double raw = current.coords[d] + sigma * rng.normal();
      trial.coords[d] = opts.wrap_circular ? wrap(raw, c->lo, c->hi) : raw;
    } else {
      const auto& sp = std::get<SphericalPair>(kinds[i]);
      const UnitVec3 centre = angles_to_cart(current.coords[sp.theta_index],
                                             current.coords[sp.phi_index]);
      bool placed = false;
      for (int attempt = 0; attempt < 100; ++attempt) {
        const double x = centre.x + sigma * rng.normal();
        const double y = centre.y + sigma * rng.normal();
        const double z = centre.z + sigma * rng.normal();
        if (auto on_sphere = try_project_to_sphere(x, y, z)) {
          const auto [theta, phi] = cart_to_angles(*on_sphere);
          trial.coords[sp.theta_index] = theta;
          trial.coords[sp.phi_index] = phi;
          placed = true;
          break;
        }
      }
      if (!placed) {
        throw std::runtime_error(
            "propose: 100 consecutive degenerate sphere projections; "
            "the random stream is broken");
      }
    }
  }
  return {std::move(trial), 0.0};
}

ProposalScales suggest_scales(const ParameterSpace& space, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("suggest_scales: fraction must lie in (0, 1]");
  }
  ProposalScales scales;
  scales.sigma.reserve(space.kinds().size());
  for (const auto& k : space.kinds()) {
    if (const auto* lin = std::get_if<Linear>(&k)) {
      scales.sigma.push_back(fraction * (lin->hi - lin->lo));
    } else if (const auto* c = std::get_if<Circular>(&k)) {
      scales.sigma.push_back(fraction * (c->hi - c->lo));
    } else {
      scales.sigma.push_back(fraction * 2.0);
    }
  }
  return scales;
}

}  // namespace gns
