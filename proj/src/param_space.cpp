#include "gns/param_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gns {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_interval(double lo, double hi, const char* kind) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument(std::string(kind) +
                                " kind requires finite lo < hi");
  }
}
}  // namespace

ParameterSpace::ParameterSpace(std::vector<ParameterKind> kinds)
    : kinds_(std::move(kinds)) {
  if (kinds_.empty()) {
    throw std::invalid_argument("ParameterSpace: at least one kind required");
  }
  std::size_t total = 0;
  for (const auto& k : kinds_) {
    total += std::holds_alternative<SphericalPair>(k) ? 2 : 1;
  }
  dim_ = total;

  std::vector<bool> used(dim_, false);
  interval_dims_.assign(kinds_.size(), 0);
  std::size_t next_free = 0;
  const auto claim = [&](std::size_t d) {
    if (d >= dim_ || used[d]) {
      throw std::invalid_argument(
          "ParameterSpace: dimensions must be covered exactly once");
    }
    used[d] = true;
  };
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (const auto* sp = std::get_if<SphericalPair>(&kinds_[i])) {
      if (sp->theta_index == sp->phi_index) {
        throw std::invalid_argument(
            "SphericalPair: theta and phi indices must be distinct");
      }
      claim(sp->theta_index);
      claim(sp->phi_index);
    } else {
      if (const auto* lin = std::get_if<Linear>(&kinds_[i])) {
        check_interval(lin->lo, lin->hi, "Linear");
      } else {
        const auto& c = std::get<Circular>(kinds_[i]);
        check_interval(c.lo, c.hi, "Circular");
      }
      while (next_free < dim_ && used[next_free]) ++next_free;
      claim(next_free);
      interval_dims_[i] = next_free;
    }
  }
}

bool ParameterSpace::contains(std::span<const double> coords) const {
  if (coords.size() != dim_) {
    throw std::invalid_argument("contains: coordinate count mismatch");
  }
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (const auto* lin = std::get_if<Linear>(&kinds_[i])) {
      const double v = coords[interval_dims_[i]];
      if (!(v >= lin->lo && v <= lin->hi)) return false;
    } else if (const auto* c = std::get_if<Circular>(&kinds_[i])) {
      const double v = coords[interval_dims_[i]];
      if (!(v >= c->lo && v < c->hi)) return false;
    } else {
      const auto& sp = std::get<SphericalPair>(kinds_[i]);
      const double theta = coords[sp.theta_index];
      const double phi = coords[sp.phi_index];
      if (!(theta >= 0.0 && theta <= std::numbers::pi)) return false;
      if (!(phi >= 0.0 && phi < kTwoPi)) return false;
    }
  }
  return true;
}

double ParameterSpace::log_prior_density(const Point& p) const {
  if (!contains(p)) {
    return -std::numeric_limits<double>::infinity();
  }
  double log_density = 0.0;
  for (const auto& k : kinds_) {
    if (const auto* lin = std::get_if<Linear>(&k)) {
      log_density -= std::log(lin->hi - lin->lo);
    } else if (const auto* c = std::get_if<Circular>(&k)) {
      log_density -= std::log(c->hi - c->lo);
    } else {
      log_density -= std::log(4.0 * std::numbers::pi);
    }
  }
  return log_density;
}

Point ParameterSpace::sample_prior(RngState& rng) const {
  Point p;
  p.coords.resize(dim_);
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (const auto* lin = std::get_if<Linear>(&kinds_[i])) {
      p.coords[interval_dims_[i]] = rng.uniform(lin->lo, lin->hi);
    } else if (const auto* c = std::get_if<Circular>(&kinds_[i])) {
      p.coords[interval_dims_[i]] = rng.uniform(c->lo, c->hi);
    } else {
      const auto& sp = std::get<SphericalPair>(kinds_[i]);
      const double cos_theta = rng.uniform(-1.0, 1.0);
      p.coords[sp.theta_index] = std::acos(std::clamp(cos_theta, -1.0, 1.0));
      p.coords[sp.phi_index] = rng.uniform(0.0, kTwoPi);
    }
  }
  return p;
}

ParameterSpace ParameterSpace::circle(double lo, double hi) {
  return ParameterSpace({Circular{lo, hi}});
}

ParameterSpace ParameterSpace::torus(std::size_t n_circular, double lo,
                                     double hi) {
  std::vector<ParameterKind> kinds(n_circular, Circular{lo, hi});
  return ParameterSpace(std::move(kinds));
}

ParameterSpace ParameterSpace::sphere() {
  return ParameterSpace({SphericalPair{0, 1}});
}

ParameterSpace ParameterSpace::box(std::size_t n_dims, double lo, double hi) {
  std::vector<ParameterKind> kinds(n_dims, Linear{lo, hi});
  return ParameterSpace(std::move(kinds));
}

}  // namespace gns
