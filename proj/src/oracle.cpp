#include "gns/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gns/geometry.hpp"

namespace gns {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxCells = 100000000;  // 1e8 blowup guard
constexpr std::size_t kChunkCells = 16384;

enum class AxisRole { interval, sphere_theta, sphere_phi };

struct Axis {
  std::size_t dim;             // coordinate written by this axis
  AxisRole role;
  std::vector<double> values;  // midpoint coordinate values
  double log_width;            // cell width in the integration measure
};

struct Grid {
  std::vector<Axis> axes;      // axes.front() is the slowest index
  std::size_t total_cells;
  double log_cell_const;       // log prior + sum of log cell widths
};

Grid build_grid(const QuadratureSpec& spec) {
  if (spec.points_per_dim < 8) {
    throw std::invalid_argument("QuadratureSpec: points_per_dim must be >= 8");
  }
  const std::size_t n = spec.points_per_dim;

  Grid grid;
  for (std::size_t kind_index = 0; kind_index < spec.space.kinds().size();
       ++kind_index) {
    const auto& kind = spec.space.kinds()[kind_index];
    if (const auto* sp = std::get_if<SphericalPair>(&kind)) {
      Axis theta{sp->theta_index, AxisRole::sphere_theta, {}, std::log(2.0 / double(n))};
      Axis phi{sp->phi_index, AxisRole::sphere_phi, {}, std::log(kTwoPi / double(n))};
      for (std::size_t k = 0; k < n; ++k) {
        const double t = -1.0 + (double(k) + 0.5) * 2.0 / double(n);
        theta.values.push_back(std::acos(std::clamp(t, -1.0, 1.0)));
        phi.values.push_back((double(k) + 0.5) * kTwoPi / double(n));
      }
      grid.axes.push_back(std::move(theta));
      grid.axes.push_back(std::move(phi));
    } else {
      double lo, hi;
      if (const auto* lin = std::get_if<Linear>(&kind)) {
        lo = lin->lo;
        hi = lin->hi;
      } else {
        const auto& c = std::get<Circular>(kind);
        lo = c.lo;
        hi = c.hi;
      }
      Axis ax{spec.space.interval_dimension(kind_index), AxisRole::interval,
              {}, std::log((hi - lo) / double(n))};
      for (std::size_t k = 0; k < n; ++k) {
        ax.values.push_back(lo + (double(k) + 0.5) * (hi - lo) / double(n));
      }
      grid.axes.push_back(std::move(ax));
    }
  }

  if (grid.axes.size() > 3) {
    throw std::invalid_argument(
        "QuadratureSpec: more than 3 effective integration dimensions");
  }
  std::size_t total = 1;
  for (const auto& ax : grid.axes) {
    if (total > kMaxCells / ax.values.size()) {
      throw std::invalid_argument("QuadratureSpec: grid larger than 1e8 cells");
    }
    total *= ax.values.size();
  }
  grid.total_cells = total;

  // Uniform priors are constant over the domain; read the density off the
  // first grid cell.
  Point first;
  first.coords.resize(spec.space.dimension());
  for (const auto& ax : grid.axes) first.coords[ax.dim] = ax.values.front();
  double log_const = spec.space.log_prior_density(first);
  for (const auto& ax : grid.axes) log_const += ax.log_width;
  grid.log_cell_const = log_const;
  return grid;
}

void fill_cell(const Grid& grid, std::size_t flat, Point& scratch) {
  for (std::size_t a = grid.axes.size(); a-- > 0;) {
    const auto& ax = grid.axes[a];
    scratch.coords[ax.dim] = ax.values[flat % ax.values.size()];
    flat /= ax.values.size();
  }
}

/// Streaming log-sum-exp with per-cell extra accumulators used for the
/// posterior moments; rescales the running sums whenever the max moves.
struct WeightedSums {
  double max_log = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;

  void add(double log_w, double v0, double v1) {
    if (log_w == -std::numeric_limits<double>::infinity()) return;
    if (log_w <= max_log) {
      const double w = std::exp(log_w - max_log);
      total += w;
      f0 += w * v0;
      f1 += w * v1;
    } else {
      const double scale = std::exp(max_log - log_w);
      total = total * scale + 1.0;
      f0 = f0 * scale + v0;
      f1 = f1 * scale + v1;
      max_log = log_w;
    }
  }

  void merge(const WeightedSums& o) {
    if (o.max_log == -std::numeric_limits<double>::infinity()) return;
    if (o.max_log <= max_log) {
      const double scale = std::exp(o.max_log - max_log);
      total += o.total * scale;
      f0 += o.f0 * scale;
      f1 += o.f1 * scale;
    } else {
      const double scale = std::exp(max_log - o.max_log);
      total = total * scale + o.total;
      f0 = f0 * scale + o.f0;
      f1 = f1 * scale + o.f1;
      max_log = o.max_log;
    }
  }

  double log_total() const {
    if (max_log == -std::numeric_limits<double>::infinity()) return max_log;
    return max_log + std::log(total);
  }
};

/// Evaluates all cells chunk by chunk (OpenMP across chunks) and merges the
/// per-chunk partial sums in chunk order, independent of the thread count.
template <typename PerCell>
WeightedSums chunked_reduce(const Grid& grid, const PerCell& per_cell,
                            std::size_t space_dim) {
  const std::size_t n_chunks = (grid.total_cells + kChunkCells - 1) / kChunkCells;
  std::vector<WeightedSums> partials(n_chunks);

#pragma omp parallel for schedule(static)
  for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
    Point scratch;
    scratch.coords.resize(space_dim);
    WeightedSums acc;
    const std::size_t begin = std::size_t(c) * kChunkCells;
    const std::size_t end = std::min(begin + kChunkCells, grid.total_cells);
    for (std::size_t flat = begin; flat < end; ++flat) {
      fill_cell(grid, flat, scratch);
      per_cell(scratch, acc);
    }
    partials[std::size_t(c)] = acc;
  }

  WeightedSums result;
  for (const auto& p : partials) result.merge(p);
  return result;
}

}  // namespace

double grid_log_evidence(const QuadratureSpec& spec,
                         const LogLikelihoodFn& log_l) {
  const Grid grid = build_grid(spec);
  const double log_cell_const = grid.log_cell_const;
  const WeightedSums sums = chunked_reduce(
      grid,
      [&](const Point& p, WeightedSums& acc) {
        acc.add(log_l(p) + log_cell_const, 0.0, 0.0);
      },
      spec.space.dimension());
  return sums.log_total();
}

double grid_log_evidence_serial(const QuadratureSpec& spec,
                                const LogLikelihoodFn& log_l) {
  const Grid grid = build_grid(spec);
  Point scratch;
  scratch.coords.resize(spec.space.dimension());
  WeightedSums acc;
  for (std::size_t flat = 0; flat < grid.total_cells; ++flat) {
    fill_cell(grid, flat, scratch);
    acc.add(log_l(scratch) + grid.log_cell_const, 0.0, 0.0);
  }
  return acc.log_total();
}

double grid_posterior_moment(const QuadratureSpec& spec,
                             const LogLikelihoodFn& log_l,
                             std::size_t dimension, MomentKind kind) {
  const Grid grid = build_grid(spec);
  const Axis* axis = nullptr;
  for (const auto& ax : grid.axes) {
    if (ax.dim == dimension) axis = &ax;
  }
  if (axis == nullptr) {
    throw std::invalid_argument("grid_posterior_moment: no such dimension");
  }

  bool dim_is_circular = axis->role == AxisRole::sphere_phi;
  double lo = 0.0, width = kTwoPi;  // circular-mean angle mapping
  if (axis->role == AxisRole::interval) {
    for (std::size_t i = 0; i < spec.space.kinds().size(); ++i) {
      const auto* c = std::get_if<Circular>(&spec.space.kinds()[i]);
      if (c != nullptr && spec.space.interval_dimension(i) == dimension) {
        dim_is_circular = true;
        lo = c->lo;
        width = c->hi - c->lo;
      }
    }
  }
  if ((kind == MomentKind::circular_mean) != dim_is_circular) {
    throw std::invalid_argument(
        "grid_posterior_moment: moment kind does not match the dimension's "
        "geometry");
  }

  const double log_cell_const = grid.log_cell_const;
  WeightedSums sums;
  if (kind == MomentKind::linear_mean) {
    sums = chunked_reduce(
        grid,
        [&](const Point& p, WeightedSums& acc) {
          acc.add(log_l(p) + log_cell_const, p.coords[dimension], 0.0);
        },
        spec.space.dimension());
    return sums.f0 / sums.total;
  }

  sums = chunked_reduce(
      grid,
      [&](const Point& p, WeightedSums& acc) {
        const double ang = (p.coords[dimension] - lo) / width * kTwoPi;
        acc.add(log_l(p) + log_cell_const, std::sin(ang), std::cos(ang));
      },
      spec.space.dimension());
  double mean_angle = std::atan2(sums.f0, sums.f1);
  if (mean_angle < 0.0) mean_angle += kTwoPi;
  if (mean_angle >= kTwoPi) mean_angle = 0.0;
  return lo + mean_angle / kTwoPi * width;
}

}  // namespace gns
