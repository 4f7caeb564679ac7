#include "rcum/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rcum/cumulants.hpp"

namespace rcum {

namespace {

void check_args(double horizon, int grid_size, int order) {
  if (!(horizon > 0.0)) throw std::invalid_argument("simulate: horizon must be > 0");
  if (grid_size < 1) throw std::invalid_argument("simulate: grid_size must be >= 1");
  if (order < 1) throw std::invalid_argument("simulate: order must be >= 1");
}

std::vector<double> uniform_grid(double horizon, int grid_size) {
  std::vector<double> grid(static_cast<std::size_t>(grid_size) + 1);
  for (int j = 0; j <= grid_size; ++j) {
    grid[j] = horizon * static_cast<double>(j) / static_cast<double>(grid_size);
  }
  return grid;
}

}  // namespace

MultiPath simulate_poisson_martingale(double lambda, double horizon,
                                      int grid_size, int order, PathRng& rng) {
  check_args(horizon, grid_size, order);
  if (lambda < 0.0) throw std::invalid_argument("simulate: lambda must be >= 0");

  MultiPath path;
  path.grid = uniform_grid(horizon, grid_size);
  path.components.assign(static_cast<std::size_t>(order),
                         std::vector<double>(path.grid.size()));
  path.jumps.emplace();

  std::vector<double> jump_times;
  if (lambda > 0.0) {
    double s = rng.exponential(lambda);
    while (s <= horizon) {
      jump_times.push_back(s);
      s += rng.exponential(lambda);
    }
  }

  std::vector<double> increment(static_cast<std::size_t>(order), 0.0);
  increment[0] = 1.0;  // N jumps by one; the compensator is continuous
  for (double s : jump_times) {
    path.jumps->push_back({s, increment});
  }

  std::size_t counted = 0;
  for (std::size_t j = 0; j < path.grid.size(); ++j) {
    const double t = path.grid[j];
    while (counted < jump_times.size() && jump_times[counted] <= t) ++counted;
    path.components[0][j] = static_cast<double>(counted) - lambda * t;
    for (int k = 2; k <= order; ++k) {
      path.components[k - 1][j] = lambda * (horizon - t);
    }
  }
  return path;
}

MultiPath simulate_exponential_martingale(double horizon, int grid_size,
                                          int order, PathRng& rng) {
  check_args(horizon, grid_size, order);

  MultiPath path;
  path.grid = uniform_grid(horizon, grid_size);
  path.components.assign(static_cast<std::size_t>(order),
                         std::vector<double>(path.grid.size()));
  path.jumps.emplace();  // continuous filtration

  const double dt = horizon / static_cast<double>(grid_size);
  const double sqrt_dt = std::sqrt(dt);

  double w = 0.0;
  MomentVector moments;
  moments.values.resize(static_cast<std::size_t>(order));
  for (std::size_t j = 0; j < path.grid.size(); ++j) {
    if (j > 0) w += sqrt_dt * rng.normal();
    const double t = path.grid[j];
    const double m = std::exp(w - 0.5 * t);
    double m_power = 1.0;
    for (int k = 1; k <= order; ++k) {
      m_power *= m;
      moments.values[k - 1] =
          m_power * std::exp(0.5 * static_cast<double>(k) *
                             static_cast<double>(k - 1) * (horizon - t));
    }
    const CumulantVector kappa = moments_to_cumulants(moments);
    for (int k = 0; k < order; ++k) {
      path.components[k][j] = kappa.values[k];
    }
  }
  return path;
}

MultiPath simulate_brownian_martingale(double horizon, int grid_size,
                                       int order, PathRng& rng) {
  check_args(horizon, grid_size, order);

  MultiPath path;
  path.grid = uniform_grid(horizon, grid_size);
  path.components.assign(static_cast<std::size_t>(order),
                         std::vector<double>(path.grid.size()));
  path.jumps.emplace();

  const double dt = horizon / static_cast<double>(grid_size);
  const double sqrt_dt = std::sqrt(dt);

  double w = 0.0;
  for (std::size_t j = 0; j < path.grid.size(); ++j) {
    if (j > 0) w += sqrt_dt * rng.normal();
    path.components[0][j] = w;
    if (order >= 2) path.components[1][j] = horizon - path.grid[j];
  }
  return path;
}

MultiPath simulate_poisson_martingale(double lambda, double horizon,
                                      int grid_size, int order,
                                      std::uint64_t seed) {
  PathRng rng(seed, 0);
  return simulate_poisson_martingale(lambda, horizon, grid_size, order, rng);
}

MultiPath simulate_exponential_martingale(double horizon, int grid_size,
                                          int order, std::uint64_t seed) {
  PathRng rng(seed, 0);
  return simulate_exponential_martingale(horizon, grid_size, order, rng);
}

MultiPath simulate_brownian_martingale(double horizon, int grid_size,
                                       int order, std::uint64_t seed) {
  PathRng rng(seed, 0);
  return simulate_brownian_martingale(horizon, grid_size, order, rng);
}

MultiPath simulate_path(const SimulatorSpec& spec, int order, int grid_size,
                        std::uint64_t seed, std::uint64_t path_id) {
  PathRng rng(seed, path_id);
  switch (spec.kind) {
    case SimulatorKind::poisson:
      return simulate_poisson_martingale(spec.lambda, spec.horizon, grid_size,
                                         order, rng);
    case SimulatorKind::expmart:
      return simulate_exponential_martingale(spec.horizon, grid_size, order,
                                             rng);
    case SimulatorKind::brownian:
      return simulate_brownian_martingale(spec.horizon, grid_size, order, rng);
  }
  throw std::invalid_argument("simulate_path: unknown simulator kind");
}

double terminal_cumulant(const SimulatorSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("terminal_cumulant: k must be >= 1");
  switch (spec.kind) {
    case SimulatorKind::poisson:
      return k == 1 ? 0.0 : spec.lambda * spec.horizon;
    case SimulatorKind::brownian:
      if (k == 1) return 0.0;
      return k == 2 ? spec.horizon : 0.0;
    case SimulatorKind::expmart: {
      // Lognormal terminal law: E[X^j] = exp(j(j-1)T/2).
      MomentVector m;
      m.values.resize(static_cast<std::size_t>(k));
      for (int j = 1; j <= k; ++j) {
        m.values[j - 1] = std::exp(0.5 * static_cast<double>(j) *
                                   static_cast<double>(j - 1) * spec.horizon);
      }
      return moments_to_cumulants(m).values[k - 1];
    }
  }
  throw std::invalid_argument("terminal_cumulant: unknown simulator kind");
}

const char* simulator_name(SimulatorKind kind) {
  switch (kind) {
    case SimulatorKind::poisson: return "poisson";
    case SimulatorKind::expmart: return "expmart";
    case SimulatorKind::brownian: return "brownian";
  }
  return "unknown";
}

SimulatorKind simulator_kind_from_name(std::string_view name) {
  if (name == "poisson") return SimulatorKind::poisson;
  if (name == "expmart") return SimulatorKind::expmart;
  if (name == "brownian") return SimulatorKind::brownian;
  throw std::invalid_argument("unknown simulator model '" + std::string(name) +
                              "' (expected poisson, expmart or brownian)");
}

}  // namespace rcum
