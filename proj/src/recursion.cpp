#include "rcum/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rcum/numeric.hpp"

namespace rcum {

namespace {

void require_component(const MultiPath& path, int i, const char* what) {
  if (i < 1 || i > path.order()) {
    throw std::invalid_argument(std::string(what) + ": component index " +
                                std::to_string(i) + " out of range");
  }
}

// Per-cell sum of recorded jump increments of one component; cell c is
// (grid[c-1], grid[c]].
std::vector<double> cell_jump_sums(const MultiPath& path, int component) {
  std::vector<double> sums(path.points() > 0 ? path.points() - 1 : 0, 0.0);
  for (const JumpMark& mark : *path.jumps) {
    const auto it =
        std::lower_bound(path.grid.begin(), path.grid.end(), mark.time);
    const std::size_t cell = static_cast<std::size_t>(it - path.grid.begin());
    if (cell == 0 || cell > sums.size()) continue;  // validate() excludes this
    if (static_cast<int>(mark.increment.size()) < component) {
      throw std::invalid_argument("jump mark carries fewer components than the path");
    }
    sums[cell - 1] += mark.increment[component - 1];
  }
  return sums;
}

std::size_t first_cell_at(const MultiPath& path, double t_start) {
  // Cells whose left endpoint is >= t_start; t_start is expected to be a
  // grid point, matched up to a small absolute slack.
  const double slack = 1e-12 * std::max(1.0, std::abs(t_start));
  std::size_t c = 1;
  while (c < path.points() && path.grid[c - 1] < t_start - slack) ++c;
  return c;
}

}  // namespace

double realized_covariation(const MultiPath& path, int i, int j,
                            bool continuous_part, double t_start) {
  require_component(path, i, "realized_covariation");
  require_component(path, j, "realized_covariation");
  if (continuous_part && !path.jumps) {
    throw std::invalid_argument(
        "realized_covariation: continuous part requested but the path has no "
        "jump information");
  }
  if (path.points() < 2) return 0.0;

  std::vector<double> jump_i;
  std::vector<double> jump_j;
  if (continuous_part) {
    jump_i = cell_jump_sums(path, i);
    jump_j = cell_jump_sums(path, j);
  }

  StableSum acc;
  for (std::size_t c = first_cell_at(path, t_start); c < path.points(); ++c) {
    double dx_i = path.components[i - 1][c] - path.components[i - 1][c - 1];
    double dx_j = path.components[j - 1][c] - path.components[j - 1][c - 1];
    if (continuous_part) {
      dx_i -= jump_i[c - 1];
      dx_j -= jump_j[c - 1];
    }
    acc.add(dx_i * dx_j);
  }
  return acc.value();
}

double realized_covariation(const MultiPath& path, int i, int j,
                            bool continuous_part) {
  const double t0 = path.grid.empty() ? 0.0 : path.grid.front();
  return realized_covariation(path, i, j, continuous_part, t0);
}

double jump_term(const MultiPath& path, int n, double t_start, int max_order) {
  if (!path.jumps) {
    throw std::invalid_argument("jump_term: path has no jump information");
  }
  if (n < 1) throw std::invalid_argument("jump_term: n must be >= 1");
  StableSum acc;
  std::vector<double> dx(static_cast<std::size_t>(n));
  for (const JumpMark& mark : *path.jumps) {
    if (!(mark.time > t_start)) continue;
    if (static_cast<int>(mark.increment.size()) < n) {
      throw std::invalid_argument("jump_term: mark carries fewer than n components");
    }
    for (int i = 0; i < n; ++i) dx[i] = mark.increment[i];
    acc.add(g_value(n, dx, max_order));
  }
  return acc.value();
}

RecursionParts recursion_rhs(const MultiPath& path, int n, double t_start,
                             int max_order) {
  if (path.order() < n) {
    throw std::invalid_argument("recursion_rhs: path has fewer than n components");
  }
  RecursionParts parts;
  parts.jump = jump_term(path, n, t_start, max_order);
  StableSum bracket;
  for (const QuadraticCoefficient& qc :
       quadratic_part_coefficients(n, max_order)) {
    bracket.add(qc.value() * realized_covariation(path, qc.left, qc.right,
                                                  /*continuous_part=*/true,
                                                  t_start));
  }
  parts.bracket = bracket.value();
  return parts;
}

std::vector<double> diamond_scaling(int n, int max_order) {
  if (n < 1) throw std::invalid_argument("diamond_scaling: n must be >= 1");
  std::vector<double> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (const QuadraticCoefficient& qc :
       quadratic_part_coefficients(n, max_order)) {
    // (n+1)! / ((n+1-j)! j!) against C(n+1,j), both exact integers.
    const std::int64_t multinomial =
        factorial(n + 1) / (factorial(qc.left) * factorial(qc.right));
    factors.push_back(static_cast<double>(multinomial) /
                      static_cast<double>(qc.numerator));
  }
  return factors;
}

double default_bias_constant(SimulatorKind kind) {
  // Calibrated by grid-doubling pilot runs at lambda = T = 1.
  switch (kind) {
    case SimulatorKind::brownian: return 0.0;   // realized bracket is unbiased
    case SimulatorKind::poisson: return 5.0;    // drift residue 3*lambda^2*T^2
    case SimulatorKind::expmart: return 30.0;   // omitted (dM)^3 sum ~ 19/N at T=1
  }
  return 0.0;
}

VerificationReport recursion_check(const SimulatorSpec& spec, int n,
                                   std::size_t n_paths, int grid_size,
                                   std::uint64_t seed, const McOptions& opts,
                                   double bias_constant) {
  if (n_paths == 0) throw std::invalid_argument("recursion_check: no paths");
  const double target = terminal_cumulant(spec, n + 1);
  const double c =
      bias_constant < 0.0 ? default_bias_constant(spec.kind) : bias_constant;
  const double allowance = c / static_cast<double>(grid_size);

  const auto columns = mc_collect_multi(
      n_paths, opts.threads, 3,
      [&](std::uint64_t path_id, std::span<double> out) {
        const MultiPath path = simulate_path(spec, n, grid_size, seed, path_id);
        const RecursionParts parts = recursion_rhs(path, n, path.grid.front());
        out[0] = parts.total();
        out[1] = parts.jump;
        out[2] = parts.bracket;
      });
  const SampleStats total = summarize(columns[0]);
  const SampleStats jump = summarize(columns[1]);
  const SampleStats bracket = summarize(columns[2]);

  VerificationReport r = mc_check(
      "recursion " + std::string(simulator_name(spec.kind)) +
          " n=" + std::to_string(n),
      total.mean, target, total.standard_error, total.n, opts.z_gate,
      opts.abs_tol, allowance);
  r.extras.emplace_back("jump_mean", jump.mean);
  r.extras.emplace_back("bracket_mean", bracket.mean);
  r.extras.emplace_back("grid_size", static_cast<double>(grid_size));
  r.extras.emplace_back("bias_constant", c);
  return r;
}

}  // namespace rcum
