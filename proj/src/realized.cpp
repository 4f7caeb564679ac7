#include "rcum/realized.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rcum/numeric.hpp"

namespace rcum {

namespace {

void require_components(const MultiPath& path, int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (path.order() < n) {
    throw std::invalid_argument(std::string(what) + ": path has " +
                                std::to_string(path.order()) +
                                " components, needs " + std::to_string(n));
  }
}

}  // namespace

RealizedStatistic realized_cumulant(const MultiPath& path, int n,
                                    int max_order) {
  require_components(path, n, "realized_cumulant");

  RealizedStatistic stat;
  stat.order = n + 1;
  stat.grid = path.grid;
  if (path.points() < 2) return stat;  // degenerate partition: empty sum

  std::vector<double> dx(static_cast<std::size_t>(n));
  stat.contributions.reserve(path.points() - 1);
  StableSum total;
  for (std::size_t j = 1; j < path.points(); ++j) {
    for (int i = 0; i < n; ++i) {
      dx[i] = path.components[i][j] - path.components[i][j - 1];
    }
    const double cell = g_value(n, dx, max_order);
    stat.contributions.push_back(cell);
    total.add(cell);
  }
  stat.value = total.value();
  return stat;
}

double conditional_expected_g(const TreeModel& model, const CumulantTree& ct,
                              int n, int s, int node, int a, int b,
                              int max_order) {
  if (!(0 <= s && s <= a && a <= b && b <= model.depth)) {
    throw std::invalid_argument("conditional_expected_g: need s <= a <= b <= depth");
  }
  if (ct.order < n) {
    throw std::invalid_argument("conditional_expected_g: cumulant tree order too small");
  }
  std::vector<double> dx(static_cast<std::size_t>(n));
  StableSum acc;
  for (const TreeScenario& sc : enumerate_scenarios(model, s, node, b)) {
    const CumulantVector& at_a = ct.cumulants[a][sc.nodes[a - s]];
    const CumulantVector& at_b = ct.cumulants[b][sc.nodes[b - s]];
    for (int i = 0; i < n; ++i) {
      dx[i] = at_b.values[i] - at_a.values[i];
    }
    acc.add(sc.probability * g_value(n, dx, max_order));
  }
  return acc.value();
}

double expected_realized_cumulant_partition(const TreeModel& model,
                                            const CumulantTree& ct, int n,
                                            std::span<const int> partition,
                                            int max_order) {
  if (partition.empty()) {
    throw std::invalid_argument("expected_realized_cumulant: empty partition");
  }
  for (std::size_t j = 0; j < partition.size(); ++j) {
    if (partition[j] < 0 || partition[j] > model.depth) {
      throw std::invalid_argument("expected_realized_cumulant: partition time out of range");
    }
    if (j > 0 && partition[j] <= partition[j - 1]) {
      throw std::invalid_argument("expected_realized_cumulant: partition not increasing");
    }
  }
  if (ct.order < n) {
    throw std::invalid_argument("expected_realized_cumulant: cumulant tree order too small");
  }

  std::vector<double> dx(static_cast<std::size_t>(n));
  StableSum acc;
  for (int r = 0; r < model.nodes_at(0); ++r) {
    const double mass = model.masses[0][r];
    for (const TreeScenario& sc : enumerate_scenarios(model, 0, r, model.depth)) {
      StableSum path_sum;
      for (std::size_t j = 1; j < partition.size(); ++j) {
        const CumulantVector& prev = ct.cumulants[partition[j - 1]][sc.nodes[partition[j - 1]]];
        const CumulantVector& curr = ct.cumulants[partition[j]][sc.nodes[partition[j]]];
        for (int i = 0; i < n; ++i) {
          dx[i] = curr.values[i] - prev.values[i];
        }
        path_sum.add(g_value(n, dx, max_order));
      }
      acc.add(mass * sc.probability * path_sum.value());
    }
  }
  return acc.value();
}

double expected_realized_cumulant_tree(const TreeModel& model,
                                       const CumulantTree& ct, int n,
                                       int t_start, int max_order) {
  if (t_start < 0 || t_start > model.depth) {
    throw std::invalid_argument("expected_realized_cumulant: t_start out of range");
  }
  std::vector<int> partition;
  for (int t = t_start; t <= model.depth; ++t) partition.push_back(t);
  return expected_realized_cumulant_partition(model, ct, n, partition,
                                              max_order);
}

VerificationReport aggregation_check_tree(const TreeModel& model,
                                          const CumulantTree& ct, int n, int s,
                                          int t, int u, double abs_tol,
                                          int max_order) {
  if (!(0 <= s && s <= t && t <= u && u <= model.depth)) {
    throw std::invalid_argument("aggregation_check_tree: need s <= t <= u <= depth");
  }
  double worst = 0.0;
  for (int node = 0; node < model.nodes_at(s); ++node) {
    const double whole = conditional_expected_g(model, ct, n, s, node, s, u, max_order);
    const double left = conditional_expected_g(model, ct, n, s, node, s, t, max_order);
    const double right = conditional_expected_g(model, ct, n, s, node, t, u, max_order);
    worst = std::max(worst, std::abs(whole - (left + right)));
  }
  VerificationReport r = exact_check(
      "aggregation n=" + std::to_string(n) + " (s,t,u)=(" + std::to_string(s) +
          "," + std::to_string(t) + "," + std::to_string(u) + ")",
      worst, 0.0, abs_tol, static_cast<std::size_t>(model.nodes_at(s)));
  return r;
}

double increment_identity_residual_tree(const TreeModel& model,
                                        const CumulantTree& ct, int n, int t,
                                        int u, int max_order) {
  if (!(0 <= t && t <= u && u <= model.depth)) {
    throw std::invalid_argument("increment_identity_residual_tree: need t <= u <= depth");
  }
  if (ct.order < n + 1) {
    throw std::invalid_argument("increment_identity_residual_tree: cumulant tree order too small");
  }
  double worst = 0.0;
  for (int node = 0; node < model.nodes_at(t); ++node) {
    const double g_exp = conditional_expected_g(model, ct, n, t, node, t, u, max_order);
    StableSum increment;  // E[X^{(n+1)}_u | node] - X^{(n+1)}_t
    for (const TreeScenario& sc : enumerate_scenarios(model, t, node, u)) {
      increment.add(sc.probability * ct.cumulants[u][sc.nodes.back()].values[n]);
    }
    const double kappa_increment =
        increment.value() - ct.cumulants[t][node].values[n];
    worst = std::max(worst, std::abs(g_exp + kappa_increment));
  }
  return worst;
}

double bell_increment_residual_tree(const TreeModel& model,
                                    const CumulantTree& ct, int k_max,
                                    int max_order) {
  if (k_max < 1 || k_max > ct.order) {
    throw std::invalid_argument("bell_increment_residual_tree: k_max out of range");
  }
  double worst = 0.0;
  std::vector<double> dx;
  for (int t = 0; t <= model.depth; ++t) {
    for (int node = 0; node < model.nodes_at(t); ++node) {
      for (int u = t; u <= model.depth; ++u) {
        const auto scenarios = enumerate_scenarios(model, t, node, u);
        for (int k = 1; k <= k_max; ++k) {
          dx.resize(static_cast<std::size_t>(k));
          StableSum acc;
          for (const TreeScenario& sc : scenarios) {
            const CumulantVector& from = ct.cumulants[t][node];
            const CumulantVector& to = ct.cumulants[u][sc.nodes.back()];
            for (int i = 0; i < k; ++i) {
              dx[i] = to.values[i] - from.values[i];
            }
            acc.add(sc.probability * bell_value(dx, max_order));
          }
          worst = std::max(worst, std::abs(acc.value()));
        }
      }
    }
  }
  return worst;
}

VerificationReport unbiasedness_mc(const SimulatorSpec& spec, int n,
                                   std::size_t n_paths, int grid_size,
                                   std::uint64_t seed, const McOptions& opts) {
  if (n_paths == 0) throw std::invalid_argument("unbiasedness_mc: no paths");
  const double target = terminal_cumulant(spec, n + 1);
  const std::vector<double> values =
      mc_collect(n_paths, opts.threads, [&](std::uint64_t path_id) {
        const MultiPath path = simulate_path(spec, n, grid_size, seed, path_id);
        return realized_cumulant(path, n).value;
      });
  const SampleStats stats = summarize(values);
  return mc_check("unbiased " + std::string(simulator_name(spec.kind)) +
                      " n=" + std::to_string(n),
                  stats.mean, target, stats.standard_error, stats.n,
                  opts.z_gate, opts.abs_tol);
}

}  // namespace rcum
