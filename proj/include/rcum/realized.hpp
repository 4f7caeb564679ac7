#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcum/mc.hpp"
#include "rcum/path.hpp"
#include "rcum/report.hpp"
#include "rcum/simulate.hpp"
#include "rcum/tree.hpp"

namespace rcum {

// The (n+1)-th realized cumulant: sum over grid cells of
// g_n(X^{(1..n)}_{t_j} - X^{(1..n)}_{t_{j-1}}), per-cell values retained.
struct RealizedStatistic {
  int order = 0;  // n+1
  double value = 0.0;
  std::vector<double> contributions;
  std::vector<double> grid;
};

// n=1 is the realized variance, n=2 realized skewness, n=3 realized
// kurtosis. A single-point grid yields value 0 with no contributions.
RealizedStatistic realized_cumulant(const MultiPath& path, int n,
                                    int max_order = kDefaultMaxOrder);

// E[g_n(X_{a,b}) | node at time s] by exact scenario enumeration, s <= a <= b.
double conditional_expected_g(const TreeModel& model, const CumulantTree& ct,
                              int n, int s, int node, int a, int b,
                              int max_order = kDefaultMaxOrder);

// Expectation over all tree paths of the realized statistic on an integer
// sub-partition of {0..depth}; partition must be strictly increasing.
double expected_realized_cumulant_partition(const TreeModel& model,
                                            const CumulantTree& ct, int n,
                                            std::span<const int> partition,
                                            int max_order = kDefaultMaxOrder);

// Full partition {t_start, t_start+1, ..., depth}. Equals the mass-weighted
// average of X^{(n+1)} over the time-t_start nodes; at t_start = 0 with a
// single root this is the (n+1)-th cumulant of X.
double expected_realized_cumulant_tree(const TreeModel& model,
                                       const CumulantTree& ct, int n,
                                       int t_start,
                                       int max_order = kDefaultMaxOrder);

// Aggregation identity over (s,t,u): checks
//   E[g_n(X_{s,u})|node] = E[g_n(X_{s,t})|node] + E[g_n(X_{t,u})|node]
// at every time-s node; reports the worst residual with standard_error 0.
VerificationReport aggregation_check_tree(const TreeModel& model,
                                          const CumulantTree& ct, int n, int s,
                                          int t, int u, double abs_tol = 1e-12,
                                          int max_order = kDefaultMaxOrder);

// max over time-t nodes of |E[g_n(X_{t,u})|node] + E[X^{(n+1)}_{t,u}|node]|.
double increment_identity_residual_tree(const TreeModel& model,
                                        const CumulantTree& ct, int n, int t,
                                        int u, int max_order = kDefaultMaxOrder);

// max over t <= u, nodes and 1 <= k <= k_max of |E[B_k(X_{t,u})|node]|.
double bell_increment_residual_tree(const TreeModel& model,
                                    const CumulantTree& ct, int k_max,
                                    int max_order = kDefaultMaxOrder);

// Monte Carlo mean of the (n+1)-th realized cumulant against the closed-form
// kappa_{n+1} of the model. There is no discretization bias: the statistic
// is unbiased at any grid.
VerificationReport unbiasedness_mc(const SimulatorSpec& spec, int n,
                                   std::size_t n_paths, int grid_size,
                                   std::uint64_t seed,
                                   const McOptions& opts = {});

}  // namespace rcum
