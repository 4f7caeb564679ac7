#pragma once

#include <cstdint>
#include <vector>

#include "rcum/bell.hpp"
#include "rcum/mc.hpp"
#include "rcum/path.hpp"
#include "rcum/report.hpp"
#include "rcum/simulate.hpp"

namespace rcum {

// Sum over cells in [t_start, T] of dX^{(i)} dX^{(j)}. With continuous_part
// the recorded jump increments inside each cell are removed from both
// factors first; that requires the path to carry jump information. Component
// indices are 1-based.
double realized_covariation(const MultiPath& path, int i, int j,
                            bool continuous_part, double t_start);
double realized_covariation(const MultiPath& path, int i, int j,
                            bool continuous_part);

// Sum over jump marks with time in (t_start, T] of g_n(jump increment).
double jump_term(const MultiPath& path, int n, double t_start,
                 int max_order = kDefaultMaxOrder);

struct RecursionParts {
  double jump = 0.0;
  double bracket = 0.0;

  double total() const { return jump + bracket; }
};

// High-frequency right-hand side for X^{(n+1)}_{t_start}:
//   jump_term + (1/2) sum_j C(n+1,j) <X^{(n+1-j),c}, X^{(j),c}>
// with the bracket realized on the path's grid over [t_start, T].
RecursionParts recursion_rhs(const MultiPath& path, int n, double t_start,
                             int max_order = kDefaultMaxOrder);

// Rescaling factors mapping the quadratic coefficients to the Y = X/j! form
// Y^{(n+1)} = (1/2) sum_j Y^{(n+1-j)} <> Y^{(j)}; algebraically all 1.
std::vector<double> diamond_scaling(int n, int max_order = kDefaultMaxOrder);

// Discretization-bias constant C per model; the pass gate allows C/grid_size
// on top of the z*se band. Calibrated by grid-doubling pilot runs.
double default_bias_constant(SimulatorKind kind);

// Monte Carlo mean of recursion_rhs at t_start = 0 against the closed-form
// X^{(n+1)}_0, with jump/bracket subtotals reported.
VerificationReport recursion_check(const SimulatorSpec& spec, int n,
                                   std::size_t n_paths, int grid_size,
                                   std::uint64_t seed,
                                   const McOptions& opts = {},
                                   double bias_constant = -1.0);

}  // namespace rcum
