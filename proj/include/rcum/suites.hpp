#pragma once

#include <cstdint>
#include <vector>

#include "rcum/report.hpp"
#include "rcum/tree.hpp"

namespace rcum {

// Deterministic identity checks for the Bell machinery: binomial relation,
// decomposition, homogeneity, recurrence-vs-partition-oracle equivalence,
// Bell-number coefficient sums and the quadratic slice. Estimates are worst
// relative residuals over random trials.
std::vector<VerificationReport> bell_identities_suite(std::uint64_t seed,
                                                      int max_n = 8,
                                                      int trials = 100,
                                                      double rel_tol = 1e-10);

// Exact checks on one finite tree: conditional-increment mean-zero residuals
// (k <= max_n + 1), the aggregation identity over all (s,t,u) triples for
// n <= max_n, realized-cumulant expectations against root cumulants, and
// partition refinement invariance.
std::vector<VerificationReport> tree_exact_suite(const TreeModel& model,
                                                 int max_n = 3,
                                                 double abs_tol = 1e-12);

}  // namespace rcum
