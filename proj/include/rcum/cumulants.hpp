#pragma once

#include <vector>

#include "rcum/bell.hpp"

namespace rcum {

// Raw moments (m_1,...,m_n). The distributional flag turns on the variance
// check m_2 >= m_1^2; node-level intermediate vectors leave it off.
struct MomentVector {
  std::vector<double> values;
  bool distributional = false;

  int order() const { return static_cast<int>(values.size()); }
  void validate() const;
};

// Cumulants (kappa_1,...,kappa_n).
struct CumulantVector {
  std::vector<double> values;

  int order() const { return static_cast<int>(values.size()); }
};

// m_j = B_j(kappa_1,...,kappa_j) for j = 1..n.
MomentVector cumulants_to_moments(const CumulantVector& k,
                                  int max_order = kDefaultMaxOrder);

// kappa_1 = m_1; kappa_n = m_n - B_n(kappa_1,...,kappa_{n-1},0).
CumulantVector moments_to_cumulants(const MomentVector& m,
                                    int max_order = kDefaultMaxOrder);

// Same conversion; the name marks call sites whose inputs are conditional
// moments E[X^k | G] of one filtration node.
CumulantVector conditional_cumulants_from_moments(
    const MomentVector& node_moments, int max_order = kDefaultMaxOrder);

}  // namespace rcum
