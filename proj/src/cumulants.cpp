#include "rcum/cumulants.hpp"

#include <stdexcept>

#include "rcum/errors.hpp"

namespace rcum {

void MomentVector::validate() const {
  if (distributional && order() >= 2) {
    if (values[1] < values[0] * values[0]) {
      throw std::invalid_argument(
          "MomentVector: m_2 < m_1^2 violates variance nonnegativity");
    }
  }
}

MomentVector cumulants_to_moments(const CumulantVector& k, int max_order) {
  MomentVector m;
  if (k.order() == 0) return m;
  const std::vector<double> b = bell_sequence(k.values, max_order);
  m.values.assign(b.begin() + 1, b.end());
  return m;
}

CumulantVector moments_to_cumulants(const MomentVector& m, int max_order) {
  m.validate();
  CumulantVector k;
  const int n = m.order();
  if (n == 0) return k;
  if (n > max_order) {
    throw CapacityError("moments_to_cumulants: order exceeds maximum");
  }
  k.values.reserve(static_cast<std::size_t>(n));
  k.values.push_back(m.values[0]);
  std::vector<double> padded;
  for (int j = 2; j <= n; ++j) {
    padded.assign(k.values.begin(), k.values.end());
    padded.push_back(0.0);
    k.values.push_back(m.values[j - 1] - bell_value(padded, max_order));
  }
  return k;
}

CumulantVector conditional_cumulants_from_moments(
    const MomentVector& node_moments, int max_order) {
  return moments_to_cumulants(node_moments, max_order);
}

}  // namespace rcum
