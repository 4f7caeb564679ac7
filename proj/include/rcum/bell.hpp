#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rcum {

// Default cap on polynomial order. Binomials and partition coefficients stay
// exact in signed 64-bit integers with ample margin at this order; every
// integer operation is overflow-checked regardless.
inline constexpr int kDefaultMaxOrder = 12;

// Exact C(n,k); throws CapacityError once entries leave the 64-bit range.
std::int64_t binomial(int n, int k);

// Exact n!; throws CapacityError for n > 20.
std::int64_t factorial(int n);

// B_0,...,B_n for x = (x_1,...,x_n) via the derivative recurrence
//   B_{m+1} = sum_{k=0}^{m} C(m,k) B_{m-k} x_{k+1},   B_0 = 1.
std::vector<double> bell_sequence(std::span<const double> x,
                                  int max_order = kDefaultMaxOrder);

// B_n(x_1,...,x_n) with n = x.size(). Throws CapacityError if n > max_order.
double bell_value(std::span<const double> x, int max_order = kDefaultMaxOrder);

// g_n(dx) = B_{n+1}(dx_1,...,dx_n,0). Requires dx.size() == n and
// n <= max_order - 1.
double g_value(int n, std::span<const double> dx,
               int max_order = kDefaultMaxOrder);

// One monomial of the expansion of B_n: coefficient * prod_i x_i^{e_i}.
struct BellTerm {
  std::int64_t coefficient = 0;
  std::vector<int> exponents;  // exponents[i-1] = e_i; sum_i i*e_i = n
};

// Exact expansion of B_n, one term per integer partition of n. The
// coefficient of prod_i x_i^{e_i} is n! / prod_i (i!)^{e_i} e_i!.
std::vector<BellTerm> bell_terms(int n, int max_order = kDefaultMaxOrder);

double evaluate_terms(std::span<const BellTerm> terms,
                      std::span<const double> x);

// Sum of the coefficients of bell_terms(n) = B_n(1,...,1), the n-th Bell
// number.
std::int64_t bell_number(int n, int max_order = kDefaultMaxOrder);

// Coefficient (1/2) C(n+1,j) of the quadratic monomial x_{n+1-j} x_j inside
// B_{n+1}, kept as an exact rational over denominator 2.
struct QuadraticCoefficient {
  int left = 0;   // component index n+1-j
  int right = 0;  // component index j
  std::int64_t numerator = 0;  // C(n+1,j)
  std::int64_t denominator = 2;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

// The n coefficients for j = 1..n, in that order.
std::vector<QuadraticCoefficient> quadratic_part_coefficients(
    int n, int max_order = kDefaultMaxOrder);

}  // namespace rcum
