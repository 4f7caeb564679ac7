#include "rcum/bell.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "rcum/errors.hpp"

namespace rcum {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError("64-bit overflow in exact integer addition");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError("64-bit overflow in exact integer multiplication");
  }
  return r;
}

// Rows 0..66 of Pascal's triangle are the largest that fit in int64.
constexpr int kBinomialRows = 67;

const std::vector<std::vector<std::int64_t>>& pascal_table() {
  static const std::vector<std::vector<std::int64_t>> table = [] {
    std::vector<std::vector<std::int64_t>> t(kBinomialRows);
    for (int n = 0; n < kBinomialRows; ++n) {
      t[n].resize(static_cast<std::size_t>(n) + 1);
      t[n][0] = t[n][n] = 1;
      for (int k = 1; k < n; ++k) {
        t[n][k] = checked_add(t[n - 1][k - 1], t[n - 1][k]);
      }
    }
    return t;
  }();
  return table;
}

std::int64_t checked_factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

void require_order(int n, int max_order, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": order must be >= 1");
  }
  if (n > max_order) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(n) +
                        " exceeds configured maximum " +
                        std::to_string(max_order));
  }
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= kBinomialRows) {
    throw CapacityError("binomial(" + std::to_string(n) +
                        ",k) exceeds exact 64-bit range");
  }
  return pascal_table()[n][static_cast<std::size_t>(k)];
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  return checked_factorial(n);
}

std::vector<double> bell_sequence(std::span<const double> x, int max_order) {
  const int n = static_cast<int>(x.size());
  require_order(n, max_order, "bell_sequence");
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1.0;
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
      acc += static_cast<double>(binomial(m, k)) * b[m - k] * x[k];
    }
    b[m + 1] = acc;
  }
  return b;
}

double bell_value(std::span<const double> x, int max_order) {
  return bell_sequence(x, max_order).back();
}

double g_value(int n, std::span<const double> dx, int max_order) {
  if (static_cast<int>(dx.size()) != n) {
    throw std::invalid_argument("g_value: expected " + std::to_string(n) +
                                " components, got " +
                                std::to_string(dx.size()));
  }
  require_order(n, max_order - 1, "g_value");
  std::vector<double> padded(dx.begin(), dx.end());
  padded.push_back(0.0);
  return bell_value(padded, max_order);
}

std::vector<BellTerm> bell_terms(int n, int max_order) {
  require_order(n, max_order, "bell_terms");
  const std::int64_t n_factorial = checked_factorial(n);

  std::vector<BellTerm> terms;
  std::vector<int> exponents(static_cast<std::size_t>(n), 0);

  // Enumerate partitions of n with parts in non-increasing order.
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::int64_t denom = 1;
      for (int i = 1; i <= n; ++i) {
        const int e = exponents[i - 1];
        if (e == 0) continue;
        const std::int64_t i_fact = checked_factorial(i);
        for (int r = 0; r < e; ++r) denom = checked_mul(denom, i_fact);
        denom = checked_mul(denom, checked_factorial(e));
      }
      BellTerm term;
      term.coefficient = n_factorial / denom;  // always divides exactly
      term.exponents = exponents;
      terms.push_back(std::move(term));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      ++exponents[part - 1];
      self(self, remaining - part, part);
      --exponents[part - 1];
    }
  };
  descend(descend, n, n);
  return terms;
}

double evaluate_terms(std::span<const BellTerm> terms,
                      std::span<const double> x) {
  double total = 0.0;
  for (const BellTerm& term : terms) {
    if (term.exponents.size() > x.size()) {
      throw std::invalid_argument("evaluate_terms: input shorter than term");
    }
    double monomial = static_cast<double>(term.coefficient);
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      for (int r = 0; r < term.exponents[i]; ++r) monomial *= x[i];
    }
    total += monomial;
  }
  return total;
}

std::int64_t bell_number(int n, int max_order) {
  std::int64_t sum = 0;
  for (const BellTerm& term : bell_terms(n, max_order)) {
    sum = checked_add(sum, term.coefficient);
  }
  return sum;
}

std::vector<QuadraticCoefficient> quadratic_part_coefficients(int n,
                                                              int max_order) {
  require_order(n, max_order - 1, "quadratic_part_coefficients");
  std::vector<QuadraticCoefficient> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    QuadraticCoefficient qc;
    qc.left = n + 1 - j;
    qc.right = j;
    qc.numerator = binomial(n + 1, j);
    qc.denominator = 2;
    coeffs.push_back(qc);
  }
  return coeffs;
}

}  // namespace rcum
