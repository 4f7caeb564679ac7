#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rcum/bell.hpp"
#include "rcum/errors.hpp"

using namespace rcum;

namespace {

std::vector<double> random_vector(std::mt19937_64& gen, int n, double lo,
                                  double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = dist(gen);
  return x;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("bell_value matches the low-order expansions") {
  // B_1..B_4 evaluated at small integer points.
  CHECK(bell_value(std::vector<double>{1.0}) == 1.0);
  CHECK(bell_value(std::vector<double>{1.0, 1.0}) == 2.0);
  CHECK(bell_value(std::vector<double>{1.0, 1.0, 1.0}) == 5.0);
  CHECK(bell_value(std::vector<double>{1.0, 1.0, 1.0, 1.0}) == 15.0);
  // B_n(x1,0,...,0) = x1^n and B_n(0,...,0,xn) = xn.
  CHECK(bell_value(std::vector<double>{2.0, 0.0, 0.0, 0.0}) == 16.0);
  CHECK(bell_value(std::vector<double>{0.0, 0.0, 0.0, 7.0}) == 7.0);
}

TEST_CASE("g_value pads with a trailing zero") {
  CHECK(g_value(1, std::vector<double>{3.0}) == 9.0);
  CHECK(g_value(2, std::vector<double>{2.0, 1.0}) == 14.0);  // x^3 + 3xy
  CHECK(g_value(3, std::vector<double>{1.0, 1.0, 1.0}) == 14.0);
  CHECK_THROWS_AS(g_value(2, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("bell_terms reproduces the explicit expansions") {
  SUBCASE("n=1") {
    const auto terms = bell_terms(1);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coefficient == 1);
    CHECK(terms[0].exponents == std::vector<int>{1});
  }
  SUBCASE("n=2") {
    const auto terms = bell_terms(2);
    REQUIRE(terms.size() == 2);
    // x_2 and x_1^2, each with coefficient matching B_2 = x1^2 + x2.
    for (const auto& t : terms) {
      if (t.exponents == std::vector<int>{2, 0}) CHECK(t.coefficient == 1);
      else if (t.exponents == std::vector<int>{0, 1}) CHECK(t.coefficient == 1);
      else FAIL("unexpected monomial in B_2");
    }
  }
  SUBCASE("n=4") {
    const auto terms = bell_terms(4);
    REQUIRE(terms.size() == 5);
    int matched = 0;
    for (const auto& t : terms) {
      if (t.exponents == std::vector<int>{4, 0, 0, 0}) { CHECK(t.coefficient == 1); ++matched; }
      if (t.exponents == std::vector<int>{2, 1, 0, 0}) { CHECK(t.coefficient == 6); ++matched; }
      if (t.exponents == std::vector<int>{1, 0, 1, 0}) { CHECK(t.coefficient == 4); ++matched; }
      if (t.exponents == std::vector<int>{0, 2, 0, 0}) { CHECK(t.coefficient == 3); ++matched; }
      if (t.exponents == std::vector<int>{0, 0, 0, 1}) { CHECK(t.coefficient == 1); ++matched; }
    }
    CHECK(matched == 5);
  }
}

TEST_CASE("bell_terms weighted degree and positivity invariants") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& term : bell_terms(n)) {
      CHECK(term.coefficient > 0);
      int weighted = 0;
      for (std::size_t i = 0; i < term.exponents.size(); ++i) {
        CHECK(term.exponents[i] >= 0);
        weighted += static_cast<int>(i + 1) * term.exponents[i];
      }
      CHECK(weighted == n);
    }
  }
}

TEST_CASE("coefficient sums are the Bell numbers") {
  const std::int64_t expected[] = {1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    CHECK(bell_number(n) == expected[n - 1]);
  }
  CHECK(bell_number(12) == 4213597);
}

TEST_CASE("recurrence agrees with the partition-enumeration oracle") {
  std::mt19937_64 gen(7101);
  for (int n = 1; n <= 8; ++n) {
    const auto terms = bell_terms(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(gen, n, -2.0, 2.0);
      CHECK(rel_err(bell_value(x), evaluate_terms(terms, x)) <= 1e-12);
    }
  }
}

TEST_CASE("binomial type relation") {
  std::mt19937_64 gen(90210);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(gen, n, -2.0, 2.0);
      const auto y = random_vector(gen, n, -2.0, 2.0);
      std::vector<double> sum(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
      const auto bx = bell_sequence(x);
      const auto by = bell_sequence(y);
      double rhs = 0.0;
      for (int j = 0; j <= n; ++j) {
        rhs += static_cast<double>(binomial(n, j)) * bx[n - j] * by[j];
      }
      CHECK(rel_err(bell_value(sum), rhs) <= 1e-10);
    }
  }
}

TEST_CASE("decomposition B_n(x) = B_n(x_1..x_{n-1},0) + x_n") {
  std::mt19937_64 gen(11);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_vector(gen, n, -3.0, 3.0);
      const std::vector<double> head(x.begin(), x.end() - 1);
      CHECK(bell_value(x) == g_value(n - 1, head) + x.back());
    }
  }
}

TEST_CASE("weighted homogeneity") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> lambda_dist(0.5, 2.0);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(gen, n, -2.0, 2.0);
      const double lambda = lambda_dist(gen);
      std::vector<double> scaled(x.size());
      double power = 1.0;
      for (int i = 0; i < n; ++i) {
        power *= lambda;
        scaled[i] = power * x[i];
      }
      CHECK(rel_err(bell_value(scaled), power * bell_value(x)) <= 1e-10);
    }
  }
}

TEST_CASE("quadratic part coefficients") {
  SUBCASE("reference values") {
    const auto c1 = quadratic_part_coefficients(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].left == 1);
    CHECK(c1[0].right == 1);
    CHECK(c1[0].numerator == 2);
    CHECK(c1[0].denominator == 2);
    CHECK(c1[0].value() == 1.0);

    const auto c2 = quadratic_part_coefficients(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].value() == 1.5);  // (2,1)
    CHECK(c2[1].value() == 1.5);  // (1,2)

    const auto c3 = quadratic_part_coefficients(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].value() == 2.0);  // (3,1)
    CHECK(c3[1].value() == 3.0);  // (2,2)
    CHECK(c3[2].value() == 2.0);  // (1,3)
  }

  SUBCASE("matches the degree-2 slice of bell_terms(n+1)") {
    for (int n = 1; n <= 8; ++n) {
      const auto coeffs = quadratic_part_coefficients(n);
      for (const auto& term : bell_terms(n + 1)) {
        int degree = 0;
        for (int e : term.exponents) degree += e;
        if (degree != 2) continue;
        std::int64_t doubled = 0;
        for (const auto& qc : coeffs) {
          std::vector<int> probe(term.exponents.size(), 0);
          probe[qc.left - 1] += 1;
          probe[qc.right - 1] += 1;
          if (probe == term.exponents) doubled += qc.numerator;
        }
        CHECK(doubled == 2 * term.coefficient);
      }
    }
  }
}

TEST_CASE("capacity guards") {
  const std::vector<double> x13(13, 1.0);
  CHECK_THROWS_AS(bell_value(x13), CapacityError);
  CHECK(bell_value(x13, 13) > 0.0);  // explicit higher cap works
  CHECK_THROWS_AS(bell_terms(13), CapacityError);
  CHECK_THROWS_AS(bell_terms(21, 30), CapacityError);  // 21! overflows
  CHECK_THROWS_AS(g_value(12, std::vector<double>(12, 1.0)), CapacityError);
  CHECK_THROWS_AS(binomial(80, 40), CapacityError);
  CHECK_THROWS_AS(bell_value(std::vector<double>{}), std::invalid_argument);
}
