#include "rcum/suites.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcum/bell.hpp"
#include "rcum/numeric.hpp"
#include "rcum/realized.hpp"
#include "rcum/rng.hpp"

namespace rcum {

namespace {

double rel_residual(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> random_vector(PathRng& rng, int n, double scale) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = scale * (2.0 * rng.uniform01() - 1.0);
  return x;
}

}  // namespace

std::vector<VerificationReport> bell_identities_suite(std::uint64_t seed,
                                                      int max_n, int trials,
                                                      double rel_tol) {
  std::vector<VerificationReport> reports;
  const std::size_t samples =
      static_cast<std::size_t>(max_n) * static_cast<std::size_t>(trials);

  // Binomial relation: B_n(x+y) = sum_j C(n,j) B_{n-j}(x) B_j(y).
  {
    PathRng rng(seed, 1);
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (int trial = 0; trial < trials; ++trial) {
        const std::vector<double> x = random_vector(rng, n, 2.0);
        const std::vector<double> y = random_vector(rng, n, 2.0);
        std::vector<double> sum(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
        const std::vector<double> bx = bell_sequence(x);
        const std::vector<double> by = bell_sequence(y);
        double rhs = 0.0;
        for (int j = 0; j <= n; ++j) {
          rhs += static_cast<double>(binomial(n, j)) * bx[n - j] * by[j];
        }
        worst = std::max(worst, rel_residual(bell_value(sum), rhs));
      }
    }
    reports.push_back(
        exact_check("bell binomial relation", worst, 0.0, rel_tol, samples));
  }

  // Decomposition: B_n(x_1..x_n) = g_{n-1}(x_1..x_{n-1}) + x_n.
  {
    PathRng rng(seed, 2);
    double worst = 0.0;
    for (int n = 2; n <= max_n; ++n) {
      for (int trial = 0; trial < trials; ++trial) {
        const std::vector<double> x = random_vector(rng, n, 2.0);
        const std::vector<double> head(x.begin(), x.end() - 1);
        const double lhs = bell_value(x);
        const double rhs = g_value(n - 1, head) + x.back();
        worst = std::max(worst, rel_residual(lhs, rhs));
      }
    }
    reports.push_back(
        exact_check("bell decomposition", worst, 0.0, rel_tol, samples));
  }

  // Weighted homogeneity: B_n(l x_1, l^2 x_2, ...) = l^n B_n(x).
  {
    PathRng rng(seed, 3);
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (int trial = 0; trial < trials; ++trial) {
        const std::vector<double> x = random_vector(rng, n, 2.0);
        const double lambda = 0.5 + 1.5 * rng.uniform01();
        std::vector<double> scaled(x.size());
        double power = 1.0;
        for (int i = 0; i < n; ++i) {
          power *= lambda;
          scaled[i] = power * x[i];
        }
        worst = std::max(worst, rel_residual(bell_value(scaled),
                                             power * bell_value(x)));
      }
    }
    reports.push_back(
        exact_check("bell homogeneity", worst, 0.0, rel_tol, samples));
  }

  // Recurrence evaluation against the partition-enumeration oracle.
  {
    PathRng rng(seed, 4);
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      const std::vector<BellTerm> terms = bell_terms(n);
      for (int trial = 0; trial < trials; ++trial) {
        const std::vector<double> x = random_vector(rng, n, 2.0);
        worst = std::max(
            worst, rel_residual(bell_value(x), evaluate_terms(terms, x)));
      }
    }
    reports.push_back(exact_check("bell recurrence vs partition oracle", worst,
                                  0.0, rel_tol, samples));
  }

  // Coefficient sums are the Bell numbers.
  {
    const std::int64_t expected[] = {1, 2, 5, 15, 52, 203};
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      worst = std::max(worst, std::abs(static_cast<double>(
                                  bell_number(n) - expected[n - 1])));
    }
    reports.push_back(
        exact_check("bell number coefficient sums", worst, 0.0, 0.0, 6));
  }

  // Quadratic coefficients match the degree-2 slice of bell_terms(n+1).
  {
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      const auto coeffs = quadratic_part_coefficients(n);
      for (const BellTerm& term : bell_terms(n + 1)) {
        int degree = 0;
        for (int e : term.exponents) degree += e;
        if (degree != 2) continue;
        // Gather the (1/2)C(n+1,j) contributions that hit this monomial.
        std::int64_t doubled = 0;  // twice the slice coefficient
        for (const QuadraticCoefficient& qc : coeffs) {
          if (qc.left > static_cast<int>(term.exponents.size()) ||
              qc.right > static_cast<int>(term.exponents.size())) {
            continue;
          }
          std::vector<int> probe(term.exponents.size(), 0);
          probe[qc.left - 1] += 1;
          probe[qc.right - 1] += 1;
          if (probe == term.exponents) doubled += qc.numerator;
        }
        worst = std::max(worst, std::abs(static_cast<double>(
                                    doubled - 2 * term.coefficient)));
      }
    }
    reports.push_back(
        exact_check("quadratic part vs bell terms", worst, 0.0, 0.0,
                    static_cast<std::size_t>(max_n)));
  }

  return reports;
}

namespace {

double weighted_root_cumulant(const TreeModel& model, const CumulantTree& ct,
                              int k) {
  StableSum acc;
  for (int r = 0; r < model.nodes_at(0); ++r) {
    acc.add(model.masses[0][r] * ct.cumulants[0][r].values[k - 1]);
  }
  return acc.value();
}

}  // namespace

std::vector<VerificationReport> tree_exact_suite(const TreeModel& model,
                                                 int max_n, double abs_tol) {
  std::vector<VerificationReport> reports;
  const int order = max_n + 1;
  const CumulantTree ct = tree_backward_induction(model, order);

  reports.push_back(exact_check(
      "bell increment mean residual k<=" + std::to_string(order),
      bell_increment_residual_tree(model, ct, order), 0.0, abs_tol,
      static_cast<std::size_t>(model.depth + 1)));

  for (int n = 1; n <= max_n; ++n) {
    double worst = 0.0;
    for (int s = 0; s <= model.depth; ++s) {
      for (int t = s; t <= model.depth; ++t) {
        for (int u = t; u <= model.depth; ++u) {
          const VerificationReport r =
              aggregation_check_tree(model, ct, n, s, t, u, abs_tol);
          worst = std::max(worst, r.estimate);
        }
      }
    }
    reports.push_back(exact_check(
        "aggregation identity n=" + std::to_string(n) + " (all triples)",
        worst, 0.0, abs_tol));
  }

  for (int n = 1; n <= max_n; ++n) {
    double worst = 0.0;
    for (int t = 0; t <= model.depth; ++t) {
      for (int u = t; u <= model.depth; ++u) {
        worst = std::max(worst, increment_identity_residual_tree(model, ct, n, t, u));
      }
    }
    reports.push_back(exact_check(
        "realized increment identity n=" + std::to_string(n) + " (all t<=u)",
        worst, 0.0, abs_tol));
  }

  for (int n = 1; n <= max_n; ++n) {
    const double expected = expected_realized_cumulant_tree(model, ct, n, 0);
    const double target = weighted_root_cumulant(model, ct, n + 1);
    reports.push_back(exact_check(
        "expected realized cumulant equals root cumulant n=" +
            std::to_string(n),
        expected, target, abs_tol));
  }

  for (int n = 1; n <= max_n; ++n) {
    // Coarse {0, N}, one interior point, and the full grid must agree.
    const double full = expected_realized_cumulant_tree(model, ct, n, 0);
    double worst = 0.0;
    std::vector<int> coarse = {0, model.depth};
    if (model.depth >= 1) {
      worst = std::max(
          worst, std::abs(expected_realized_cumulant_partition(
                     model, ct, n, coarse) -
                 full));
    }
    for (int mid = 1; mid < model.depth; ++mid) {
      const std::vector<int> three = {0, mid, model.depth};
      worst = std::max(
          worst, std::abs(expected_realized_cumulant_partition(
                     model, ct, n, three) -
                 full));
    }
    reports.push_back(exact_check(
        "partition refinement invariance n=" + std::to_string(n), worst, 0.0,
        abs_tol));
  }

  return reports;
}

}  // namespace rcum
