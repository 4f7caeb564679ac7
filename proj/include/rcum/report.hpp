#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rcum {

// Outcome of one verification: estimate against target under an explicit
// numeric gate. standard_error is 0 for exact checks.
struct VerificationReport {
  std::string name;
  double estimate = 0.0;
  double target = 0.0;
  double standard_error = 0.0;
  std::size_t n_samples = 0;
  double gate = 0.0;
  std::string rule;
  bool pass = false;
  std::vector<std::pair<std::string, double>> extras;
};

// pass iff |estimate - target| <= abs_tol.
VerificationReport exact_check(std::string name, double estimate,
                               double target, double abs_tol,
                               std::size_t n_samples = 0);

// pass iff |estimate - target| <= max(abs_tol, z*se + bias_allowance).
VerificationReport mc_check(std::string name, double estimate, double target,
                            double standard_error, std::size_t n_samples,
                            double z, double abs_tol = 1e-12,
                            double bias_allowance = 0.0);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace rcum
