#include "rcum/report.hpp"

#include <algorithm>
#include <cmath>

namespace rcum {

VerificationReport exact_check(std::string name, double estimate,
                               double target, double abs_tol,
                               std::size_t n_samples) {
  VerificationReport r;
  r.name = std::move(name);
  r.estimate = estimate;
  r.target = target;
  r.standard_error = 0.0;
  r.n_samples = n_samples;
  r.gate = abs_tol;
  r.rule = "|estimate - target| <= abs_tol";
  r.pass = std::abs(estimate - target) <= r.gate;
  return r;
}

VerificationReport mc_check(std::string name, double estimate, double target,
                            double standard_error, std::size_t n_samples,
                            double z, double abs_tol, double bias_allowance) {
  VerificationReport r;
  r.name = std::move(name);
  r.estimate = estimate;
  r.target = target;
  r.standard_error = standard_error;
  r.n_samples = n_samples;
  r.gate = std::max(abs_tol, z * standard_error + bias_allowance);
  r.rule = bias_allowance > 0.0
               ? "|estimate - target| <= z*se + bias_allowance"
               : "|estimate - target| <= max(abs_tol, z*se)";
  r.pass = std::abs(estimate - target) <= r.gate;
  if (bias_allowance > 0.0) {
    r.extras.emplace_back("bias_allowance", bias_allowance);
  }
  return r;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

}  // namespace rcum
