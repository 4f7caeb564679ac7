#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace rcum {

// Neumaier-compensated accumulator; keeps long Monte Carlo sums accurate
// enough that the reported standard errors stay meaningful.
class StableSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double stable_sum(std::span<const double> values) {
  StableSum s;
  for (double v : values) s.add(v);
  return s.value();
}

struct SampleStats {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t n = 0;
};

// Two-pass mean / standard error of the mean.
inline SampleStats summarize(std::span<const double> values) {
  SampleStats out;
  out.n = values.size();
  if (out.n == 0) return out;
  out.mean = stable_sum(values) / static_cast<double>(out.n);
  if (out.n < 2) return out;
  StableSum sq;
  for (double v : values) {
    const double d = v - out.mean;
    sq.add(d * d);
  }
  const double var = sq.value() / static_cast<double>(out.n - 1);
  out.standard_error = std::sqrt(var / static_cast<double>(out.n));
  return out;
}

}  // namespace rcum
