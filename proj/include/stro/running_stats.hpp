#pragma once

#include <cstdint>

namespace stro {

// Welford accumulator for a running sample mean and variance.
// Variance of fewer than two observations is reported as 0; callers that
// need to distinguish "unknown" from "zero" check has_variance().
class RunningStats {
 public:
  RunningStats() = default;
  RunningStats(std::int64_t count, double mean, double m2)
      : count_(count), mean_(mean), m2_(m2) {}

  void push(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::int64_t count() const { return count_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }

  bool has_variance() const { return count_ >= 2; }

  double variance() const {
    if (count_ < 2) return 0.0;
    return m2_ / static_cast<double>(count_ - 1);
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Statistics of the concatenated sample (Chan et al. pairwise update).
inline RunningStats merge(const RunningStats& a, const RunningStats& b) {
  if (a.count() == 0) return b;
  if (b.count() == 0) return a;
  const double na = static_cast<double>(a.count());
  const double nb = static_cast<double>(b.count());
  const double n = na + nb;
  const double delta = b.mean() - a.mean();
  const double mean = a.mean() + delta * nb / n;
  const double m2 = a.m2() + b.m2() + delta * delta * na * nb / n;
  return RunningStats(a.count() + b.count(), mean, m2);
}

}  // namespace stro
