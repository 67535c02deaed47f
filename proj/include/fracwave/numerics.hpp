#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace fracwave {

// Log-spaced grid covering [lo, hi] with the given sampling density.
// Endpoints are included; the grid is strictly increasing.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

// Ordinary least-squares slope of ln(y) against ln(x), restricted to samples
// with x inside [lo, hi].  Requires at least two usable samples and positive
// x, y there.
double loglog_slope(std::span<const double> x, std::span<const double> y,
                    double lo, double hi);

// Neumaier-compensated accumulator for alternating series.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fracwave
