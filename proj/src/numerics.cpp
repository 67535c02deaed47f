#include "fracwave/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace fracwave {

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw std::invalid_argument("log_grid: need 0 < lo < hi, finite");
  if (points_per_decade < 1)
    throw std::invalid_argument("log_grid: points_per_decade must be >= 1");
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * points_per_decade)) + 1);
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

double loglog_slope(std::span<const double> x, std::span<const double> y,
                    double lo, double hi) {
  if (x.size() != y.size())
    throw std::invalid_argument("loglog_slope: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo || x[i] > hi) continue;
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("loglog_slope: nonpositive sample inside window");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2)
    throw std::invalid_argument("loglog_slope: fewer than two samples in window");
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw std::invalid_argument("loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace fracwave
