#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracwave {

// Raised when an adaptive quadrature cannot reach the requested tolerance.
// Kept distinct from std::invalid_argument so callers can tell numerical
// trouble apart from parameter-domain violations.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_abs_error)
      : std::runtime_error(what), achieved_abs_error_(achieved_abs_error) {}
  double achieved_abs_error() const { return achieved_abs_error_; }

 private:
  double achieved_abs_error_;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// Adaptive Gauss-Kronrod (61-point rule) on the finite interval [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-11, double abs_tol = 1e-300);

// Same, but the interval is pre-split at the interior points of `points`
// (sorted, deduplicated internally); segment results are summed.
QuadResult integrate_split(const std::function<double(double)>& f,
                           std::vector<double> points,
                           double rel_tol = 1e-11, double abs_tol = 1e-300);

}  // namespace fracwave
