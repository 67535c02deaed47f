#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "fracwave/constitutive.hpp"

namespace fracwave {

// Sampled dispersion relation: k(w), attenuation alpha_k = -Im(k) (Np/m) and
// phase speed c_p = w / Re(k) (m/s) on a positive frequency grid.
struct DispersionResult {
  std::vector<double> omega;
  std::vector<std::complex<double>> k;
  std::vector<double> alpha_k;
  std::vector<double> c_p;
};

using KappaFn = std::function<std::complex<double>(double)>;

// k = w sqrt(rho0 kappa), branch fixed by Re(k) > 0.  With Im(kappa) <= 0
// (passive medium) this makes alpha_k = -Im(k) >= 0 automatically.
// Rejects Re(kappa) <= 0 rather than silently picking a branch.
std::complex<double> wavenumber(std::complex<double> kappa, double rho0, double omega);

// Elementwise dispersion sweep over the fractional Zener compressibility.
DispersionResult attenuation_and_speed(const FractionalZenerParams& p,
                                       std::span<const double> omega_grid);

// Same sweep over an arbitrary generalized compressibility.
DispersionResult attenuation_and_speed(const KappaFn& kappa, double rho0,
                                       std::span<const double> omega_grid);

struct AttenuationRegimeReport {
  double exponent_low;   // 1 + alpha
  double exponent_mid;   // 1 - alpha/2
  double exponent_high;  // 1 - alpha
  double break_low;      // omega = 1/tau_sigma
  double break_high;     // omega = 1/tau_eps
  bool has_intermediate = false;  // tau_sigma/tau_eps >= 1e2
  double fitted_low = std::numeric_limits<double>::quiet_NaN();
  double fitted_mid = std::numeric_limits<double>::quiet_NaN();
  double fitted_high = std::numeric_limits<double>::quiet_NaN();
};

// Analytic attenuation exponents plus log-log slopes fitted by ordinary least
// squares.  Windows: omega tau_sigma in [1e-6, 1e-4] (low), the decade
// centered on omega = 1/sqrt(tau_sigma tau_eps) (intermediate; only fitted
// when tau_sigma/tau_eps >= 1e2, otherwise the regime is reported as absent
// rather than fitting noise), and omega tau_eps in [1e1, 1e3] (high).
AttenuationRegimeReport attenuation_regimes(const FractionalZenerParams& p);

}  // namespace fracwave
