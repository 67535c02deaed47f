#pragma once

#include <optional>
#include <span>

#include "fracwave/constitutive.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/relaxation_spectrum.hpp"

namespace fracwave {

struct CausalityReport {
  double kk_max_rel_error = 0.0;
  bool phase_speed_bounded = false;
  double hf_attenuation_exponent = 0.0;  // must stay < 1 (sub-linear growth)
  bool distribution_nonnegative = false;
  // metadata
  double reference_omega = 0.0;  // subtraction point of the dispersion integral
  double c_inf = 0.0;
};

// Once-subtracted Kramers-Kronig reconstruction of the slowness difference
//   1/c_p(w) - 1/c_p(w_ref) = (2/pi) [ PV int_0^inf a_k(u)/(u^2-w^2) du - (same at w_ref) ]
// from the sampled attenuation, with the band extended by fitted power-law
// tails and the principal values regularized by subtracting a_k at the pole
// (PV int du/(u^2-w^2) = 0).  Returns the maximum deviation from the directly
// computed slowness difference over the central four decades, relative to the
// slowness variation across that band.
//
// The once-subtracted form is needed because power-law attenuation with
// exponent >= 1 makes the unsubtracted integral diverge at high frequency.
double kramers_kronig_check(const DispersionResult& d, double reference_omega);

enum class MediumModel { Zener, KelvinVoigt };

struct FiniteSpeedResult {
  bool bounded = false;
  double c_inf = 0.0;      // analytic limit c0 (tau_sigma/tau_eps)^(alpha/2), Zener
  double measured_c_p = 0.0;
  double probe_omega = 0.0;
};

// Probes the phase speed at omega tau_eps = 1e8 against the analytic
// high-frequency limit (1e-3 relative).  When the approach to the limit is
// slower than that (small alpha), a second probe at omega tau_eps = 1e12
// checks that the deviation is in fact shrinking; a growing phase speed
// (Kelvin-Voigt) reports bounded = false.
FiniteSpeedResult finite_speed_check(const FractionalZenerParams& p,
                                     MediumModel model = MediumModel::Zener);

struct NonnegativityScan {
  bool nonnegative = false;
  std::optional<double> first_violation;  // Omega of the first sign change found
};

// Sign scan of the distribution on the grid, with bisection refinement around
// any sign change to locate the violation.
NonnegativityScan nonnegativity_scan(const ContinuumDistribution& dist,
                                     std::span<const double> grid);

// Full report for an alpha = beta fractional Zener medium: KK consistency
// over 12 decades around 1/tau_sigma, finite-speed probe, fitted
// high-frequency attenuation exponent, and the distribution sign scan.
CausalityReport causality_report(const FractionalZenerParams& p);

}  // namespace fracwave
