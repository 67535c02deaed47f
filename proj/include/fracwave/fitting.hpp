#pragma once

#include <istream>
#include <vector>

#include "fracwave/constitutive.hpp"
#include "fracwave/relaxation_spectrum.hpp"

namespace fracwave {

// Attenuation samples to fit against; weights default to 1.
struct AttenuationTarget {
  std::vector<double> omega;    // rad/s, strictly increasing
  std::vector<double> alpha_k;  // Np/m, nonnegative
  std::vector<double> weight;

  double band_lo() const { return omega.front(); }
  double band_hi() const { return omega.back(); }
};

// Exact log-spaced samples of coefficient * omega^eta over [omega_lo, omega_hi].
AttenuationTarget synthesize_powerlaw_target(double eta, double coefficient,
                                             double omega_lo, double omega_hi,
                                             int n_samples);

// Two-column numeric text import (omega, alpha_k).
AttenuationTarget load_attenuation_target(std::istream& in);

struct ZenerFitResult {
  FractionalZenerParams params{};
  double residual_rms = 0.0;  // relative log-space RMS
  int iterations = 0;
  bool converged = false;
};

// Bounded nonlinear least squares in log-attenuation space over
// (ln tau_sigma, alpha, tau_eps/tau_sigma) with alpha = beta enforced and
// kappa0, rho0 pinned by the initial guess (i.e. by c0).  The admissible
// region alpha in (0,1), tau_eps <= tau_sigma is enforced by smooth
// reparameterization, so every iterate (and the result) is admissible.
// Convergence: relative gradient < 1e-10 or step < 1e-12; a fit that runs out
// of iterations returns its best iterate with converged = false.
ZenerFitResult fit_zener(const AttenuationTarget& target,
                         const FractionalZenerParams& init);

struct DiscreteFitConfig {
  int n_mechanisms = 1;
  double kappa0 = 0.0;  // static compressibility of the fitted medium
  double rho0 = 0.0;
};

struct DiscreteFitResult {
  DiscreteRelaxationSet set;
  double residual_rms = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Fits (tau_nu, kappa_nu >= 0) pairs in log space.  Initialization policy:
// tau_nu log-uniform across the target band, kappa_nu equal; sizes below
// n_mechanisms are fitted first and their optima reused as warm starts, which
// makes the residual weakly decreasing in N by construction.
DiscreteFitResult fit_discrete(const AttenuationTarget& target,
                               const DiscreteFitConfig& cfg);

}  // namespace fracwave
