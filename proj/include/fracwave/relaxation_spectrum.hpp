#pragma once

#include <complex>
#include <istream>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fracwave/constitutive.hpp"

namespace fracwave {

// One Debye relaxation mechanism.
struct RelaxationMechanism {
  double tau_nu;    // relaxation time, s
  double kappa_nu;  // compressibility contribution, Pa^-1
};

// Finite set of discrete relaxation mechanisms on top of the static
// compressibility kappa0.
struct DiscreteRelaxationSet {
  double kappa0;
  std::vector<RelaxationMechanism> mechanisms;
};

// kappa_N(w) = kappa0 - i w sum_nu kappa_nu tau_nu / (1 + i w tau_nu)
std::complex<double> kappa_discrete(const DiscreteRelaxationSet& s, double omega);

// Maps a single Debye mechanism onto the alpha = beta = 1 Zener law:
// tau_1 = tau_sigma, kappa_1 = kappa0 (1 - tau_eps/tau_sigma).
DiscreteRelaxationSet debye_from_zener(const FractionalZenerParams& p);

enum class DistributionKind { MittagLeffler, MittagLefflerPrime, Tabulated };

// Continuum of relaxation mechanisms over [omega_lo, omega_hi] (rad/s; the
// defaults span the full half line).  ML kinds evaluate the closed-form
// distributions below; Tabulated interpolates a sampled table linearly.
struct ContinuumDistribution {
  DistributionKind kind = DistributionKind::MittagLeffler;
  FractionalZenerParams params{};                  // ML kinds
  std::vector<std::pair<double, double>> table;    // Tabulated: (Omega, kappa_nu)
  double omega_lo = 0.0;
  double omega_hi = std::numeric_limits<double>::infinity();
};

// kappa_nuML(Omega): the distribution that makes the continuum model identical
// to the fractional Zener law with alpha = beta.  Nonnegative for admissible
// parameters.
double kappa_ml_distribution(const FractionalZenerParams& p, double Omega);

// The alpha <= beta generalization with the three sine terms; carries no
// nonnegativity guarantee (and in fact always goes negative somewhere when
// alpha < beta).
double kappa_ml_prime(const FractionalZenerParams& p, double Omega);

// kappa_N(w) = kappa0 - i w \int kappa_nu(Omega) / (Omega + i w) dOmega with
// certified quadrature (default 1e-9 relative on both parts, far exceeded in
// practice).  Analytic power-law tails handle unbounded ranges.
std::complex<double> kappa_continuum(const ContinuumDistribution& d, double omega);

// Evaluate the distribution itself (any kind) at Omega, honoring the bounds.
double distribution_value(const ContinuumDistribution& d, double Omega);

struct DistributionRegimeReport {
  double exponent_low;    // alpha - 1
  double exponent_mid;    // -1
  double exponent_high;   // -alpha - 1
  double break_low;       // Omega = 1/tau_sigma
  double break_high;      // Omega = 1/tau_eps
  double fitted_low = std::numeric_limits<double>::quiet_NaN();
  double fitted_mid = std::numeric_limits<double>::quiet_NaN();
  double fitted_high = std::numeric_limits<double>::quiet_NaN();
  bool fitted_valid = false;  // false when the distribution degenerates (alpha = 1)
};

// Analytic regime exponents plus log-log slopes fitted from samples of
// kappa_nuML: low window Omega tau_sigma in [1e-6, 1e-4], a decade centered on
// Omega tau_sigma = 1, high window [1e4, 1e6].
DistributionRegimeReport distribution_regimes(const FractionalZenerParams& p);

// Relaxation-time spectrum: H(tau) = kappa_nuML(1/tau) / tau, the density of
// the relaxation kernel over ln(tau).  Symmetric in ln(tau) about its peak
// for alpha = beta.
double relaxation_time_spectrum(const FractionalZenerParams& p, double tau);

// Two-column numeric text import (Omega, kappa_nu), strictly increasing Omega.
ContinuumDistribution load_tabulated_distribution(std::istream& in);

}  // namespace fracwave
