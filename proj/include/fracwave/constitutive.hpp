#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fracwave {

// Five-parameter fractional Zener constitutive law plus the medium density,
// expressed through the static compressibility kappa0 = 1/E0.  Plain
// aggregate: fields are validated by the operations that need them, so that
// deliberately inadmissible parameter sets remain representable for
// diagnostic sweeps.
struct FractionalZenerParams {
  double kappa0;     // static compressibility, Pa^-1
  double tau_sigma;  // strain retardation time, s
  double tau_eps;    // stress relaxation time, s
  double alpha;      // fractional order on the strain derivative
  double beta;       // fractional order on the stress derivative
  double rho0;       // equilibrium mass density, kg m^-3

  // low-frequency sound speed (rho0 kappa0)^(-1/2)
  double c0() const;
};

// Thermodynamic admissibility per the classical constraint table for the
// fractional Zener law.  Constraints are evaluated independently; violations
// are reported by name, never thrown.
struct AdmissibilityReport {
  bool admissible = false;
  std::vector<std::string> violated_constraints;
  bool requires_alpha_eq_beta = false;
};

AdmissibilityReport check_admissibility(const FractionalZenerParams& p);

// Modified five-parameter law with the extra tau_sigma^beta strain term;
// requires alpha <= beta (checked at construction).
struct ModifiedZenerParams {
  ModifiedZenerParams(double kappa0, double tau_sigma, double tau_eps,
                      double alpha, double beta, double rho0);
  explicit ModifiedZenerParams(const FractionalZenerParams& p);

  const FractionalZenerParams& base() const { return base_; }

 private:
  FractionalZenerParams base_;
};

// Generalized compressibilities, (i w)^a taken on the principal branch
// w^a exp(i a pi/2), so Im(kappa) <= 0 is the passivity statement.
std::complex<double> kappa_zener(const FractionalZenerParams& p, double omega);

// tau_eps -> 0 limit of the Zener law: kappa0 / (1 + (tau_sigma i w)^alpha).
std::complex<double> kappa_kelvin_voigt(const FractionalZenerParams& p, double omega);

// kappa0 (1 + (tau_eps i w)^beta) / (1 + (tau_s i w)^alpha + (tau_s i w)^beta).
// For alpha = beta the denominator carries the (tau_s i w)^alpha term twice,
// so this does NOT reduce to kappa_zener; the factor-2 discrepancy is
// inherent to the modified law and deliberately not renormalized away.
std::complex<double> kappa_modified_zener(const ModifiedZenerParams& p, double omega);

// Time-domain relaxation kernel for alpha = beta:
//   kappa0 (1 - (tau_eps/tau_sigma)^alpha) E_{alpha,1}(-(t/tau_sigma)^alpha).
double relaxation_response(const FractionalZenerParams& p, double t);

}  // namespace fracwave
