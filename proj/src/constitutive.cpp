#include "fracwave/constitutive.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracwave/mittag_leffler.hpp"

namespace fracwave {

namespace {

constexpr double kPi = std::numbers::pi;

// (tau * i * omega)^a on the principal branch, omega > 0, tau >= 0.
std::complex<double> iw_pow(double tau, double omega, double a) {
  if (tau == 0.0) return {0.0, 0.0};
  return std::polar(std::pow(tau * omega, a), a * kPi / 2.0);
}

void require_omega(double omega, const char* who) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument(std::string(who) + ": need finite omega > 0");
}

void require_finite(const FractionalZenerParams& p, const char* who) {
  if (!std::isfinite(p.kappa0) || !std::isfinite(p.tau_sigma) ||
      !std::isfinite(p.tau_eps) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta) || !std::isfinite(p.rho0))
    throw std::invalid_argument(std::string(who) + ": non-finite parameter");
}

}  // namespace

double FractionalZenerParams::c0() const {
  if (!(kappa0 > 0.0) || !(rho0 > 0.0))
    throw std::invalid_argument("c0: needs kappa0 > 0 and rho0 > 0");
  return 1.0 / std::sqrt(rho0 * kappa0);
}

AdmissibilityReport check_admissibility(const FractionalZenerParams& p) {
  require_finite(p, "check_admissibility");
  AdmissibilityReport r;
  const double E0 = 1.0 / p.kappa0;
  const double ts_a = std::pow(p.tau_sigma, p.alpha);
  const double te_b = std::pow(p.tau_eps, p.beta);

  if (!(E0 >= 0.0)) r.violated_constraints.push_back("E0 >= 0");
  if (!(E0 * ts_a > 0.0)) r.violated_constraints.push_back("E0 tau_sigma^alpha > 0");
  if (!(ts_a >= te_b)) r.violated_constraints.push_back("tau_sigma^alpha >= tau_eps^beta");
  if (!(te_b > 0.0)) r.violated_constraints.push_back("tau_eps^beta > 0");
  if (p.alpha != p.beta) {
    r.violated_constraints.push_back("alpha = beta");
    r.requires_alpha_eq_beta = true;
  }
  r.admissible = r.violated_constraints.empty();
  return r;
}

ModifiedZenerParams::ModifiedZenerParams(double kappa0, double tau_sigma,
                                         double tau_eps, double alpha,
                                         double beta, double rho0)
    : base_{kappa0, tau_sigma, tau_eps, alpha, beta, rho0} {
  if (!(alpha <= beta))
    throw std::invalid_argument("ModifiedZenerParams: needs alpha <= beta");
  require_finite(base_, "ModifiedZenerParams");
}

ModifiedZenerParams::ModifiedZenerParams(const FractionalZenerParams& p)
    : ModifiedZenerParams(p.kappa0, p.tau_sigma, p.tau_eps, p.alpha, p.beta,
                          p.rho0) {}

std::complex<double> kappa_zener(const FractionalZenerParams& p, double omega) {
  require_omega(omega, "kappa_zener");
  require_finite(p, "kappa_zener");
  const std::complex<double> num = 1.0 + iw_pow(p.tau_eps, omega, p.beta);
  const std::complex<double> den = 1.0 + iw_pow(p.tau_sigma, omega, p.alpha);
  return p.kappa0 * num / den;
}

std::complex<double> kappa_kelvin_voigt(const FractionalZenerParams& p, double omega) {
  require_omega(omega, "kappa_kelvin_voigt");
  require_finite(p, "kappa_kelvin_voigt");
  return p.kappa0 / (1.0 + iw_pow(p.tau_sigma, omega, p.alpha));
}

std::complex<double> kappa_modified_zener(const ModifiedZenerParams& p, double omega) {
  require_omega(omega, "kappa_modified_zener");
  const FractionalZenerParams& b = p.base();
  const std::complex<double> num = 1.0 + iw_pow(b.tau_eps, omega, b.beta);
  const std::complex<double> den = 1.0 + iw_pow(b.tau_sigma, omega, b.alpha) +
                                   iw_pow(b.tau_sigma, omega, b.beta);
  return b.kappa0 * num / den;
}

double relaxation_response(const FractionalZenerParams& p, double t) {
  require_finite(p, "relaxation_response");
  if (p.alpha != p.beta)
    throw std::invalid_argument(
        "relaxation_response: closed kernel only available for alpha = beta");
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("relaxation_response: need finite t > 0");
  if (!(p.tau_sigma > 0.0))
    throw std::invalid_argument("relaxation_response: need tau_sigma > 0");
  const double weight =
      p.kappa0 * (1.0 - std::pow(p.tau_eps / p.tau_sigma, p.alpha));
  return weight * ml_eval({p.alpha, 1.0}, -std::pow(t / p.tau_sigma, p.alpha));
}

}  // namespace fracwave
