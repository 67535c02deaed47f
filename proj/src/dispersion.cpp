#include "fracwave/dispersion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fracwave/numerics.hpp"

namespace fracwave {

std::complex<double> wavenumber(std::complex<double> kappa, double rho0, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("wavenumber: need finite omega > 0");
  if (!(rho0 > 0.0) || !std::isfinite(rho0))
    throw std::invalid_argument("wavenumber: need finite rho0 > 0");
  if (!(kappa.real() > 0.0) || !std::isfinite(kappa.real()) || !std::isfinite(kappa.imag())) {
    std::ostringstream os;
    os << "wavenumber: unphysical compressibility Re(kappa) <= 0 (kappa = "
       << kappa.real() << (kappa.imag() < 0 ? " - " : " + ")
       << std::abs(kappa.imag()) << "i)";
    throw std::domain_error(os.str());
  }
  std::complex<double> k = omega * std::sqrt(rho0 * kappa);
  if (k.real() < 0.0) k = -k;
  return k;
}

namespace {

DispersionResult sweep(const KappaFn& kappa, double rho0,
                       std::span<const double> omega_grid) {
  DispersionResult r;
  const std::size_t n = omega_grid.size();
  if (n == 0) throw std::invalid_argument("attenuation_and_speed: empty grid");
  r.omega.assign(omega_grid.begin(), omega_grid.end());
  r.k.resize(n);
  r.alpha_k.resize(n);
  r.c_p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = omega_grid[i];
    if (!(w > 0.0) || (i > 0 && !(w > omega_grid[i - 1])))
      throw std::invalid_argument(
          "attenuation_and_speed: grid must be positive and strictly increasing");
    try {
      const std::complex<double> k = wavenumber(kappa(w), rho0, w);
      r.k[i] = k;
      r.alpha_k[i] = -k.imag();
      r.c_p[i] = w / k.real();
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "attenuation_and_speed: omega[" << i << "] = " << w << ": " << e.what();
      throw std::domain_error(os.str());
    }
  }
  return r;
}

}  // namespace

DispersionResult attenuation_and_speed(const FractionalZenerParams& p,
                                       std::span<const double> omega_grid) {
  return sweep([&](double w) { return kappa_zener(p, w); }, p.rho0, omega_grid);
}

DispersionResult attenuation_and_speed(const KappaFn& kappa, double rho0,
                                       std::span<const double> omega_grid) {
  return sweep(kappa, rho0, omega_grid);
}

AttenuationRegimeReport attenuation_regimes(const FractionalZenerParams& p) {
  if (p.alpha != p.beta)
    throw std::invalid_argument("attenuation_regimes: needs alpha = beta");
  if (!(p.alpha > 0.0) || !(p.alpha <= 1.0))
    throw std::invalid_argument("attenuation_regimes: alpha must lie in (0, 1]");
  if (!(p.tau_sigma > 0.0) || !(p.tau_eps > 0.0) || !(p.tau_sigma >= p.tau_eps))
    throw std::invalid_argument("attenuation_regimes: needs tau_sigma >= tau_eps > 0");

  AttenuationRegimeReport r{};
  r.exponent_low = 1.0 + p.alpha;
  r.exponent_mid = 1.0 - p.alpha / 2.0;
  r.exponent_high = 1.0 - p.alpha;
  r.break_low = 1.0 / p.tau_sigma;
  r.break_high = 1.0 / p.tau_eps;
  const double ratio = p.tau_sigma / p.tau_eps;
  r.has_intermediate = ratio >= 1e2;

  const double ts = p.tau_sigma, te = p.tau_eps;
  const auto grid = log_grid(1e-7 / ts, 1e4 / te, 16);
  const DispersionResult d = attenuation_and_speed(p, grid);

  const double eps_atten = 0.0;  // lossless degenerate case has alpha_k == 0
  for (double a : d.alpha_k)
    if (a < eps_atten)
      throw std::domain_error("attenuation_regimes: negative attenuation");
  if (ts == te) return r;  // lossless: no power laws to fit

  r.fitted_low = loglog_slope(d.omega, d.alpha_k, 1e-6 / ts, 1e-4 / ts);
  r.fitted_high = loglog_slope(d.omega, d.alpha_k, 1e1 / te, 1e3 / te);
  if (r.has_intermediate) {
    const double center = 1.0 / std::sqrt(ts * te);
    r.fitted_mid = loglog_slope(d.omega, d.alpha_k, center / std::sqrt(10.0),
                                center * std::sqrt(10.0));
  }
  return r;
}

}  // namespace fracwave
