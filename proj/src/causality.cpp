#include "fracwave/causality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracwave/numerics.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Attenuation model over the whole half line: log-log linear interpolation of
// the samples inside the band, fitted power laws beyond it.
class AttenuationCurve {
 public:
  AttenuationCurve(std::span<const double> omega, std::span<const double> alpha) {
    lw_.reserve(omega.size());
    la_.reserve(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
      if (!(alpha[i] > 0.0))
        throw std::invalid_argument(
            "kramers_kronig_check: attenuation must be positive to fit tails");
      lw_.push_back(std::log(omega[i]));
      la_.push_back(std::log(alpha[i]));
    }
    w_lo_ = omega.front();
    w_hi_ = omega.back();
    p_lo_ = loglog_slope(omega, alpha, w_lo_, w_lo_ * 10.0);
    p_hi_ = loglog_slope(omega, alpha, w_hi_ / 10.0, w_hi_);
    a_lo_ = alpha.front() / std::pow(w_lo_, p_lo_);
    a_hi_ = alpha.back() / std::pow(w_hi_, p_hi_);
  }

  double operator()(double w) const {
    if (w <= w_lo_) return a_lo_ * std::pow(w, p_lo_);
    if (w >= w_hi_) return a_hi_ * std::pow(w, p_hi_);
    const double lw = std::log(w);
    auto it = std::upper_bound(lw_.begin(), lw_.end(), lw);
    const std::size_t j = std::min<std::size_t>(lw_.size() - 1,
                                                std::max<std::ptrdiff_t>(1, it - lw_.begin()));
    const double t = (lw - lw_[j - 1]) / (lw_[j] - lw_[j - 1]);
    return std::exp(la_[j - 1] + t * (la_[j] - la_[j - 1]));
  }

  double low_exponent() const { return p_lo_; }
  double high_exponent() const { return p_hi_; }
  double high_coefficient() const { return a_hi_; }
  double band_lo() const { return w_lo_; }
  double band_hi() const { return w_hi_; }

 private:
  std::vector<double> lw_, la_;
  double w_lo_, w_hi_, p_lo_, p_hi_, a_lo_, a_hi_;
};

// PV int_0^inf a(u)/(u^2 - w^2) du, regularized by the exact identity
// PV int_0^inf du/(u^2 - w^2) = 0:
//   = int_0^Umax (a(u) - a(w))/(u^2 - w^2) du
//     + a(w)/(2w) ln((Umax-w)/(Umax+w))          [finite-Umax correction]
//     + int_Umax^inf a(u)/(u^2 - w^2) du          [power-law tail, analytic]
double principal_value(const AttenuationCurve& a, double w) {
  const double aw = a(w);
  const double u0 = a.band_lo() * 1e-6;
  const double umax = a.band_hi() * 1e3;

  // [0, u0], u << w: 1/(u^2-w^2) ~ -1/w^2
  const double p = a.low_exponent();
  double I = -(a(u0) * u0 / (p + 1.0) - aw * u0) / (w * w);

  const auto integrand = [&](double lu) {
    const double u = std::exp(lu);
    return (a(u) - aw) / (u * u - w * w) * u;
  };
  std::vector<double> pts{std::log(u0), std::log(umax)};
  for (const double s : {w / 3.0, w, 3.0 * w, a.band_lo(), a.band_hi()}) {
    if (u0 < s && s < umax) pts.push_back(std::log(s));
  }
  I += integrate_split(integrand, pts, 1e-8, 1e-300).value;

  I += aw / (2.0 * w) * std::log((umax - w) / (umax + w));

  const double q = a.high_exponent();
  if (!(q < 1.0))
    throw std::domain_error(
        "kramers_kronig_check: high-frequency attenuation exponent >= 1; "
        "the once-subtracted dispersion integral does not converge");
  const double ah = a.high_coefficient();
  I += ah * (std::pow(umax, q - 1.0) / (1.0 - q) +
             w * w * std::pow(umax, q - 3.0) / (3.0 - q) +
             w * w * w * w * std::pow(umax, q - 5.0) / (5.0 - q));
  return I;
}

}  // namespace

double kramers_kronig_check(const DispersionResult& d, double reference_omega) {
  if (d.omega.size() < 16)
    throw std::invalid_argument("kramers_kronig_check: too few samples");
  const double decades = std::log10(d.omega.back() / d.omega.front());
  if (decades < 8.0)
    throw std::invalid_argument(
        "kramers_kronig_check: band must span at least 8 decades");

  const double max_atten = *std::max_element(d.alpha_k.begin(), d.alpha_k.end());
  const double mid = std::sqrt(d.omega.front() * d.omega.back());
  const double c_lo = mid / 100.0, c_hi = mid * 100.0;
  if (!(reference_omega >= c_lo && reference_omega <= c_hi))
    throw std::invalid_argument("kramers_kronig_check: reference must be mid-band");

  // snap the reference to the nearest sample
  std::size_t iref = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.omega.size(); ++i) {
    const double dist = std::abs(std::log(d.omega[i] / reference_omega));
    if (dist < best) {
      best = dist;
      iref = i;
    }
  }

  if (max_atten == 0.0) return 0.0;  // lossless: constant c_p reconstructs exactly

  const AttenuationCurve curve(d.omega, d.alpha_k);
  const double pv_ref = principal_value(curve, d.omega[iref]);

  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < d.omega.size(); ++i) {
    if (d.omega[i] < c_lo || d.omega[i] > c_hi) continue;
    const double direct = 1.0 / d.c_p[i] - 1.0 / d.c_p[iref];
    scale = std::max(scale, std::abs(direct));
  }
  if (scale == 0.0) return 0.0;
  for (std::size_t i = 0; i < d.omega.size(); ++i) {
    if (d.omega[i] < c_lo || d.omega[i] > c_hi || i == iref) continue;
    const double recon = 2.0 / kPi * (principal_value(curve, d.omega[i]) - pv_ref);
    const double direct = 1.0 / d.c_p[i] - 1.0 / d.c_p[iref];
    worst = std::max(worst, std::abs(recon - direct) / scale);
  }
  return worst;
}

FiniteSpeedResult finite_speed_check(const FractionalZenerParams& p, MediumModel model) {
  FiniteSpeedResult r{};
  if (model == MediumModel::KelvinVoigt) {
    const double w1 = 1e8 / p.tau_sigma, w2 = 1e12 / p.tau_sigma;
    const double c1 = w1 / wavenumber(kappa_kelvin_voigt(p, w1), p.rho0, w1).real();
    const double c2 = w2 / wavenumber(kappa_kelvin_voigt(p, w2), p.rho0, w2).real();
    r.probe_omega = w2;
    r.measured_c_p = c2;
    r.bounded = c2 <= 1.05 * c1;
    r.c_inf = r.bounded ? c2 : std::numeric_limits<double>::infinity();
    return r;
  }

  if (p.alpha != p.beta)
    throw std::invalid_argument("finite_speed_check: needs alpha = beta");
  const auto adm = check_admissibility(p);
  if (!adm.admissible)
    throw std::invalid_argument("finite_speed_check: needs admissible parameters");

  r.c_inf = p.c0() * std::pow(p.tau_sigma / p.tau_eps, p.alpha / 2.0);
  const auto probe = [&](double w) {
    return w / wavenumber(kappa_zener(p, w), p.rho0, w).real();
  };
  r.probe_omega = 1e8 / p.tau_eps;
  r.measured_c_p = probe(r.probe_omega);
  const double dev1 = std::abs(r.measured_c_p - r.c_inf) / r.c_inf;
  if (dev1 <= 1e-3) {
    r.bounded = true;
    return r;
  }
  // slow algebraic approach (small alpha): accept if the deviation shrinks
  const double dev2 = std::abs(probe(1e12 / p.tau_eps) - r.c_inf) / r.c_inf;
  r.bounded = dev2 <= 1e-3 || dev2 < 0.5 * dev1;
  return r;
}

NonnegativityScan nonnegativity_scan(const ContinuumDistribution& dist,
                                     std::span<const double> grid) {
  if (grid.size() < 2)
    throw std::invalid_argument("nonnegativity_scan: need a grid");
  if (std::log10(grid.back() / grid.front()) < 8.0)
    throw std::invalid_argument("nonnegativity_scan: grid must span >= 8 decades");

  NonnegativityScan r;
  r.nonnegative = true;
  double prev_x = grid.front();
  double prev_v = distribution_value(dist, prev_x);
  if (prev_v < 0.0) {
    r.nonnegative = false;
    r.first_violation = prev_x;
    return r;
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x = grid[i];
    const double v = distribution_value(dist, x);
    if (v < 0.0) {
      // bisect back to the sign change for a tight violation location
      double lo = prev_x, hi = x;
      for (int it = 0; it < 80 && hi / lo > 1.0 + 1e-12; ++it) {
        const double m = std::sqrt(lo * hi);
        (distribution_value(dist, m) < 0.0 ? hi : lo) = m;
      }
      r.nonnegative = false;
      r.first_violation = hi;
      return r;
    }
    prev_x = x;
    prev_v = v;
  }
  (void)prev_v;
  return r;
}

CausalityReport causality_report(const FractionalZenerParams& p) {
  if (p.alpha != p.beta)
    throw std::invalid_argument("causality_report: needs alpha = beta");
  CausalityReport r{};

  const auto grid = log_grid(1e-6 / p.tau_sigma, 1e6 / p.tau_sigma, 16);
  const DispersionResult d = attenuation_and_speed(p, grid);
  r.reference_omega = 1.0 / p.tau_sigma;  // geometric mid-band
  r.kk_max_rel_error = kramers_kronig_check(d, r.reference_omega);

  const auto fs = finite_speed_check(p);
  r.phase_speed_bounded = fs.bounded;
  r.c_inf = fs.c_inf;

  // lossless degenerate media have no attenuation growth at all
  r.hf_attenuation_exponent =
      (p.tau_sigma == p.tau_eps) ? 0.0 : attenuation_regimes(p).fitted_high;

  ContinuumDistribution dist;
  dist.kind = DistributionKind::MittagLeffler;
  dist.params = p;
  const auto scan_grid = log_grid(1e-6 / p.tau_sigma, 1e6 / p.tau_sigma, 24);
  r.distribution_nonnegative = nonnegativity_scan(dist, scan_grid).nonnegative;
  return r;
}

}  // namespace fracwave
