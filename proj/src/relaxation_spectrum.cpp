#include "fracwave/relaxation_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fracwave/numerics.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

namespace {

constexpr double kPi = std::numbers::pi;

void require_omega(double omega, const char* who) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument(std::string(who) + ": need finite omega > 0");
}

void validate_ml_params(const FractionalZenerParams& p, const char* who,
                        bool need_equal_orders) {
  if (!(p.kappa0 > 0.0) || !(p.tau_sigma > 0.0) || !(p.tau_eps >= 0.0))
    throw std::invalid_argument(std::string(who) + ": invalid medium parameters");
  if (!(p.alpha > 0.0) || !(p.alpha <= 1.0) || !(p.beta > 0.0) || !(p.beta <= 1.0))
    throw std::invalid_argument(std::string(who) + ": orders must lie in (0, 1]");
  if (need_equal_orders && p.alpha != p.beta)
    throw std::invalid_argument(std::string(who) + ": needs alpha = beta");
}

// Piecewise-linear tabulated distribution; zero outside the table.
double table_value(const std::vector<std::pair<double, double>>& t, double Omega) {
  if (t.empty() || Omega < t.front().first || Omega > t.back().first) return 0.0;
  auto it = std::lower_bound(t.begin(), t.end(), Omega,
                             [](const auto& a, double b) { return a.first < b; });
  if (it == t.begin()) return it->second;
  const auto [x1, y1] = *it;
  const auto [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (Omega - x0) / (x1 - x0);
}

}  // namespace

std::complex<double> kappa_discrete(const DiscreteRelaxationSet& s, double omega) {
  require_omega(omega, "kappa_discrete");
  if (!(s.kappa0 > 0.0))
    throw std::invalid_argument("kappa_discrete: need kappa0 > 0");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& m : s.mechanisms) {
    if (!(m.tau_nu > 0.0) || !(m.kappa_nu >= 0.0))
      throw std::invalid_argument("kappa_discrete: need tau_nu > 0, kappa_nu >= 0");
    acc += m.kappa_nu * m.tau_nu / std::complex<double>(1.0, omega * m.tau_nu);
  }
  return s.kappa0 - std::complex<double>(0.0, omega) * acc;
}

DiscreteRelaxationSet debye_from_zener(const FractionalZenerParams& p) {
  if (p.alpha != 1.0 || p.beta != 1.0)
    throw std::invalid_argument("debye_from_zener: needs alpha = beta = 1");
  return {p.kappa0, {{p.tau_sigma, p.kappa0 * (1.0 - p.tau_eps / p.tau_sigma)}}};
}

double kappa_ml_distribution(const FractionalZenerParams& p, double Omega) {
  validate_ml_params(p, "kappa_ml_distribution", /*need_equal_orders=*/true);
  require_omega(Omega, "kappa_ml_distribution");
  const double a = p.alpha;
  if (!(std::pow(p.tau_sigma, a) >= std::pow(p.tau_eps, a)))
    throw std::invalid_argument("kappa_ml_distribution: needs tau_sigma >= tau_eps");
  const double x = p.tau_sigma * Omega;
  const double den = std::pow(x, 2.0 * a) + 2.0 * std::pow(x, a) * std::cos(a * kPi) + 1.0;
  const double num = p.kappa0 * (std::pow(p.tau_sigma, a) - std::pow(p.tau_eps, a)) *
                     std::pow(Omega, a - 1.0) * std::sin(a * kPi);
  return num / (kPi * den);
}

double kappa_ml_prime(const FractionalZenerParams& p, double Omega) {
  validate_ml_params(p, "kappa_ml_prime", /*need_equal_orders=*/false);
  require_omega(Omega, "kappa_ml_prime");
  if (!(p.alpha <= p.beta))
    throw std::invalid_argument(
        "kappa_ml_prime: the Laplace identity behind this distribution requires alpha <= beta");
  const double a = p.alpha, b = p.beta;
  const double xs = std::pow(p.tau_sigma * Omega, a);
  const double xe = std::pow(p.tau_eps * Omega, b);
  const double den = xs * xs + 2.0 * xs * std::cos(a * kPi) + 1.0;
  const double bracket = xs * std::sin(a * kPi) - xe * std::sin(b * kPi) -
                         xs * xe * std::sin((b - a) * kPi);
  return p.kappa0 / (kPi * Omega * den) * bracket;
}

double distribution_value(const ContinuumDistribution& d, double Omega) {
  require_omega(Omega, "distribution_value");
  if (Omega < d.omega_lo || Omega > d.omega_hi) return 0.0;
  switch (d.kind) {
    case DistributionKind::MittagLeffler:
      return kappa_ml_distribution(d.params, Omega);
    case DistributionKind::MittagLefflerPrime:
      return kappa_ml_prime(d.params, Omega);
    case DistributionKind::Tabulated:
      return table_value(d.table, Omega);
  }
  return 0.0;
}

namespace {

// kappa_N for the closed-form distributions.  The Stieltjes integral is taken
// on u = ln(Omega) with explicit splits at the distribution knees
// (Omega = 1/tau_sigma, 1/tau_eps) and the 1/(Omega + i w) knee at Omega = w;
// power-law tails beyond the numeric window [L, U] are added analytically
// with locally matched coefficients.
std::complex<double> continuum_ml(const ContinuumDistribution& d, double w) {
  const FractionalZenerParams& p = d.params;
  const bool prime = d.kind == DistributionKind::MittagLefflerPrime;
  validate_ml_params(p, "kappa_continuum", /*need_equal_orders=*/!prime);
  const auto weight = [&](double Om) {
    return prime ? kappa_ml_prime(p, Om) : kappa_ml_distribution(p, Om);
  };
  const double a = p.alpha;
  const double q_low = a - 1.0;  // kappa ~ Omega^q_low as Omega -> 0
  const double p_high = prime && p.alpha != p.beta ? p.beta - a - 1.0 : -a - 1.0;

  // window wide enough that the local power laws hold to ~1e-12 relative
  double L = std::pow(1e-12, 1.0 / a) / p.tau_sigma;
  double U = std::pow(1e+12, 1.0 / a) / p.tau_sigma;
  if (prime && p.alpha != p.beta)
    U = std::max(U, std::pow(1e+12, 1.0 / (a + 1.0 - p.beta)) / p.tau_sigma);
  L = std::min(L, w * 1e-7);
  U = std::max(U, w * 1e+7);

  const bool lower_tail = d.omega_lo <= 0.0;
  const bool upper_tail = !std::isfinite(d.omega_hi);
  const double lo = lower_tail ? L : d.omega_lo;
  const double hi = upper_tail ? U : d.omega_hi;
  if (!(lo > 0.0) || !(lo < hi))
    throw std::invalid_argument("kappa_continuum: empty distribution band");

  // J_r = int kappa Omega/(Omega^2+w^2) dOmega, J_i = int kappa/(Omega^2+w^2);
  // in u = ln(Omega) the integrands become kappa/(1+r^2) and kappa/(Omega(1+r^2))
  // with r = w/Omega, which neither overflow nor lose accuracy at the window
  // extremes.
  const auto jr = [&](double u) {
    const double Om = std::exp(u);
    const double r = w / Om;
    return weight(Om) / (1.0 + r * r);
  };
  const auto ji = [&](double u) {
    const double Om = std::exp(u);
    const double r = w / Om;
    return weight(Om) / (Om * (1.0 + r * r));
  };
  std::vector<double> pts{std::log(lo), std::log(hi)};
  for (const double knee :
       {1.0 / p.tau_sigma, (p.tau_eps > 0.0 ? 1.0 / p.tau_eps : 0.0), w}) {
    if (knee > 0.0 && lo < knee && knee < hi) pts.push_back(std::log(knee));
  }
  double Jr = integrate_split(jr, pts, 1e-10, 1e-300).value;
  double Ji = integrate_split(ji, pts, 1e-10, 1e-300).value;

  if (upper_tail) {
    const double K = weight(U);  // kappa ~ K (Omega/U)^p_high beyond U; U >> w
    double rr = 0.0, ii = 0.0;
    for (int m = 0; m <= 2; ++m) {
      const double s = (m % 2 == 0) ? 1.0 : -1.0;
      const double ratio = std::pow(w / U, 2.0 * m);
      rr += s * ratio / (2.0 * m - p_high);
      ii += s * ratio / (2.0 * m + 1.0 - p_high);
    }
    Jr += K * rr;
    Ji += K / U * ii;
  }
  if (lower_tail) {
    const double K = weight(L);  // kappa ~ K (Omega/L)^q_low below L; L << w
    const double KL = K * L;
    const double l_over_w2 = (L / w) * (L / w);
    Jr += KL * (L / (w * w)) * (1.0 / (q_low + 2.0) - l_over_w2 / (q_low + 4.0));
    Ji += KL / (w * w) * (1.0 / (q_low + 1.0) - l_over_w2 / (q_low + 3.0));
  }

  return {p.kappa0 - w * w * Ji, -w * Jr};
}

// Exact segment integral of a linear weight against 1/(Omega + i w):
//   (m Omega + c)/(Omega + i w) = m + (c - m i w)/(Omega + i w).
std::complex<double> continuum_tabulated(const ContinuumDistribution& d, double w) {
  std::complex<double> acc(0.0, 0.0);
  const std::complex<double> iw(0.0, w);
  for (std::size_t i = 0; i + 1 < d.table.size(); ++i) {
    const auto [x0, y0] = d.table[i];
    const auto [x1, y1] = d.table[i + 1];
    const double seg_lo = std::max(x0, d.omega_lo);
    const double seg_hi = std::min(x1, d.omega_hi);
    if (!(seg_lo < seg_hi)) continue;
    const double m = (y1 - y0) / (x1 - x0);
    const double c = y0 - m * x0;
    acc += m * (seg_hi - seg_lo) +
           (c - m * iw) * std::log((seg_hi + iw) / (seg_lo + iw));
  }
  return d.params.kappa0 - iw * acc;
}

}  // namespace

std::complex<double> kappa_continuum(const ContinuumDistribution& d, double omega) {
  require_omega(omega, "kappa_continuum");
  if (!(d.omega_lo >= 0.0) || !(d.omega_hi > d.omega_lo))
    throw std::invalid_argument("kappa_continuum: need 0 <= omega_lo < omega_hi");
  switch (d.kind) {
    case DistributionKind::MittagLeffler:
    case DistributionKind::MittagLefflerPrime:
      return continuum_ml(d, omega);
    case DistributionKind::Tabulated: {
      if (d.table.size() < 2)
        throw std::invalid_argument("kappa_continuum: need at least two table rows");
      if (!(d.params.kappa0 > 0.0))
        throw std::invalid_argument(
            "kappa_continuum: tabulated distribution needs params.kappa0 > 0");
      for (const auto& [Om, k] : d.table) {
        if (!(Om > 0.0))
          throw std::invalid_argument("kappa_continuum: table Omega must be positive");
        if (!(k >= 0.0))
          throw std::invalid_argument("kappa_continuum: negative tabulated weight");
      }
      return continuum_tabulated(d, omega);
    }
  }
  throw std::logic_error("kappa_continuum: unknown kind");
}

DistributionRegimeReport distribution_regimes(const FractionalZenerParams& p) {
  validate_ml_params(p, "distribution_regimes", /*need_equal_orders=*/true);
  DistributionRegimeReport r{};
  r.exponent_low = p.alpha - 1.0;
  r.exponent_mid = -1.0;
  r.exponent_high = -p.alpha - 1.0;
  r.break_low = 1.0 / p.tau_sigma;
  r.break_high = p.tau_eps > 0.0 ? 1.0 / p.tau_eps
                                 : std::numeric_limits<double>::infinity();
  if (p.alpha == 1.0) {
    r.fitted_valid = false;  // distribution degenerates to a point mass
    return r;
  }
  const auto grid = log_grid(1e-7 / p.tau_sigma, 1e7 / p.tau_sigma, 16);
  std::vector<double> val(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    val[i] = kappa_ml_distribution(p, grid[i]);
  const double ts = p.tau_sigma;
  r.fitted_low = loglog_slope(grid, val, 1e-6 / ts, 1e-4 / ts);
  r.fitted_mid =
      loglog_slope(grid, val, 1.0 / (ts * std::sqrt(10.0)), std::sqrt(10.0) / ts);
  r.fitted_high = loglog_slope(grid, val, 1e4 / ts, 1e6 / ts);
  r.fitted_valid = true;
  return r;
}

double relaxation_time_spectrum(const FractionalZenerParams& p, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("relaxation_time_spectrum: need finite tau > 0");
  return kappa_ml_distribution(p, 1.0 / tau) / tau;
}

ContinuumDistribution load_tabulated_distribution(std::istream& in) {
  ContinuumDistribution d;
  d.kind = DistributionKind::Tabulated;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double Om, k;
    if (!(ls >> Om)) continue;  // blank / comment-only
    if (!(ls >> k)) {
      std::ostringstream os;
      os << "tabulated distribution, line " << lineno << ": need two columns";
      throw std::invalid_argument(os.str());
    }
    if (!d.table.empty() && !(Om > d.table.back().first)) {
      std::ostringstream os;
      os << "tabulated distribution, line " << lineno
         << ": Omega must be strictly increasing";
      throw std::invalid_argument(os.str());
    }
    if (!(k >= 0.0)) {
      std::ostringstream os;
      os << "tabulated distribution, line " << lineno << ": negative weight";
      throw std::invalid_argument(os.str());
    }
    d.table.emplace_back(Om, k);
  }
  if (d.table.size() < 2)
    throw std::invalid_argument("tabulated distribution: need at least two rows");
  d.omega_lo = d.table.front().first;
  d.omega_hi = d.table.back().first;
  return d;
}

}  // namespace fracwave
