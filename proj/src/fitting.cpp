#include "fracwave/fitting.hpp"

#include <gsl/gsl_multifit_nlinear.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "fracwave/dispersion.hpp"

namespace fracwave {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double y) {
  if (!(y > 0.0 && y < 1.0))
    throw std::invalid_argument("fit: value must lie strictly inside (0, 1)");
  return std::log(y / (1.0 - y));
}

void validate_target(const AttenuationTarget& t, const char* who,
                     bool need_two_decades) {
  if (t.omega.size() < 4)
    throw std::invalid_argument(std::string(who) + ": too few target samples");
  if (t.omega.size() != t.alpha_k.size() ||
      (!t.weight.empty() && t.weight.size() != t.omega.size()))
    throw std::invalid_argument(std::string(who) + ": ragged target arrays");
  for (std::size_t i = 0; i < t.omega.size(); ++i) {
    if (!(t.omega[i] > 0.0) || (i > 0 && !(t.omega[i] > t.omega[i - 1])))
      throw std::invalid_argument(std::string(who) +
                                  ": omegas must be positive, strictly increasing");
    if (!(t.alpha_k[i] > 0.0))
      throw std::invalid_argument(std::string(who) +
                                  ": log-space fit needs positive attenuation samples");
    if (!t.weight.empty() && !(t.weight[i] > 0.0))
      throw std::invalid_argument(std::string(who) + ": weights must be positive");
  }
  if (need_two_decades && std::log10(t.band_hi() / t.band_lo()) < 2.0)
    throw std::invalid_argument(std::string(who) + ": target must span >= 2 decades");
}

// residual vector callback shared by both fits
struct Problem {
  const AttenuationTarget* target;
  std::function<double(const gsl_vector*, double)> model;  // alpha_k(theta, omega)
};

int fill_residuals(const gsl_vector* x, void* params, gsl_vector* f) {
  const auto* prob = static_cast<const Problem*>(params);
  const AttenuationTarget& t = *prob->target;
  for (std::size_t i = 0; i < t.omega.size(); ++i) {
    const double m = prob->model(x, t.omega[i]);
    if (!(m > 0.0) || !std::isfinite(m)) return GSL_EDOM;
    const double w = t.weight.empty() ? 1.0 : t.weight[i];
    gsl_vector_set(f, i, std::sqrt(w) * (std::log(m) - std::log(t.alpha_k[i])));
  }
  return GSL_SUCCESS;
}

struct LMOutcome {
  std::vector<double> x;
  double rms = 0.0;
  int iterations = 0;
  bool converged = false;
};

LMOutcome run_lm(const Problem& prob, const std::vector<double>& x0, int max_iter) {
  const std::size_t n = prob.target->omega.size();
  const std::size_t p = x0.size();
  if (n < p)
    throw std::invalid_argument("fit: more parameters than target samples");

  gsl_multifit_nlinear_fdf fdf{};
  fdf.f = &fill_residuals;
  fdf.df = nullptr;  // finite-difference Jacobian
  fdf.fvv = nullptr;
  fdf.n = n;
  fdf.p = p;
  fdf.params = const_cast<void*>(static_cast<const void*>(&prob));

  gsl_multifit_nlinear_parameters fparams = gsl_multifit_nlinear_default_parameters();
  fparams.trs = gsl_multifit_nlinear_trs_lm;

  std::unique_ptr<gsl_multifit_nlinear_workspace,
                  decltype(&gsl_multifit_nlinear_free)>
      w(gsl_multifit_nlinear_alloc(gsl_multifit_nlinear_trust, &fparams, n, p),
        &gsl_multifit_nlinear_free);
  if (!w) throw std::runtime_error("fit: workspace allocation failed");

  gsl_vector_const_view xv = gsl_vector_const_view_array(x0.data(), p);
  if (gsl_multifit_nlinear_init(&xv.vector, &fdf, w.get()) != GSL_SUCCESS)
    throw std::runtime_error("fit: initialization failed (model invalid at start)");

  int info = 0;
  const int status = gsl_multifit_nlinear_driver(max_iter, 1e-12, 1e-10, 0.0,
                                                 nullptr, nullptr, &info, w.get());

  LMOutcome out;
  out.converged = (status == GSL_SUCCESS);
  out.iterations = static_cast<int>(gsl_multifit_nlinear_niter(w.get()));
  out.x.resize(p);
  for (std::size_t j = 0; j < p; ++j)
    out.x[j] = gsl_vector_get(w->x, j);

  const gsl_vector* f = gsl_multifit_nlinear_residual(w.get());
  double ss = 0.0, sw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = gsl_vector_get(f, i);
    ss += ri * ri;
    sw += prob.target->weight.empty() ? 1.0 : prob.target->weight[i];
  }
  out.rms = std::sqrt(ss / sw);
  return out;
}

}  // namespace

AttenuationTarget synthesize_powerlaw_target(double eta, double coefficient,
                                             double omega_lo, double omega_hi,
                                             int n_samples) {
  if (!(eta >= 0.0 && eta <= 2.0))
    throw std::invalid_argument("synthesize_powerlaw_target: eta must lie in [0, 2]");
  if (!(coefficient > 0.0))
    throw std::invalid_argument("synthesize_powerlaw_target: coefficient must be positive");
  if (!(omega_lo > 0.0) || !(omega_hi > omega_lo) || !std::isfinite(omega_hi))
    throw std::invalid_argument("synthesize_powerlaw_target: bad band");
  if (n_samples < 8)
    throw std::invalid_argument("synthesize_powerlaw_target: need >= 8 samples");

  AttenuationTarget t;
  t.omega.resize(n_samples);
  t.alpha_k.resize(n_samples);
  const double llo = std::log(omega_lo), lhi = std::log(omega_hi);
  for (int i = 0; i < n_samples; ++i) {
    const double w = std::exp(llo + (lhi - llo) * i / (n_samples - 1));
    t.omega[i] = w;
    t.alpha_k[i] = coefficient * std::pow(w, eta);
  }
  return t;
}

AttenuationTarget load_attenuation_target(std::istream& in) {
  AttenuationTarget t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double w, a;
    if (!(ls >> w)) continue;
    if (!(ls >> a)) {
      std::ostringstream os;
      os << "attenuation target, line " << lineno << ": need two columns";
      throw std::invalid_argument(os.str());
    }
    if (!t.omega.empty() && !(w > t.omega.back())) {
      std::ostringstream os;
      os << "attenuation target, line " << lineno
         << ": omega must be strictly increasing";
      throw std::invalid_argument(os.str());
    }
    t.omega.push_back(w);
    t.alpha_k.push_back(a);
  }
  if (t.omega.size() < 4)
    throw std::invalid_argument("attenuation target: need at least four rows");
  return t;
}

ZenerFitResult fit_zener(const AttenuationTarget& target,
                         const FractionalZenerParams& init) {
  validate_target(target, "fit_zener", /*need_two_decades=*/true);
  const auto adm = check_admissibility(init);
  if (!adm.admissible)
    throw std::invalid_argument("fit_zener: initial guess must be admissible");

  const double kappa0 = init.kappa0;  // pinned by c0
  const double rho0 = init.rho0;

  // theta = (ln tau_sigma, logit(alpha), logit(tau_eps/tau_sigma)): every
  // iterate satisfies tau_eps < tau_sigma and alpha = beta in (0, 1).
  const auto decode = [&](const gsl_vector* x) {
    FractionalZenerParams p{};
    p.kappa0 = kappa0;
    p.rho0 = rho0;
    p.tau_sigma = std::exp(gsl_vector_get(x, 0));
    p.alpha = sigmoid(gsl_vector_get(x, 1));
    p.beta = p.alpha;
    p.tau_eps = p.tau_sigma * sigmoid(gsl_vector_get(x, 2));
    return p;
  };

  Problem prob;
  prob.target = &target;
  prob.model = [&](const gsl_vector* x, double w) {
    const FractionalZenerParams p = decode(x);
    return -wavenumber(kappa_zener(p, w), rho0, w).imag();
  };

  const double a0 = std::clamp(init.alpha, 1e-3, 1.0 - 1e-9);
  const double r0 = std::clamp(init.tau_eps / init.tau_sigma, 1e-12, 1.0 - 1e-9);
  const std::vector<double> x0{std::log(init.tau_sigma), logit(a0), logit(r0)};

  const LMOutcome out = run_lm(prob, x0, 400);
  ZenerFitResult r;
  gsl_vector_const_view xv = gsl_vector_const_view_array(out.x.data(), out.x.size());
  r.params = decode(&xv.vector);
  r.residual_rms = out.rms;
  r.iterations = out.iterations;
  r.converged = out.converged;
  return r;
}

namespace {

DiscreteRelaxationSet decode_discrete(const std::vector<double>& x, double kappa0) {
  DiscreteRelaxationSet s;
  s.kappa0 = kappa0;
  const std::size_t n = x.size() / 2;
  s.mechanisms.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.mechanisms[i] = {std::exp(x[2 * i]), std::exp(x[2 * i + 1])};
  return s;
}

}  // namespace

DiscreteFitResult fit_discrete(const AttenuationTarget& target,
                               const DiscreteFitConfig& cfg) {
  validate_target(target, "fit_discrete", /*need_two_decades=*/false);
  if (cfg.n_mechanisms < 1)
    throw std::invalid_argument("fit_discrete: need n_mechanisms >= 1");
  if (!(cfg.kappa0 > 0.0) || !(cfg.rho0 > 0.0))
    throw std::invalid_argument("fit_discrete: need kappa0 > 0 and rho0 > 0");

  Problem prob;
  prob.target = &target;
  prob.model = [&](const gsl_vector* x, double w) {
    DiscreteRelaxationSet s;
    s.kappa0 = cfg.kappa0;
    const std::size_t n = x->size / 2;
    s.mechanisms.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      s.mechanisms[i] = {std::exp(gsl_vector_get(x, 2 * i)),
                         std::exp(gsl_vector_get(x, 2 * i + 1))};
    return -wavenumber(kappa_discrete(s, w), cfg.rho0, w).imag();
  };

  // mechanisms placed log-uniformly across the band (relaxation frequency
  // 1/tau inside [band_lo, band_hi]), equal small contributions
  const auto prescribed_init = [&](int n) {
    std::vector<double> x(2 * n);
    const double lt_lo = std::log(1.0 / target.band_hi());
    const double lt_hi = std::log(1.0 / target.band_lo());
    for (int i = 0; i < n; ++i) {
      const double f = (n == 1) ? 0.5 : static_cast<double>(i) / (n - 1);
      x[2 * i] = lt_lo + f * (lt_hi - lt_lo);
      x[2 * i + 1] = std::log(cfg.kappa0 * 0.01 / n);
    }
    return x;
  };

  LMOutcome best{};
  std::vector<double> warm;
  int total_iter = 0;
  for (int n = 1; n <= cfg.n_mechanisms; ++n) {
    LMOutcome cand = run_lm(prob, prescribed_init(n), 500);
    if (!warm.empty()) {
      // previous optimum plus one negligible mechanism keeps the residual
      // weakly decreasing in the mechanism count
      std::vector<double> grown = warm;
      grown.push_back(std::log(std::sqrt(1.0 / (target.band_lo() * target.band_hi()))));
      grown.push_back(std::log(cfg.kappa0 * 1e-9));
      LMOutcome alt = run_lm(prob, grown, 500);
      if (alt.rms < cand.rms) cand = alt;
    }
    total_iter += cand.iterations;
    warm = cand.x;
    best = std::move(cand);
  }

  DiscreteFitResult r;
  r.set = decode_discrete(best.x, cfg.kappa0);
  r.residual_rms = best.rms;
  r.iterations = total_iter;
  r.converged = best.converged;
  return r;
}

}  // namespace fracwave
