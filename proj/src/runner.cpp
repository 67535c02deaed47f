#include "fracwave/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "fracwave/causality.hpp"
#include "fracwave/csv.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/fitting.hpp"
#include "fracwave/mittag_leffler.hpp"
#include "fracwave/numerics.hpp"
#include "fracwave/svg.hpp"

namespace fracwave {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

int env_thread_cap() {
  const char* env = std::getenv("FRACWAVE_THREADS");
  if (env) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Deterministic parallel map: results land in index order regardless of the
// thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int threads = std::min<int>(sweep_thread_cap(), static_cast<int>(n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct ModelContext {
  const RunConfig* cfg = nullptr;
  KappaFn kappa;
  double rho0 = 0.0;
  bool has_tau_sigma = false;
  ContinuumDistribution continuum;       // for continuum model / distribution task
  DiscreteRelaxationSet discrete;
};

ModelContext build_model(const RunConfig& cfg, const std::string& config_dir) {
  ModelContext mc;
  mc.cfg = &cfg;
  switch (cfg.model) {
    case ModelType::Zener:
      mc.kappa = [p = cfg.params](double w) { return kappa_zener(p, w); };
      mc.rho0 = cfg.params.rho0;
      mc.has_tau_sigma = true;
      break;
    case ModelType::Modified: {
      const ModifiedZenerParams mp(cfg.params);  // validates alpha <= beta
      mc.kappa = [mp](double w) { return kappa_modified_zener(mp, w); };
      mc.rho0 = cfg.params.rho0;
      mc.has_tau_sigma = true;
      break;
    }
    case ModelType::KelvinVoigt:
      mc.kappa = [p = cfg.params](double w) { return kappa_kelvin_voigt(p, w); };
      mc.rho0 = cfg.params.rho0;
      mc.has_tau_sigma = true;
      break;
    case ModelType::Discrete:
      mc.discrete = {cfg.params.kappa0, cfg.mechanisms};
      mc.kappa = [s = mc.discrete](double w) { return kappa_discrete(s, w); };
      mc.rho0 = cfg.params.rho0;
      break;
    case ModelType::Continuum: {
      ContinuumDistribution d;
      if (cfg.continuum_kind == "ml") d.kind = DistributionKind::MittagLeffler;
      else if (cfg.continuum_kind == "ml_prime") d.kind = DistributionKind::MittagLefflerPrime;
      else d.kind = DistributionKind::Tabulated;
      d.params = cfg.params;
      d.omega_lo = cfg.continuum_lo;
      d.omega_hi = cfg.continuum_hi;
      if (d.kind == DistributionKind::Tabulated) {
        const fs::path table_path = fs::path(config_dir) / cfg.continuum_table;
        std::ifstream in(table_path);
        if (!in) {
          std::ifstream in2(cfg.continuum_table);
          if (!in2)
            throw ConfigError("cannot open distribution table '" + cfg.continuum_table + "'",
                              0, "continuum.table");
          d = load_tabulated_distribution(in2);
        } else {
          d = load_tabulated_distribution(in);
        }
        d.params = cfg.params;  // carries kappa0
        if (cfg.continuum_lo > 0.0) d.omega_lo = std::max(d.omega_lo, cfg.continuum_lo);
        if (std::isfinite(cfg.continuum_hi)) d.omega_hi = std::min(d.omega_hi, cfg.continuum_hi);
      }
      mc.continuum = d;
      mc.kappa = [d = mc.continuum](double w) { return kappa_continuum(d, w); };
      mc.rho0 = cfg.params.rho0;
      mc.has_tau_sigma = d.kind != DistributionKind::Tabulated;
      break;
    }
  }
  return mc;
}

DispersionResult parallel_sweep(const ModelContext& mc, const std::vector<double>& grid) {
  DispersionResult r;
  r.omega = grid;
  r.k.resize(grid.size());
  r.alpha_k.resize(grid.size());
  r.c_p.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const double w = grid[i];
    const std::complex<double> k = wavenumber(mc.kappa(w), mc.rho0, w);
    r.k[i] = k;
    r.alpha_k[i] = -k.imag();
    r.c_p[i] = w / k.real();
  });
  return r;
}

ordered_json medium_json(const FractionalZenerParams& p) {
  return ordered_json{{"kappa0", p.kappa0},     {"tau_sigma", p.tau_sigma},
                      {"tau_eps", p.tau_eps},   {"alpha", p.alpha},
                      {"beta", p.beta},         {"rho0", p.rho0},
                      {"c0", p.c0()}};
}

}  // namespace

int sweep_thread_cap() {
  static const int cap = env_thread_cap();
  return cap;
}

RunOutcome run(const RunConfig& cfg, const RunOptions& opt) {
  RunOutcome outcome;
  RunConfig effective = cfg;
  if (opt.points_per_decade_override > 0) {
    if (opt.points_per_decade_override < 4)
      throw ConfigError("need at least 4 points per decade", 0, "--points-per-decade");
    effective.points_per_decade = opt.points_per_decade_override;
  }

  fs::create_directories(opt.out_dir);
  const auto out_path = [&](const std::string& suffix) {
    return (fs::path(opt.out_dir) / (effective.output_prefix + suffix)).string();
  };

  const ModelContext mc = build_model(effective, ".");
  const double tau_sigma = effective.params.tau_sigma;

  ordered_json report;
  report["tool"] = "fracwave";
  report["model"] = ordered_json{{"type", to_string(effective.model)}};
  if (effective.model != ModelType::Discrete &&
      !(effective.model == ModelType::Continuum && effective.continuum_kind == "tabulated"))
    report["model"]["parameters"] = medium_json(effective.params);
  else
    report["model"]["parameters"] =
        ordered_json{{"kappa0", effective.params.kappa0}, {"rho0", effective.params.rho0}};
  {
    ordered_json tasks = ordered_json::array();
    for (const TaskKind t : effective.tasks) tasks.push_back(to_string(t));
    report["tasks"] = tasks;
  }

  // shared sweep for the dispersion-flavored tasks
  DispersionResult sweep;
  const bool needs_sweep = std::any_of(
      effective.tasks.begin(), effective.tasks.end(), [](TaskKind t) {
        return t == TaskKind::Dispersion || t == TaskKind::Attenuation ||
               t == TaskKind::PhaseVelocity;
      });
  if (needs_sweep) {
    const auto grid =
        log_grid(effective.sweep_lo, effective.sweep_hi, effective.points_per_decade);
    sweep = parallel_sweep(mc, grid);
  }

  const auto emit = [&](const std::string& name) { outcome.files_written.push_back(name); };

  for (const TaskKind task : effective.tasks) {
    switch (task) {
      case TaskKind::Dispersion: {
        std::vector<std::string> cols;
        std::vector<std::vector<double>> rows(sweep.omega.size());
        cols = {"omega", "re_k", "im_k", "alpha_k", "c_p"};
        if (mc.has_tau_sigma) cols.insert(cols.begin() + 1, "omega_tau_sigma");
        for (std::size_t i = 0; i < sweep.omega.size(); ++i) {
          auto& row = rows[i];
          row.push_back(sweep.omega[i]);
          if (mc.has_tau_sigma) row.push_back(sweep.omega[i] * tau_sigma);
          row.insert(row.end(), {sweep.k[i].real(), sweep.k[i].imag(),
                                 sweep.alpha_k[i], sweep.c_p[i]});
        }
        const std::string path = out_path("_dispersion.csv");
        write_csv(path, cols, rows);
        emit(path);
        break;
      }
      case TaskKind::Attenuation:
      case TaskKind::PhaseVelocity: {
        const bool atten = task == TaskKind::Attenuation;
        std::vector<std::string> cols{"omega"};
        if (mc.has_tau_sigma) cols.push_back("omega_tau_sigma");
        cols.push_back(atten ? "alpha_k" : "c_p");
        std::vector<std::vector<double>> rows(sweep.omega.size());
        for (std::size_t i = 0; i < sweep.omega.size(); ++i) {
          rows[i].push_back(sweep.omega[i]);
          if (mc.has_tau_sigma) rows[i].push_back(sweep.omega[i] * tau_sigma);
          rows[i].push_back(atten ? sweep.alpha_k[i] : sweep.c_p[i]);
        }
        const std::string path = out_path(atten ? "_attenuation.csv" : "_phase_velocity.csv");
        write_csv(path, cols, rows);
        emit(path);
        if (opt.svg) {
          const std::string spath = out_path(atten ? "_attenuation.svg" : "_phase_velocity.svg");
          write_loglog_svg(spath, atten ? "attenuation" : "phase velocity",
                           "omega [rad/s]", atten ? "alpha_k [Np/m]" : "c_p [m/s]",
                           sweep.omega, atten ? sweep.alpha_k : sweep.c_p);
          emit(spath);
        }
        break;
      }
      case TaskKind::Distribution: {
        const auto grid =
            log_grid(effective.sweep_lo, effective.sweep_hi, effective.points_per_decade);
        std::vector<double> value(grid.size());
        switch (effective.model) {
          case ModelType::Zener:
          case ModelType::KelvinVoigt:
            parallel_for(grid.size(), [&](std::size_t i) {
              value[i] = kappa_ml_distribution(effective.params, grid[i]);
            });
            break;
          case ModelType::Modified:
            parallel_for(grid.size(), [&](std::size_t i) {
              value[i] = kappa_ml_prime(effective.params, grid[i]);
            });
            break;
          case ModelType::Continuum:
            parallel_for(grid.size(), [&](std::size_t i) {
              value[i] = distribution_value(mc.continuum, grid[i]);
            });
            break;
          case ModelType::Discrete:
            throw ConfigError("the distribution task needs a continuum-type model", 0,
                              "tasks");
        }
        std::vector<std::string> cols{"Omega"};
        if (mc.has_tau_sigma) cols.push_back("Omega_tau_sigma");
        cols.push_back("kappa_nu");
        std::vector<std::vector<double>> rows(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
          rows[i].push_back(grid[i]);
          if (mc.has_tau_sigma) rows[i].push_back(grid[i] * tau_sigma);
          rows[i].push_back(value[i]);
        }
        const std::string path = out_path("_distribution.csv");
        write_csv(path, cols, rows);
        emit(path);
        if (opt.svg) {
          const std::string spath = out_path("_distribution.svg");
          write_loglog_svg(spath, "relaxation distribution", "Omega [rad/s]",
                           "kappa_nu [Pa^-1 s]", grid, value);
          emit(spath);
        }
        break;
      }
      case TaskKind::Regimes: {
        if (effective.model != ModelType::Zener)
          throw ConfigError("the regimes task needs model.type = zener", 0, "tasks");
        const auto ar = attenuation_regimes(effective.params);
        const auto dr = distribution_regimes(effective.params);
        report["regimes"] = ordered_json{
            {"attenuation",
             {{"exponents", {ar.exponent_low, ar.exponent_mid, ar.exponent_high}},
              {"fitted", {ar.fitted_low, ar.fitted_mid, ar.fitted_high}},
              {"breaks", {ar.break_low, ar.break_high}},
              {"has_intermediate", ar.has_intermediate}}},
            {"distribution",
             {{"exponents", {dr.exponent_low, dr.exponent_mid, dr.exponent_high}},
              {"fitted", {dr.fitted_low, dr.fitted_mid, dr.fitted_high}},
              {"breaks", {dr.break_low, dr.break_high}},
              {"fitted_valid", dr.fitted_valid}}}};
        break;
      }
      case TaskKind::Causality: {
        if (effective.model == ModelType::Zener) {
          const CausalityReport cr = causality_report(effective.params);
          report["causality"] = ordered_json{
              {"kk_max_rel_error", cr.kk_max_rel_error},
              {"phase_speed_bounded", cr.phase_speed_bounded},
              {"hf_attenuation_exponent", cr.hf_attenuation_exponent},
              {"distribution_nonnegative", cr.distribution_nonnegative},
              {"reference_omega", cr.reference_omega},
              {"c_inf", cr.c_inf}};
        } else if (effective.model == ModelType::KelvinVoigt) {
          const auto fs_res = finite_speed_check(effective.params, MediumModel::KelvinVoigt);
          const auto grid = log_grid(1e-6 / tau_sigma, 1e6 / tau_sigma, 16);
          const DispersionResult d = parallel_sweep(mc, grid);
          const double kk = kramers_kronig_check(d, 1.0 / tau_sigma);
          report["causality"] = ordered_json{
              {"kk_max_rel_error", kk},
              {"phase_speed_bounded", fs_res.bounded},
              {"c_inf", fs_res.c_inf}};
        } else {
          throw ConfigError("the causality task needs a zener or kelvin_voigt model", 0,
                            "tasks");
        }
        break;
      }
      case TaskKind::Fit: {
        const FitSection& f = effective.fit;
        AttenuationTarget target;
        if (f.target == "powerlaw") {
          target = synthesize_powerlaw_target(f.eta, f.coefficient, f.omega_lo,
                                              f.omega_hi, f.n_samples);
        } else {
          std::ifstream in(f.file);
          if (!in) throw ConfigError("cannot open target '" + f.file + "'", 0, "fit.file");
          target = load_attenuation_target(in);
        }
        if (f.model == "zener") {
          const ZenerFitResult r = fit_zener(target, f.init);
          report["fit"] = ordered_json{{"model", "zener"},
                                       {"params", medium_json(r.params)},
                                       {"residual_rms", r.residual_rms},
                                       {"iterations", r.iterations},
                                       {"converged", r.converged}};
        } else {
          DiscreteFitConfig dc{f.n_mechanisms, f.init.kappa0, f.init.rho0};
          const DiscreteFitResult r = fit_discrete(target, dc);
          ordered_json mechs = ordered_json::array();
          for (const auto& m : r.set.mechanisms)
            mechs.push_back(ordered_json{{"tau_nu", m.tau_nu}, {"kappa_nu", m.kappa_nu}});
          report["fit"] = ordered_json{{"model", "discrete"},
                                       {"kappa0", r.set.kappa0},
                                       {"mechanisms", mechs},
                                       {"residual_rms", r.residual_rms},
                                       {"iterations", r.iterations},
                                       {"converged", r.converged}};
        }
        break;
      }
    }
  }

  {
    ordered_json files = ordered_json::array();
    for (const auto& f : outcome.files_written)
      files.push_back(fs::path(f).filename().string());
    report["outputs"] = files;
    const std::string path = out_path("_report.json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << report.dump(2) << "\n";
    outcome.files_written.push_back(path);
  }

  if (!opt.quiet) {
    for (const auto& f : outcome.files_written) std::cout << "wrote " << f << "\n";
  }
  return outcome;
}

}  // namespace fracwave
