#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "fracwave/config.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/runner.hpp"

namespace {

int execute(const std::string& config_path, fracwave::RunOptions opt, bool fit_only) {
  try {
    fracwave::RunConfig cfg = fracwave::parse_config_file(config_path);
    if (fit_only) {
      if (!cfg.fit.present)
        throw fracwave::ConfigError("this config has no fit section", 0, "fit");
      cfg.tasks = {fracwave::TaskKind::Fit};
    }
    fracwave::run(cfg, opt);
    return 0;
  } catch (const fracwave::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const fracwave::QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracwave: power-law attenuation, relaxation spectra and causality "
               "checks for fractional viscoelastic wave models"};
  app.require_subcommand(1);

  std::string config_path;
  fracwave::RunOptions opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "run configuration file")->required();
    cmd->add_option("--out", opt.out_dir, "output directory (default: .)");
    cmd->add_flag("--svg", opt.svg, "also write SVG line plots");
    cmd->add_option("--points-per-decade", opt.points_per_decade_override,
                    "override the sweep density");
    cmd->add_flag("--quiet", opt.quiet, "suppress progress output");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "execute every task in the config");
  add_common(cmd_run);
  CLI::App* cmd_fit = app.add_subcommand("fit", "run only the fit task");
  add_common(cmd_fit);

  CLI11_PARSE(app, argc, argv);

  return execute(config_path, opt, cmd_fit->parsed());
}
