#pragma once

#include <string>
#include <vector>

#include "fracwave/config.hpp"

namespace fracwave {

struct RunOptions {
  std::string out_dir = ".";
  bool svg = false;
  int points_per_decade_override = 0;  // 0: keep the config's value
  bool quiet = false;
};

struct RunOutcome {
  std::vector<std::string> files_written;
};

// Executes every task in the config and writes one CSV per sweep task, a JSON
// report, and optional SVG plots.  Outputs are deterministic: identical
// config, identical bytes.  Throws ConfigError for configuration problems and
// std::domain_error / QuadratureError for numerical ones; the CLI maps those
// to exit codes 2 and 3.
RunOutcome run(const RunConfig& cfg, const RunOptions& opt);

// Parallelism cap for frequency sweeps: FRACWAVE_THREADS (>= 1), default the
// hardware concurrency.
int sweep_thread_cap();

}  // namespace fracwave
