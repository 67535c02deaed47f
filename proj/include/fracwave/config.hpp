#pragma once

#include <istream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracwave/constitutive.hpp"
#include "fracwave/relaxation_spectrum.hpp"

namespace fracwave {

// Configuration problem with the offending line/field attached.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line = 0, std::string field = {})
      : std::runtime_error(format(message, line, field)),
        line_(line),
        field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(const std::string& m, int line, const std::string& f);
  int line_;
  std::string field_;
};

enum class ModelType { Zener, Modified, KelvinVoigt, Discrete, Continuum };
enum class TaskKind {
  Dispersion,
  Attenuation,
  PhaseVelocity,
  Distribution,
  Regimes,
  Causality,
  Fit
};

const char* to_string(ModelType m);
const char* to_string(TaskKind t);

struct FitSection {
  bool present = false;
  std::string model = "zener";      // zener | discrete
  int n_mechanisms = 2;
  std::string target = "powerlaw";  // powerlaw | file
  double eta = 1.0;
  double coefficient = 1.0;
  double omega_lo = 0.0;
  double omega_hi = 0.0;
  int n_samples = 32;
  std::string file;
  FractionalZenerParams init{};
};

// Flat dotted key-value run description.  Grammar (see README): one
// `section.key = value [unit]` per line, `#` comments, `tasks` is a
// comma-separated list, units (when present) must match the canonical unit of
// the key.
struct RunConfig {
  ModelType model = ModelType::Zener;
  FractionalZenerParams params{};
  std::vector<RelaxationMechanism> mechanisms;

  std::string continuum_kind = "ml";  // ml | ml_prime | tabulated
  double continuum_lo = 0.0;
  double continuum_hi = std::numeric_limits<double>::infinity();
  std::string continuum_table;

  double sweep_lo = 0.0;
  double sweep_hi = 0.0;
  int points_per_decade = 16;

  std::vector<TaskKind> tasks;
  std::string output_prefix = "run";

  FitSection fit;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

// Canonical text form; parse(serialize(parse(x))) == parse(x).
std::string serialize_config(const RunConfig& cfg);

}  // namespace fracwave
