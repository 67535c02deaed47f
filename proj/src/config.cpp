#include "fracwave/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fracwave {

std::string ConfigError::format(const std::string& m, int line, const std::string& f) {
  std::ostringstream os;
  os << "config error";
  if (line > 0) os << " (line " << line << ")";
  if (!f.empty()) os << " [" << f << "]";
  os << ": " << m;
  return os.str();
}

const char* to_string(ModelType m) {
  switch (m) {
    case ModelType::Zener: return "zener";
    case ModelType::Modified: return "modified";
    case ModelType::KelvinVoigt: return "kelvin_voigt";
    case ModelType::Discrete: return "discrete";
    case ModelType::Continuum: return "continuum";
  }
  return "?";
}

const char* to_string(TaskKind t) {
  switch (t) {
    case TaskKind::Dispersion: return "dispersion";
    case TaskKind::Attenuation: return "attenuation";
    case TaskKind::PhaseVelocity: return "phase_velocity";
    case TaskKind::Distribution: return "distribution";
    case TaskKind::Regimes: return "regimes";
    case TaskKind::Causality: return "causality";
    case TaskKind::Fit: return "fit";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RawValue {
  std::string text;
  int line = 0;
  mutable bool used = false;
};

class KeyTable {
 public:
  void insert(const std::string& key, const std::string& value, int line) {
    if (entries_.count(key))
      throw ConfigError("duplicate key (first on line " +
                            std::to_string(entries_[key].line) + ")",
                        line, key);
    entries_[key] = RawValue{value, line, false};
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  const RawValue* find(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  std::string get_string(const std::string& key, const std::string& fallback = {},
                         bool required = false) const {
    const RawValue* rv = find(key);
    if (!rv) {
      if (required) throw ConfigError("missing required key", 0, key);
      return fallback;
    }
    return rv->text;
  }

  // number with optional unit annotation; the unit, when present, must equal
  // the canonical unit of the key
  double get_number(const std::string& key, const std::string& unit,
                    double fallback, bool required) const {
    const RawValue* rv = find(key);
    if (!rv) {
      if (required) throw ConfigError("missing required key", 0, key);
      return fallback;
    }
    std::istringstream ss(rv->text);
    std::string num_tok, unit_tok, extra;
    ss >> num_tok;
    ss >> unit_tok;
    ss >> extra;
    if (!extra.empty())
      throw ConfigError("trailing tokens after value", rv->line, key);
    double v;
    if (num_tok == "inf" || num_tok == "+inf") {
      v = std::numeric_limits<double>::infinity();
    } else {
      char* end = nullptr;
      v = std::strtod(num_tok.c_str(), &end);
      if (end == num_tok.c_str() || *end != '\0')
        throw ConfigError("not a number: '" + num_tok + "'", rv->line, key);
    }
    if (!unit_tok.empty() && unit_tok != unit)
      throw ConfigError("unit '" + unit_tok + "' does not match expected '" + unit + "'",
                        rv->line, key);
    return v;
  }

  int get_int(const std::string& key, int fallback, bool required = false) const {
    const double v = get_number(key, "", static_cast<double>(fallback), required);
    if (v != std::floor(v))
      throw ConfigError("expected an integer", line_of(key), key);
    return static_cast<int>(v);
  }

  int line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  void reject_unused() const {
    for (const auto& [key, rv] : entries_) {
      if (!rv.used) throw ConfigError("unknown key", rv.line, key);
    }
  }

 private:
  std::map<std::string, RawValue> entries_;
};

std::vector<RelaxationMechanism> parse_mechanisms(const std::string& text, int line) {
  std::vector<RelaxationMechanism> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("mechanism must be tau:kappa, got '" + item + "'", line,
                        "model.mechanisms");
    try {
      out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw ConfigError("bad mechanism numbers in '" + item + "'", line,
                        "model.mechanisms");
    }
  }
  return out;
}

FractionalZenerParams parse_medium(const KeyTable& t, const std::string& prefix,
                                   bool need_tau_eps, bool need_beta) {
  FractionalZenerParams p{};
  p.kappa0 = t.get_number(prefix + ".kappa0", "Pa^-1", 0.0, true);
  p.rho0 = t.get_number(prefix + ".rho0", "kg/m^3", 0.0, true);
  p.tau_sigma = t.get_number(prefix + ".tau_sigma", "s", 0.0, true);
  p.tau_eps = t.get_number(prefix + ".tau_eps", "s", 0.0, need_tau_eps);
  p.alpha = t.get_number(prefix + ".alpha", "", 0.0, true);
  p.beta = t.get_number(prefix + ".beta", "", p.alpha, need_beta);

  const auto bad = [&](const std::string& k, const std::string& why) {
    throw ConfigError(why, t.line_of(prefix + "." + k), prefix + "." + k);
  };
  if (!(p.kappa0 > 0.0) || !std::isfinite(p.kappa0)) bad("kappa0", "must be positive");
  if (!(p.rho0 > 0.0) || !std::isfinite(p.rho0)) bad("rho0", "must be positive");
  if (!(p.tau_sigma > 0.0) || !std::isfinite(p.tau_sigma)) bad("tau_sigma", "must be positive");
  if (!(p.tau_eps >= 0.0) || !std::isfinite(p.tau_eps)) bad("tau_eps", "must be nonnegative");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) bad("alpha", "must lie in (0, 1]");
  if (!(p.beta > 0.0 && p.beta <= 1.0)) bad("beta", "must lie in (0, 1]");
  return p;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  KeyTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", lineno);
    if (value.empty()) throw ConfigError("empty value", lineno, key);
    table.insert(key, value, lineno);
  }

  RunConfig cfg;

  const std::string mt = table.get_string("model.type", "", true);
  if (mt == "zener") cfg.model = ModelType::Zener;
  else if (mt == "modified") cfg.model = ModelType::Modified;
  else if (mt == "kelvin_voigt") cfg.model = ModelType::KelvinVoigt;
  else if (mt == "discrete") cfg.model = ModelType::Discrete;
  else if (mt == "continuum") cfg.model = ModelType::Continuum;
  else
    throw ConfigError("unknown model type '" + mt + "'", table.line_of("model.type"),
                      "model.type");

  switch (cfg.model) {
    case ModelType::Zener:
    case ModelType::Modified:
      cfg.params = parse_medium(table, "model", true, true);
      break;
    case ModelType::KelvinVoigt:
      cfg.params = parse_medium(table, "model", false, false);
      cfg.params.tau_eps = 0.0;
      cfg.params.beta = cfg.params.alpha;
      break;
    case ModelType::Continuum:
      cfg.continuum_kind = table.get_string("continuum.kind", "ml");
      if (cfg.continuum_kind != "ml" && cfg.continuum_kind != "ml_prime" &&
          cfg.continuum_kind != "tabulated")
        throw ConfigError("continuum.kind must be ml, ml_prime or tabulated",
                          table.line_of("continuum.kind"), "continuum.kind");
      cfg.continuum_lo = table.get_number("continuum.omega_lo", "rad/s", 0.0, false);
      cfg.continuum_hi = table.get_number("continuum.omega_hi", "rad/s",
                                          std::numeric_limits<double>::infinity(), false);
      if (!(cfg.continuum_lo >= 0.0) || !(cfg.continuum_hi > cfg.continuum_lo))
        throw ConfigError("need 0 <= omega_lo < omega_hi",
                          table.line_of("continuum.omega_hi"), "continuum.omega_hi");
      if (cfg.continuum_kind == "tabulated") {
        cfg.continuum_table = table.get_string("continuum.table", "", true);
        // the table still needs a static compressibility + density
        cfg.params.kappa0 = table.get_number("model.kappa0", "Pa^-1", 0.0, true);
        cfg.params.rho0 = table.get_number("model.rho0", "kg/m^3", 0.0, true);
      } else {
        cfg.params = parse_medium(table, "model", true, cfg.continuum_kind == "ml_prime");
      }
      break;
    case ModelType::Discrete: {
      const RawValue* mech = table.find("model.mechanisms");
      if (!mech) throw ConfigError("missing required key", 0, "model.mechanisms");
      cfg.mechanisms = parse_mechanisms(mech->text, mech->line);
      if (cfg.mechanisms.empty())
        throw ConfigError("at least one mechanism required", mech->line,
                          "model.mechanisms");
      cfg.params.kappa0 = table.get_number("model.kappa0", "Pa^-1", 0.0, true);
      cfg.params.rho0 = table.get_number("model.rho0", "kg/m^3", 0.0, true);
      break;
    }
  }

  // tasks
  const RawValue* tasks_rv = table.find("tasks");
  if (!tasks_rv) throw ConfigError("missing required key", 0, "tasks");
  std::istringstream ts(tasks_rv->text);
  std::string tok;
  while (std::getline(ts, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    if (tok == "dispersion") cfg.tasks.push_back(TaskKind::Dispersion);
    else if (tok == "attenuation") cfg.tasks.push_back(TaskKind::Attenuation);
    else if (tok == "phase_velocity") cfg.tasks.push_back(TaskKind::PhaseVelocity);
    else if (tok == "distribution") cfg.tasks.push_back(TaskKind::Distribution);
    else if (tok == "regimes") cfg.tasks.push_back(TaskKind::Regimes);
    else if (tok == "causality") cfg.tasks.push_back(TaskKind::Causality);
    else if (tok == "fit") cfg.tasks.push_back(TaskKind::Fit);
    else
      throw ConfigError("unknown task '" + tok + "'", tasks_rv->line, "tasks");
  }
  if (cfg.tasks.empty())
    throw ConfigError("no tasks requested", tasks_rv->line, "tasks");

  const bool needs_sweep =
      std::any_of(cfg.tasks.begin(), cfg.tasks.end(), [](TaskKind t) {
        return t != TaskKind::Fit && t != TaskKind::Regimes && t != TaskKind::Causality;
      });
  cfg.sweep_lo = table.get_number("sweep.omega_lo", "rad/s", 0.0, needs_sweep);
  cfg.sweep_hi = table.get_number("sweep.omega_hi", "rad/s", 0.0, needs_sweep);
  cfg.points_per_decade = table.get_int("sweep.points_per_decade", 16, false);
  if (needs_sweep) {
    if (!(cfg.sweep_lo > 0.0) || !(cfg.sweep_hi > cfg.sweep_lo) ||
        !std::isfinite(cfg.sweep_hi))
      throw ConfigError("need 0 < omega_lo < omega_hi (finite)",
                        table.line_of("sweep.omega_hi"), "sweep.omega_hi");
  }
  if (cfg.points_per_decade < 4)
    throw ConfigError("need at least 4 points per decade",
                      table.line_of("sweep.points_per_decade"),
                      "sweep.points_per_decade");

  cfg.output_prefix = table.get_string("output.prefix", "", true);

  // fit section
  const bool wants_fit = std::count(cfg.tasks.begin(), cfg.tasks.end(), TaskKind::Fit) > 0;
  if (wants_fit) {
    cfg.fit.present = true;
    cfg.fit.model = table.get_string("fit.model", "zener");
    if (cfg.fit.model != "zener" && cfg.fit.model != "discrete")
      throw ConfigError("fit.model must be zener or discrete",
                        table.line_of("fit.model"), "fit.model");
    cfg.fit.target = table.get_string("fit.target", "powerlaw");
    if (cfg.fit.target != "powerlaw" && cfg.fit.target != "file")
      throw ConfigError("fit.target must be powerlaw or file",
                        table.line_of("fit.target"), "fit.target");
    if (cfg.fit.target == "powerlaw") {
      cfg.fit.eta = table.get_number("fit.eta", "", 0.0, true);
      cfg.fit.coefficient = table.get_number("fit.coefficient", "", 0.0, true);
      cfg.fit.omega_lo = table.get_number("fit.omega_lo", "rad/s", 0.0, true);
      cfg.fit.omega_hi = table.get_number("fit.omega_hi", "rad/s", 0.0, true);
      cfg.fit.n_samples = table.get_int("fit.n_samples", 32, false);
    } else {
      cfg.fit.file = table.get_string("fit.file", "", true);
    }
    cfg.fit.n_mechanisms = table.get_int("fit.n_mechanisms", 2, false);
    cfg.fit.init = parse_medium(table, "fit.init", true, false);
  }

  table.reject_unused();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "model.type = " << to_string(cfg.model) << "\n";
  const auto medium = [&](const std::string& prefix, const FractionalZenerParams& p,
                          bool with_taueps, bool with_beta) {
    os << prefix << ".kappa0 = " << format_number(p.kappa0) << " Pa^-1\n";
    os << prefix << ".tau_sigma = " << format_number(p.tau_sigma) << " s\n";
    if (with_taueps) os << prefix << ".tau_eps = " << format_number(p.tau_eps) << " s\n";
    os << prefix << ".alpha = " << format_number(p.alpha) << "\n";
    if (with_beta) os << prefix << ".beta = " << format_number(p.beta) << "\n";
    os << prefix << ".rho0 = " << format_number(p.rho0) << " kg/m^3\n";
  };
  switch (cfg.model) {
    case ModelType::Zener:
    case ModelType::Modified:
      medium("model", cfg.params, true, true);
      break;
    case ModelType::KelvinVoigt:
      medium("model", cfg.params, false, false);
      break;
    case ModelType::Continuum:
      os << "continuum.kind = " << cfg.continuum_kind << "\n";
      os << "continuum.omega_lo = " << format_number(cfg.continuum_lo) << " rad/s\n";
      os << "continuum.omega_hi = " << format_number(cfg.continuum_hi) << " rad/s\n";
      if (cfg.continuum_kind == "tabulated") {
        os << "continuum.table = " << cfg.continuum_table << "\n";
        os << "model.kappa0 = " << format_number(cfg.params.kappa0) << " Pa^-1\n";
        os << "model.rho0 = " << format_number(cfg.params.rho0) << " kg/m^3\n";
      } else {
        medium("model", cfg.params, true, cfg.continuum_kind == "ml_prime");
      }
      break;
    case ModelType::Discrete: {
      os << "model.kappa0 = " << format_number(cfg.params.kappa0) << " Pa^-1\n";
      os << "model.rho0 = " << format_number(cfg.params.rho0) << " kg/m^3\n";
      os << "model.mechanisms = ";
      for (std::size_t i = 0; i < cfg.mechanisms.size(); ++i) {
        if (i) os << ", ";
        os << format_number(cfg.mechanisms[i].tau_nu) << ":"
           << format_number(cfg.mechanisms[i].kappa_nu);
      }
      os << "\n";
      break;
    }
  }
  if (cfg.sweep_lo > 0.0) {
    os << "sweep.omega_lo = " << format_number(cfg.sweep_lo) << " rad/s\n";
    os << "sweep.omega_hi = " << format_number(cfg.sweep_hi) << " rad/s\n";
  }
  os << "sweep.points_per_decade = " << cfg.points_per_decade << "\n";
  os << "tasks = ";
  for (std::size_t i = 0; i < cfg.tasks.size(); ++i) {
    if (i) os << ", ";
    os << to_string(cfg.tasks[i]);
  }
  os << "\n";
  os << "output.prefix = " << cfg.output_prefix << "\n";
  if (cfg.fit.present) {
    os << "fit.model = " << cfg.fit.model << "\n";
    os << "fit.n_mechanisms = " << cfg.fit.n_mechanisms << "\n";
    os << "fit.target = " << cfg.fit.target << "\n";
    if (cfg.fit.target == "powerlaw") {
      os << "fit.eta = " << format_number(cfg.fit.eta) << "\n";
      os << "fit.coefficient = " << format_number(cfg.fit.coefficient) << "\n";
      os << "fit.omega_lo = " << format_number(cfg.fit.omega_lo) << " rad/s\n";
      os << "fit.omega_hi = " << format_number(cfg.fit.omega_hi) << " rad/s\n";
      os << "fit.n_samples = " << cfg.fit.n_samples << "\n";
    } else {
      os << "fit.file = " << cfg.fit.file << "\n";
    }
    medium("fit.init", cfg.fit.init, true, false);
  }
  return os.str();
}

}  // namespace fracwave
