#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chiralcp/cavity.hpp"
#include "chiralcp/material.hpp"
#include "chiralcp/molecule.hpp"
#include "chiralcp/potential.hpp"
#include "chiralcp/reflection.hpp"

namespace chiralcp {

using json = nlohmann::json;

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { Response, Halfspace, PerfectMirror, Cavity, LimitsCheck };

enum class OutputFormat { Csv, Json };

// Sampling grid for scan-type scenarios; log spacing excludes zero.
struct Grid {
  double min;
  double max;
  std::size_t points;
  bool log = false;

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(points);
    if (points == 1) {
      v.push_back(min);
      return v;
    }
    if (log) {
      const double lmin = std::log(min), lmax = std::log(max);
      for (std::size_t i = 0; i < points; ++i)
        v.push_back(std::exp(lmin + (lmax - lmin) * static_cast<double>(i) /
                                        static_cast<double>(points - 1)));
    } else {
      for (std::size_t i = 0; i < points; ++i)
        v.push_back(min + (max - min) * static_cast<double>(i) /
                              static_cast<double>(points - 1));
    }
    return v;
  }
};

struct RunConfig {
  Scenario scenario;
  std::optional<ChiralMedium> medium;       // halfspace, response, cavity left
  std::optional<ChiralMedium> right_medium; // cavity only; defaults to mirror
  Molecule molecule;
  Handedness handedness = Handedness::RightHanded;
  std::optional<double> z;      // single distance, m
  std::optional<Grid> z_grid;   // distance sweep
  std::optional<Grid> xi_grid;  // response scenario frequency axis
  double gap_width = 100e-9;
  std::size_t cavity_grid = 200;
  double wall_margin = 1e-9;
  QuadratureSpec quadrature;
  OutputFormat format = OutputFormat::Csv;
  bool scaled_columns = false;
  std::size_t jobs = 1;
  json raw; // config echo for JSON output meta
};

namespace detail {

inline double get_number(const json& j, const std::string& key,
                         const std::string& where) {
  if (!j.contains(key))
    throw ConfigError(where + ": missing key '" + key + "'");
  if (!j.at(key).is_number())
    throw ConfigError(where + ": key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

inline ChiralMedium parse_medium(const json& j, const std::string& where) {
  ChiralMedium m;
  m.eps_model = LorentzOscillator{get_number(j, "omega_p", where),
                                  get_number(j, "omega_E", where),
                                  get_number(j, "gamma_E", where)};
  m.mu_model = LorentzOscillator{get_number(j, "omega_m", where),
                                 get_number(j, "omega_B", where),
                                 get_number(j, "gamma_B", where)};
  m.kappa_model = CondonChirality{get_number(j, "a", where),
                                  get_number(j, "omega_C", where),
                                  get_number(j, "gamma_C", where)};
  if (m.eps_model.strength < 0.0 || m.mu_model.strength < 0.0)
    throw ConfigError(where + ": oscillator strengths must be non-negative");
  if (m.eps_model.resonance < 0.0 || m.mu_model.resonance < 0.0 ||
      m.kappa_model.omega_c < 0.0)
    throw ConfigError(where + ": resonance frequencies must be non-negative");
  return m;
}

inline ChiralMedium flip_chirality(ChiralMedium m) {
  m.kappa_model.a = -m.kappa_model.a;
  return m;
}

inline Molecule parse_molecule(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "dmds-ground")
      return dmds_example(false);
    if (name == "dmds-excited")
      return dmds_example(true);
    if (name == "dmds-ground-mirror")
      return mirror(dmds_example(false));
    if (name == "dmds-excited-mirror")
      return mirror(dmds_example(true));
    throw ConfigError("unknown molecule preset '" + name + "'");
  }
  if (!j.is_object() || !j.contains("transitions") ||
      !j.at("transitions").is_array())
    throw ConfigError("molecule: expected preset name or transitions array");
  Molecule mol;
  for (const auto& t : j.at("transitions")) {
    mol.transitions.push_back(Transition{get_number(t, "omega_kn", "transition"),
                                         get_number(t, "dipole_sq", "transition"),
                                         get_number(t, "rotatory", "transition")});
  }
  check_molecule(mol);
  return mol;
}

inline Grid parse_grid(const json& j, const std::string& where) {
  Grid g;
  g.min = get_number(j, "min", where);
  g.max = get_number(j, "max", where);
  const double pts = get_number(j, "points", where);
  if (pts < 1.0 || pts != std::floor(pts))
    throw ConfigError(where + ": points must be a positive integer");
  g.points = static_cast<std::size_t>(pts);
  g.log = j.value("log", false);
  if (g.log && !(g.min > 0.0))
    throw ConfigError(where + ": log grid requires min > 0");
  if (!(g.min <= g.max))
    throw ConfigError(where + ": min must not exceed max");
  return g;
}

inline Scenario parse_scenario(const std::string& name) {
  if (name == "response")
    return Scenario::Response;
  if (name == "halfspace")
    return Scenario::Halfspace;
  if (name == "perfect-mirror")
    return Scenario::PerfectMirror;
  if (name == "cavity")
    return Scenario::Cavity;
  if (name == "limits-check")
    return Scenario::LimitsCheck;
  throw ConfigError("unknown scenario '" + name + "'");
}

// Dotted-path override, e.g. "medium.omega_p=5.5e14". Values parse as JSON
// first, falling back to a string literal.
inline void apply_override(json& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must be key=value: " + assignment);
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  json* node = &root;
  std::istringstream keys(path);
  std::string key;
  std::vector<std::string> parts;
  while (std::getline(keys, key, '.'))
    parts.push_back(key);
  if (parts.empty())
    throw ConfigError("empty override path");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    node = &(*node)[parts[i]];
  json parsed = json::parse(value, nullptr, false);
  (*node)[parts.back()] = parsed.is_discarded() ? json(value) : parsed;
}

} // namespace detail

inline RunConfig parse_config(const json& j) {
  RunConfig cfg;
  cfg.raw = j;
  if (!j.contains("scenario") || !j.at("scenario").is_string())
    throw ConfigError("config: missing string key 'scenario'");
  cfg.scenario = detail::parse_scenario(j.at("scenario").get<std::string>());

  if (j.contains("medium"))
    cfg.medium = detail::parse_medium(j.at("medium"), "medium");
  if (j.contains("right_medium"))
    cfg.right_medium = detail::parse_medium(j.at("right_medium"), "right_medium");

  if (j.contains("molecule"))
    cfg.molecule = detail::parse_molecule(j.at("molecule"));
  else if (cfg.scenario != Scenario::Response)
    throw ConfigError("config: missing 'molecule'");

  if (j.contains("handedness")) {
    const std::string h = j.at("handedness").get<std::string>();
    if (h == "right")
      cfg.handedness = Handedness::RightHanded;
    else if (h == "left")
      cfg.handedness = Handedness::LeftHanded;
    else
      throw ConfigError("handedness must be 'right' or 'left'");
  }

  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    if (g.contains("z")) {
      cfg.z = detail::get_number(g, "z", "geometry");
      if (!(*cfg.z > 0.0))
        throw ConfigError("geometry.z must be positive");
    }
    if (g.contains("z_grid"))
      cfg.z_grid = detail::parse_grid(g.at("z_grid"), "geometry.z_grid");
    if (g.contains("gap")) {
      cfg.gap_width = detail::get_number(g, "gap", "geometry");
      if (!(cfg.gap_width > 0.0))
        throw ConfigError("geometry.gap must be positive");
    }
    if (g.contains("grid")) {
      const double n = detail::get_number(g, "grid", "geometry");
      if (n < 3.0 || n != std::floor(n))
        throw ConfigError("geometry.grid must be an integer >= 3");
      cfg.cavity_grid = static_cast<std::size_t>(n);
    }
    if (g.contains("margin")) {
      cfg.wall_margin = detail::get_number(g, "margin", "geometry");
      if (!(cfg.wall_margin > 0.0))
        throw ConfigError("geometry.margin must be positive");
    }
  }

  if (j.contains("frequency_grid"))
    cfg.xi_grid = detail::parse_grid(j.at("frequency_grid"), "frequency_grid");

  if (!cfg.molecule.transitions.empty())
    cfg.quadrature = default_xi_spec(cfg.molecule);
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    if (q.contains("rel_tol")) {
      cfg.quadrature.rel_tol = detail::get_number(q, "rel_tol", "quadrature");
      if (!(cfg.quadrature.rel_tol > 0.0))
        throw ConfigError("quadrature.rel_tol must be positive");
    }
    if (q.contains("base_nodes")) {
      const double n = detail::get_number(q, "base_nodes", "quadrature");
      if (n < 8.0 || n != std::floor(n))
        throw ConfigError("quadrature.base_nodes must be an integer >= 8");
      cfg.quadrature.base_nodes = static_cast<std::size_t>(n);
    }
    if (q.contains("max_doublings"))
      cfg.quadrature.max_doublings = static_cast<std::size_t>(
          detail::get_number(q, "max_doublings", "quadrature"));
    if (q.contains("scale")) {
      cfg.quadrature.scale = detail::get_number(q, "scale", "quadrature");
      if (!(cfg.quadrature.scale > 0.0))
        throw ConfigError("quadrature.scale must be positive");
    }
    if (q.contains("mapping")) {
      const std::string m = q.at("mapping").get<std::string>();
      if (m == "rational")
        cfg.quadrature.mapping = StretchKind::Rational;
      else if (m == "exponential")
        cfg.quadrature.mapping = StretchKind::Exponential;
      else
        throw ConfigError("quadrature.mapping must be rational or exponential");
    }
  }

  if (j.contains("format")) {
    const std::string f = j.at("format").get<std::string>();
    if (f == "csv")
      cfg.format = OutputFormat::Csv;
    else if (f == "json")
      cfg.format = OutputFormat::Json;
    else
      throw ConfigError("format must be 'csv' or 'json'");
  }
  if (j.contains("jobs")) {
    const double n = detail::get_number(j, "jobs", "config");
    if (n < 1.0 || n != std::floor(n))
      throw ConfigError("jobs must be a positive integer");
    cfg.jobs = static_cast<std::size_t>(n);
  }

  // Scenario-specific requirements.
  switch (cfg.scenario) {
  case Scenario::Response:
    if (!cfg.medium)
      throw ConfigError("response scenario requires 'medium'");
    if (!cfg.xi_grid)
      throw ConfigError("response scenario requires 'frequency_grid'");
    break;
  case Scenario::Halfspace:
    if (!cfg.medium)
      throw ConfigError("halfspace scenario requires 'medium'");
    if (!cfg.z && !cfg.z_grid)
      throw ConfigError("halfspace scenario requires geometry.z or z_grid");
    break;
  case Scenario::PerfectMirror:
  case Scenario::LimitsCheck:
    if (!cfg.z && !cfg.z_grid)
      throw ConfigError("scenario requires geometry.z or z_grid");
    break;
  case Scenario::Cavity:
    if (!cfg.medium)
      throw ConfigError("cavity scenario requires 'medium' (left wall)");
    break;
  }
  return cfg;
}

inline json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ConfigError("config file is not valid JSON: " + path);
  return j;
}

// Non-fatal and fatal findings for `validate`.
struct Diagnostic {
  bool error; // false: warning
  std::string message;
};

inline std::vector<Diagnostic> validate_config(const json& j) {
  std::vector<Diagnostic> out;
  RunConfig cfg;
  try {
    cfg = parse_config(j);
  } catch (const std::exception& e) {
    out.push_back(Diagnostic{true, e.what()});
    return out;
  }
  auto check_medium = [&](const ChiralMedium& m, const std::string& name) {
    if (m.kappa_model.gamma_c < 0.0)
      out.push_back(Diagnostic{
          false, name + ": negative gamma_C (active Condon resonance); "
                        "passivity may be violated near omega_C"});
    const double probe = m.eps_model.resonance > 0.0 ? m.eps_model.resonance
                                                     : cfg.quadrature.scale;
    if (probe > 0.0) {
      const PassivityReport rep = passivity_report(m, probe);
      if (!rep.passive)
        out.push_back(Diagnostic{
            false, name + ": passivity bound (Im k)^2 < Im(eps) Im(mu) "
                          "violated at the permittivity resonance"});
    }
  };
  if (cfg.medium)
    check_medium(*cfg.medium, "medium");
  if (cfg.right_medium)
    check_medium(*cfg.right_medium, "right_medium");
  return out;
}

} // namespace chiralcp
