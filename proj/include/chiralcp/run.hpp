#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "chiralcp/config.hpp"

namespace chiralcp {

// Flat numeric table, one row per sample. Column names are stable and SI
// unless suffixed otherwise.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  json meta;
};

// Locale-independent shortest round-trip float formatting: the printed
// value parses back to the identical double.
inline std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline void emit_csv(const OutputTable& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_double(row[i]);
    os << "\r\n";
  }
}

inline void emit_json(const OutputTable& table, std::ostream& os) {
  json out;
  out["meta"] = table.meta;
  out["rows"] = json::array();
  for (const auto& row : table.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      r[table.columns[i]] = row[i];
    out["rows"].push_back(std::move(r));
  }
  os << out.dump(2) << "\n";
}

namespace detail {

inline std::vector<double> distance_values(const RunConfig& cfg) {
  if (cfg.z_grid)
    return cfg.z_grid->values();
  return {*cfg.z};
}

} // namespace detail

inline OutputTable run_response(const RunConfig& cfg) {
  OutputTable t;
  t.columns = {"xi_rad_s", "eps_ixi", "mu_ixi", "im_kappa_ixi"};
  for (double xi : cfg.xi_grid->values()) {
    const ResponseTriple r = eval_imag(*cfg.medium, xi);
    t.rows.push_back({xi, r.eps.real(), r.mu.real(), r.kappa.imag()});
  }
  return t;
}

inline OutputTable run_halfspace(const RunConfig& cfg) {
  OutputTable t;
  t.columns = {"z_m",       "u_e_offres", "u_e_res", "u_c_offres",
               "u_c_res",   "u_e_total",  "u_c_total", "u_total",
               "f_e_total", "f_c_total",  "f_total"};
  for (double z : detail::distance_values(cfg)) {
    const PotentialBreakdown u =
        u_nonretarded_halfspace(*cfg.medium, cfg.molecule, z, cfg.quadrature);
    const ForceBreakdown f =
        ForceBreakdown{3.0 * u.u_electric_offres / z, 3.0 * u.u_electric_res / z,
                       3.0 * u.u_chiral_offres / z, 3.0 * u.u_chiral_res / z};
    t.rows.push_back({z, u.u_electric_offres, u.u_electric_res,
                      u.u_chiral_offres, u.u_chiral_res, u.u_electric(),
                      u.u_chiral(), u.total(), f.f_electric(), f.f_chiral(),
                      f.total()});
  }
  return t;
}

inline OutputTable run_perfect_mirror(const RunConfig& cfg) {
  OutputTable t;
  t.columns = {"z_m", "u_chiral", "f_chiral"};
  for (double z : detail::distance_values(cfg)) {
    t.rows.push_back(
        {z, u_chiral_perfect_mirror(cfg.handedness, cfg.molecule, z, cfg.quadrature),
         force_perfect_mirror(cfg.handedness, cfg.molecule, z, cfg.quadrature)});
  }
  return t;
}

inline OutputTable run_limits_check(const RunConfig& cfg) {
  OutputTable t;
  t.columns = {"z_m",         "u_numeric",       "u_retarded",
               "u_nonretarded", "ratio_retarded", "ratio_nonretarded"};
  for (double z : detail::distance_values(cfg)) {
    const double un =
        u_chiral_perfect_mirror(cfg.handedness, cfg.molecule, z, cfg.quadrature);
    const double ur = u_chiral_retarded_limit(cfg.molecule, z, cfg.handedness);
    const double unr =
        u_chiral_nonretarded_limit(cfg.molecule, z, cfg.handedness);
    t.rows.push_back({z, un, ur, unr, un / ur, un / unr});
  }
  return t;
}

inline OutputTable run_cavity(const RunConfig& cfg) {
  CavityConfig cc;
  cc.gap_width = cfg.gap_width;
  cc.left_medium = *cfg.medium;
  cc.right_medium =
      cfg.right_medium ? *cfg.right_medium : detail::flip_chirality(*cfg.medium);
  cc.molecule = cfg.molecule;
  cc.grid = cfg.cavity_grid;
  cc.wall_margin = cfg.wall_margin;
  const CavityScan s = scan(cc, cfg.quadrature, cfg.jobs);
  OutputTable t;
  t.columns = {"z_m",       "F_e_left",  "F_e_right", "F_e_total", "F_c_left",
               "F_c_right", "F_c_total", "U_e_total", "U_c_total"};
  for (const auto& p : s.points)
    t.rows.push_back({p.z, p.f_e_left, p.f_e_right, p.f_e_total, p.f_c_left,
                      p.f_c_right, p.f_c_total, p.u_e_total, p.u_c_total});
  return t;
}

// Appends display columns in nm and fN for every _m / force column; the SI
// columns always stay.
inline void append_scaled_columns(OutputTable& t) {
  const std::size_t n = t.columns.size();
  std::vector<std::pair<std::size_t, std::string>> extra;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& c = t.columns[i];
    if (c == "z_m" || c.ends_with("_m"))
      extra.emplace_back(i, c.substr(0, c.size() - 2) + "_nm");
    else if (c.starts_with("F_") || c.starts_with("f_"))
      extra.emplace_back(i, c + "_fN");
  }
  for (const auto& [src, name] : extra)
    t.columns.push_back(name);
  for (auto& row : t.rows)
    for (const auto& [src, name] : extra) {
      const bool is_len = name.ends_with("_nm");
      row.push_back(row[src] * (is_len ? 1e9 : 1e15));
    }
}

inline OutputTable run_scenario(const RunConfig& cfg) {
  OutputTable t;
  switch (cfg.scenario) {
  case Scenario::Response:
    t = run_response(cfg);
    break;
  case Scenario::Halfspace:
    t = run_halfspace(cfg);
    break;
  case Scenario::PerfectMirror:
    t = run_perfect_mirror(cfg);
    break;
  case Scenario::Cavity:
    t = run_cavity(cfg);
    break;
  case Scenario::LimitsCheck:
    t = run_limits_check(cfg);
    break;
  }
  if (cfg.scaled_columns)
    append_scaled_columns(t);
  t.meta["config"] = cfg.raw;
  t.meta["version"] = "1.0.0";
  return t;
}

} // namespace chiralcp
