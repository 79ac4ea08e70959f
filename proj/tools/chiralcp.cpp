// chiralcp: Casimir-Polder potentials and forces for chiral molecules
// near chiral media. Subcommands:
//   run       execute a scenario from a JSON config and emit rows
//   validate  report config diagnostics without running anything

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiralcp/config.hpp"
#include "chiralcp/run.hpp"

namespace {

// Exit codes: 0 ok, 2 config parse/IO failure, 3 invariant violation,
// 4 numerical non-convergence, 1 anything else.
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitNumerics = 4;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
};

chiralcp::json load_with_overrides(const CommonOpts& opts) {
  chiralcp::json j = chiralcp::load_config_file(opts.config_path);
  for (const auto& o : opts.overrides)
    chiralcp::detail::apply_override(j, o);
  return j;
}

int cmd_run(const CommonOpts& opts, const std::string& output_path,
            const std::string& format_flag, bool scaled, unsigned jobs_flag) {
  chiralcp::RunConfig cfg;
  try {
    cfg = chiralcp::parse_config(load_with_overrides(opts));
  } catch (const chiralcp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitParse;
  }
  if (format_flag == "csv")
    cfg.format = chiralcp::OutputFormat::Csv;
  else if (format_flag == "json")
    cfg.format = chiralcp::OutputFormat::Json;
  if (scaled)
    cfg.scaled_columns = true;
  if (jobs_flag > 0)
    cfg.jobs = jobs_flag;

  chiralcp::OutputTable table;
  try {
    table = chiralcp::run_scenario(cfg);
  } catch (const chiralcp::QuadratureError& e) {
    std::cerr << "quadrature error: " << e.what() << "\n";
    return kExitNumerics;
  } catch (const chiralcp::SingularInterfaceError& e) {
    std::cerr << "reflection error: " << e.what() << "\n";
    return kExitNumerics;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return kExitParse;
    }
    os = &file;
  }
  if (cfg.format == chiralcp::OutputFormat::Csv)
    chiralcp::emit_csv(table, *os);
  else
    chiralcp::emit_json(table, *os);
  return 0;
}

int cmd_validate(const CommonOpts& opts) {
  chiralcp::json j;
  try {
    j = load_with_overrides(opts);
  } catch (const chiralcp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitParse;
  }
  const auto diags = chiralcp::validate_config(j);
  bool any_error = false;
  for (const auto& d : diags) {
    std::cout << (d.error ? "error: " : "warning: ") << d.message << "\n";
    any_error = any_error || d.error;
  }
  if (diags.empty())
    std::cout << "ok\n";
  return any_error ? kExitInvariant : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder potentials and forces for chiral molecules "
               "near chiral media"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string output_path;
  std::string format_flag;
  bool scaled = false;
  unsigned jobs = 0;

  auto* run = app.add_subcommand("run", "execute a scenario");
  run->add_option("--config", opts.config_path, "JSON config file")->required();
  run->add_option("--set", opts.overrides,
                  "override a config value, dotted path key=value");
  run->add_option("--output", output_path, "write rows here instead of stdout");
  run->add_option("--format", format_flag, "csv or json")
      ->check(CLI::IsMember({"csv", "json", ""}));
  run->add_flag("--scale", scaled, "append nm / fN display columns");
  run->add_option("--jobs", jobs, "worker threads for cavity scans");

  auto* validate = app.add_subcommand("validate", "check a config");
  validate->add_option("--config", opts.config_path, "JSON config file")
      ->required();
  validate->add_option("--set", opts.overrides,
                       "override a config value, dotted path key=value");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return cmd_run(opts, output_path, format_flag, scaled, jobs);
  return cmd_validate(opts);
}
