// Command-line front end: run nested sampling from a config file, verify a
// run against the brute-force quadrature oracle, or list the built-in
// models. Exit codes: 0 success, 1 config error, 2 runtime error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gns/models.hpp"
#include "gns/nested_sampler.hpp"
#include "gns/oracle.hpp"
#include "gns/output.hpp"
#include "gns/proposal.hpp"
#include "gns/run_config.hpp"

namespace {

gns::ProposalScales resolve_scales(const gns::RunConfig& cfg,
                                   const gns::ParameterSpace& space) {
  if (cfg.sigma) {
    gns::ProposalScales scales{*cfg.sigma};
    try {
      gns::validate_scales(space, scales);
    } catch (const std::invalid_argument& e) {
      throw gns::ConfigError(std::string("[proposal] sigma: ") + e.what());
    }
    return scales;
  }
  return gns::suggest_scales(space, cfg.scale_fraction);
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::string> out_dir,
            std::optional<std::size_t> n_live, bool quiet) {
  gns::RunConfig cfg = gns::load_config_file(config_path);
  // Precedence: CLI flag > config file > default.
  if (seed) cfg.sampler.seed = *seed;
  if (out_dir) cfg.output_dir = *out_dir;
  if (n_live) {
    cfg.sampler.n_live = *n_live;
    try {
      cfg.sampler.validate();
    } catch (const std::invalid_argument& e) {
      throw gns::ConfigError(e.what());
    }
  }

  const gns::ModelSpec model = gns::make_model(cfg.model_name, cfg.model_params);
  const gns::ProposalScales scales = resolve_scales(cfg, model.space);

  const auto t0 = std::chrono::steady_clock::now();
  const gns::RunResult result = gns::run(cfg.sampler, model.space,
                                         model.log_likelihood, scales,
                                         cfg.posterior_count);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;

  gns::write_outputs(result, cfg, model, scales);

  if (!quiet) {
    std::cout << "model = " << model.name << '\n'
              << "log_z = " << gns::format_double(result.log_z) << '\n'
              << "log_z_err = " << gns::format_double(result.log_z_err) << '\n'
              << "information_nats = "
              << gns::format_double(result.information_nats) << '\n'
              << "n_iterations = " << result.n_iterations << '\n'
              << "acceptance_rate = "
              << gns::format_double(result.acceptance_rate) << '\n'
              << "likelihood_evals = " << result.likelihood_evals << '\n'
              << "truncated = " << (result.truncated ? "true" : "false") << '\n'
              << "wall_seconds = " << elapsed.count() << '\n'
              << "outputs in " << cfg.output_dir << '\n';
    if (result.truncated) {
      std::cout << "warning: stopped at max_iterations before the "
                   "termination criterion\n";
    }
  }
  return 0;
}

/// Pulls `key = value` out of a previously written summary.txt.
std::optional<double> summary_value(const std::filesystem::path& path,
                                    const std::string& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    const std::string prefix = key + " = ";
    if (line.rfind(prefix, 0) == 0) {
      return std::strtod(line.c_str() + prefix.size(), nullptr);
    }
  }
  return std::nullopt;
}

int cmd_verify(const std::string& config_path, std::size_t grid) {
  gns::RunConfig cfg = gns::load_config_file(config_path);
  const gns::ModelSpec model = gns::make_model(cfg.model_name, cfg.model_params);

  const gns::QuadratureSpec spec{grid, model.space};
  const double oracle = gns::grid_log_evidence(spec, model.log_likelihood);
  std::cout << "oracle log_z = " << gns::format_double(oracle) << "  (grid "
            << grid << " points per dimension)\n";

  const std::filesystem::path summary =
      std::filesystem::path(cfg.output_dir) / "summary.txt";
  const auto log_z = summary_value(summary, "log_z");
  const auto log_z_err = summary_value(summary, "log_z_err");
  if (log_z && log_z_err) {
    std::cout << "sampler log_z = " << gns::format_double(*log_z) << " +- "
              << gns::format_double(*log_z_err) << '\n';
    const double delta = *log_z - oracle;
    std::cout << "difference = " << gns::format_double(delta);
    if (*log_z_err > 0.0) {
      std::cout << "  (" << gns::format_double(std::abs(delta) / *log_z_err)
                << " sigma)";
    }
    std::cout << '\n';
  } else {
    std::cout << "no sampler summary at " << summary.string()
              << "; run the `run` subcommand first for a comparison\n";
  }
  return 0;
}

int cmd_list_models() {
  for (const auto& info : gns::model_catalog()) {
    std::cout << info.name << " - " << info.summary << '\n';
    for (const auto& p : info.params) {
      std::cout << "    " << p.name << " (default "
                << gns::format_double(p.default_value) << "): " << p.doc
                << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested sampling with geometric Metropolis-Hastings proposals"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> n_live;
  bool quiet = false;
  std::size_t grid = 512;

  auto* run_cmd = app.add_subcommand("run", "run nested sampling");
  run_cmd->add_option("--config", config_path, "path to the run config")
      ->required();
  run_cmd->add_option("--seed", seed, "override [sampler] seed");
  run_cmd->add_option("--out-dir", out_dir, "override [output] dir");
  run_cmd->add_option("--n-live", n_live, "override [sampler] n_live");
  run_cmd->add_flag("--quiet", quiet, "suppress the stdout summary");

  auto* verify_cmd = app.add_subcommand(
      "verify", "compare a run against the grid quadrature oracle");
  verify_cmd->add_option("--config", config_path, "path to the run config")
      ->required();
  verify_cmd->add_option("--grid", grid, "grid points per dimension");

  auto* list_cmd = app.add_subcommand("list-models", "list built-in models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 1;
  }

  try {
    if (run_cmd->parsed()) {
      return cmd_run(config_path, seed, out_dir, n_live, quiet);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(config_path, grid);
    }
    if (list_cmd->parsed()) {
      return cmd_list_models();
    }
  } catch (const gns::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
