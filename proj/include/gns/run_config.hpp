#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gns/nested_sampler.hpp"

namespace gns {

/// Raised for anything wrong with a run configuration: unreadable file,
/// unknown keys, values violating an invariant. The CLI maps it to exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fully validated run configuration with every default applied.
///
/// Config file schema (INI-style sections, `key = value`, `#` comments):
///
///   [model]    name (required), plus the chosen model's parameters
///   [sampler]  n_live, chain_steps, termination_frac, max_iterations, seed
///   [proposal] fraction  (step-size heuristic, default 0.1)  -- or --
///              sigma     (comma-separated list, one per kind descriptor)
///   [output]   dir, posterior_count
struct RunConfig {
  std::string model_name;
  std::map<std::string, double> model_params;
  SamplerConfig sampler;
  std::optional<std::vector<double>> sigma;  // explicit proposal widths
  double scale_fraction = 0.1;               // used when sigma is absent
  std::string output_dir = "gns_out";
  std::size_t posterior_count = 10000;
};

/// Parses and validates config text. Unknown sections or keys are errors
/// (with a "did you mean" hint when something close exists); invariant
/// violations name the field and the constraint.
RunConfig parse_config(const std::string& text);

/// Reads the file and delegates to parse_config. A missing or unreadable
/// file is a ConfigError naming the path.
RunConfig load_config_file(const std::string& path);

}  // namespace gns
