#include "gns/run_config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gns/models.hpp"
#include "gns/suggest.hpp"

namespace gns {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE) {
    throw ConfigError("[" + section + "] " + key + ": \"" + value +
                      "\" is not a number");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& section, const std::string& key,
                        const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || value.empty() ||
      errno == ERANGE || value.front() == '-') {
    throw ConfigError("[" + section + "] " + key + ": \"" + value +
                      "\" is not a non-negative integer");
  }
  return v;
}

std::size_t parse_count(const std::string& section, const std::string& key,
                        const std::string& value) {
  return static_cast<std::size_t>(parse_u64(section, key, value));
}

std::vector<double> parse_double_list(const std::string& section,
                                      const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(section, key, trim(item)));
  }
  if (out.empty()) {
    throw ConfigError("[" + section + "] " + key + ": empty list");
  }
  return out;
}

[[noreturn]] void unknown_key(const std::string& section,
                              const std::string& key,
                              const std::vector<std::string>& known) {
  std::string msg = "[" + section + "]: unknown key \"" + key + "\"";
  const std::string near = detail::closest_match(key, known);
  if (!near.empty()) msg += " (did you mean \"" + near + "\"?)";
  throw ConfigError(msg);
}

std::vector<std::string> model_param_names(const std::string& model) {
  std::vector<std::string> names = {"name"};
  for (const auto& info : model_catalog()) {
    if (info.name == model) {
      for (const auto& p : info.params) names.push_back(p.name);
    }
  }
  return names;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool have_fraction = false;
  bool have_sigma = false;
  std::map<std::string, std::string> model_raw;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "model" && section != "sampler" &&
          section != "proposal" && section != "output") {
        std::string msg = "unknown section [" + section + "]";
        const std::string near = detail::closest_match(
            section, {"model", "sampler", "proposal", "output"});
        if (!near.empty()) msg += " (did you mean [" + near + "]?)";
        throw ConfigError(msg);
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": key \"" + key + "\" outside any section");
    }

    if (section == "model") {
      if (key == "name") {
        cfg.model_name = value;
      } else {
        model_raw[key] = value;  // validated against the model below
      }
    } else if (section == "sampler") {
      if (key == "n_live") {
        cfg.sampler.n_live = parse_count(section, key, value);
      } else if (key == "chain_steps") {
        cfg.sampler.chain_steps = parse_count(section, key, value);
      } else if (key == "termination_frac") {
        cfg.sampler.termination_frac = parse_double(section, key, value);
      } else if (key == "max_iterations") {
        cfg.sampler.max_iterations = parse_count(section, key, value);
      } else if (key == "seed") {
        cfg.sampler.seed = parse_u64(section, key, value);
      } else {
        unknown_key(section, key,
                    {"n_live", "chain_steps", "termination_frac",
                     "max_iterations", "seed"});
      }
    } else if (section == "proposal") {
      if (key == "fraction") {
        cfg.scale_fraction = parse_double(section, key, value);
        have_fraction = true;
      } else if (key == "sigma") {
        cfg.sigma = parse_double_list(section, key, value);
        have_sigma = true;
      } else {
        unknown_key(section, key, {"fraction", "sigma"});
      }
    } else {  // output
      if (key == "dir") {
        cfg.output_dir = value;
      } else if (key == "posterior_count") {
        cfg.posterior_count = parse_count(section, key, value);
      } else {
        unknown_key(section, key, {"dir", "posterior_count"});
      }
    }
  }

  if (cfg.model_name.empty()) {
    throw ConfigError("[model] name is required");
  }
  if (have_fraction && have_sigma) {
    throw ConfigError(
        "[proposal]: fraction and sigma are mutually exclusive");
  }

  try {
    make_model(cfg.model_name, {});  // resolve the model name first
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const auto known = model_param_names(cfg.model_name);
  for (const auto& [key, value] : model_raw) {
    // Surface typos with the model's own parameter list before the numeric
    // parse, so "kapa = 5" produces a name hint rather than a value error.
    bool recognised = false;
    for (const auto& k : known) recognised = recognised || k == key;
    if (!recognised) unknown_key("model", key, known);
    cfg.model_params[key] = parse_double("model", key, value);
  }

  try {
    cfg.sampler.validate();
    if (!(cfg.scale_fraction > 0.0 && cfg.scale_fraction <= 1.0)) {
      throw std::invalid_argument(
          "[proposal] fraction must lie in (0, 1]");
    }
    make_model(cfg.model_name, cfg.model_params);  // full parameter checks
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace gns
