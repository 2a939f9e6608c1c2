#include "gns/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gns {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_file_atomic(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
    out << contents;
    if (!out.flush()) {
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::string csv_header(const std::vector<std::string>& names,
                       const char* prefix) {
  std::string h = prefix;
  for (const auto& n : names) {
    if (!h.empty()) h += ',';
    h += n;
  }
  h += '\n';
  return h;
}

}  // namespace

void write_outputs(const RunResult& result, const RunConfig& config,
                   const ModelSpec& model, const ProposalScales& scales) {
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec && !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir.string());
  }

  {
    std::ostringstream csv;
    csv << csv_header(model.dimension_names, "iter,log_l,log_x,log_weight");
    std::size_t iter = 0;
    for (const auto& r : result.dead_points) {
      csv << ++iter << ',' << format_double(r.log_l) << ','
          << format_double(r.log_x) << ',' << format_double(r.log_weight);
      for (double c : r.point.coords) csv << ',' << format_double(c);
      csv << '\n';
    }
    write_file_atomic(dir / "dead_points.csv", csv.str());
  }

  {
    std::ostringstream csv;
    csv << csv_header(model.dimension_names, "");
    for (const auto& p : result.posterior_samples) {
      for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i > 0) csv << ',';
        csv << format_double(p.coords[i]);
      }
      csv << '\n';
    }
    write_file_atomic(dir / "posterior.csv", csv.str());
  }

  {
    std::ostringstream sum;
    sum << "log_z = " << format_double(result.log_z) << '\n'
        << "log_z_err = " << format_double(result.log_z_err) << '\n'
        << "information_nats = " << format_double(result.information_nats)
        << '\n'
        << "n_iterations = " << result.n_iterations << '\n'
        << "acceptance_rate = " << format_double(result.acceptance_rate)
        << '\n'
        << "likelihood_evals = " << result.likelihood_evals << '\n'
        << "seed = " << config.sampler.seed << '\n'
        << "truncated = " << (result.truncated ? "true" : "false") << '\n'
        << "n_live = " << config.sampler.n_live << '\n'
        << "chain_steps = " << config.sampler.chain_steps << '\n'
        << "termination_frac = " << format_double(config.sampler.termination_frac)
        << '\n'
        << "max_iterations = " << config.sampler.max_iterations << '\n'
        << "posterior_count = " << config.posterior_count << '\n'
        << "output_dir = " << config.output_dir << '\n'
        << "model = " << model.name << '\n';
    for (const auto& [key, value] : model.parameters) {
      sum << "model." << key << " = " << format_double(value) << '\n';
    }
    sum << "proposal.sigma = ";
    for (std::size_t i = 0; i < scales.sigma.size(); ++i) {
      if (i > 0) sum << ',';
      sum << format_double(scales.sigma[i]);
    }
    sum << '\n';
    write_file_atomic(dir / "summary.txt", sum.str());
  }
}

}  // namespace gns
