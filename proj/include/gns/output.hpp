#pragma once

#include <string>

#include "gns/models.hpp"
#include "gns/nested_sampler.hpp"
#include "gns/run_config.hpp"

namespace gns {

/// Formats a double with 17 significant digits, enough for an exact
/// round-trip back to the same bits.
std::string format_double(double v);

/// Writes dead_points.csv, posterior.csv and summary.txt into
/// config.output_dir (created if missing). Each file is written to a
/// temporary name and renamed into place. Identical inputs produce
/// byte-identical files.
void write_outputs(const RunResult& result, const RunConfig& config,
                   const ModelSpec& model, const ProposalScales& scales);

}  // namespace gns
