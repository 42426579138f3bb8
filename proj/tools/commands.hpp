#pragma once

#include <string>

#include "run_config.hpp"

namespace hypflow::cli {

// Each command writes its CSV report(s) plus summary.json into cfg.out_dir,
// prints the summary to stdout and returns true when verification passed.
// Exceptions signal verification failures; the caller maps them to exit 1.
bool cmd_verify_euler(const RunConfig& cfg);
bool cmd_verify_ns(const RunConfig& cfg);
bool cmd_energy_report(const RunConfig& cfg);
bool cmd_nonuniq(const RunConfig& cfg);
bool cmd_dodziuk(const RunConfig& cfg);

}  // namespace hypflow::cli
