#pragma once

#include "gasfold/config.hpp"

namespace gasfold::cli {

// Subcommand drivers. Return the process exit code: 0 on success, 1 on a
// computation error (config errors throw ConfigError and map to exit 2).
int cmd_thermo(const RunConfig& cfg);
int cmd_profile(const RunConfig& cfg);
int cmd_caustic(const RunConfig& cfg);
int cmd_shock(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);

} // namespace gasfold::cli
