#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/pipeline.hpp"

namespace bifkit {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

// Read a `key = value` configuration file ('#' starts a comment) into an
// ordered entry list. Throws BadConfig on malformed lines.
ConfigEntries read_config_entries(const std::string& path);

// Build a RunConfig from an ordered entry list (file entries first, then
// command-line overrides). The last `model` entry wins and selects the
// model defaults; all other entries are applied in order on top of them.
// Unknown keys are rejected.
RunConfig assemble_config(const ConfigEntries& entries);

// Cross-field validation (called by assemble_config; exposed for
// configurations built programmatically).
void validate_config(const RunConfig& config);

}  // namespace bifkit
