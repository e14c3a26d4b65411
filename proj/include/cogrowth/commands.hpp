#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cogrowth/report.hpp"

namespace cogrowth {

/// Command drivers behind the CLI subcommands. Each parses the resolved
/// spec in config.spec_text, runs the computation, writes report files into
/// config.out_dir, prints a short summary to `out`, and returns the paths
/// written. Identical configs produce byte-identical files. Errors raise
/// the library exceptions; the binary maps them to exit codes.
std::vector<std::string> cmd_cogrowth(const RunConfig& config, std::ostream& out);
std::vector<std::string> cmd_operator(const RunConfig& config, std::ostream& out);
std::vector<std::string> cmd_structure(const RunConfig& config, std::ostream& out);
std::vector<std::string> cmd_simulate(const RunConfig& config, std::ostream& out);

/// Quotes a CSV cell when it contains a delimiter, quote, or newline.
std::string csv_quote(const std::string& cell);

}  // namespace cogrowth
