#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heisenweyl/report.hpp"

namespace heisenweyl::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line given without the program name. Everything except
/// diagnostics goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One JSON object per line: suite, check, anchor, params, status, witness
/// (failures only), micros.
void write_report(const std::vector<CheckEntry>& entries, std::ostream& os);
/// Parses a report written by write_report. Throws std::runtime_error on
/// malformed lines.
std::vector<CheckEntry> read_report(std::istream& is);

}  // namespace heisenweyl::cli
