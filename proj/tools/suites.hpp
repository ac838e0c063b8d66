#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heisenweyl/report.hpp"

namespace heisenweyl::cli {

/// Bad flags, unknown names, or a mode the suite cannot run in.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Defaults reproduce the full acceptance run.
struct SuiteConfig {
  std::string suite = "all";
  /// generic | oneparam:R,S | cyclotomic:N:EP,EQ | numeric:P,Q
  std::string mode = "generic";
  /// identities: 1 <= n <= range
  int range = 30;
  /// fock: monomial degree bound
  int degree = 6;
  /// virasoro: |n|, |m| <= virasoro_window in the localization
  int virasoro_window = 8;
  /// bmodule: |k| <= module_window
  int module_window = 20;
  /// oscillator: matrix size
  int matrix_size = 64;
  /// diamond: the p' in zx = p' xz
  std::string pprime = "p^-1";
  /// random seed for the bmodule descent sample
  unsigned seed = 2024;
};

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") on up to `jobs` threads. The entry order does
/// not depend on scheduling. Throws UsageError for invalid configs.
std::vector<CheckEntry> run_suite(const SuiteConfig& cfg, int jobs = 1);

}  // namespace heisenweyl::cli
