#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace heisenweyl {

/// One verified statement.
struct CheckEntry {
  std::string suite;
  std::string check;
  /// The identity being checked, written as a formula.
  std::string anchor;
  /// Parameter mode, e.g. "generic" or "oneparam:2,3".
  std::string params;
  bool pass = false;
  /// Serialized counterexample or nonzero residual when pass is false.
  std::string witness;
  long long micros = 0;
};

/// Runs body and records the outcome. body returns a witness string on
/// failure and nullopt on success; exceptions count as failures.
inline CheckEntry run_check(std::string suite, std::string check, std::string anchor, std::string params,
                            const std::function<std::optional<std::string>()>& body) {
  CheckEntry e{std::move(suite), std::move(check), std::move(anchor), std::move(params), false, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    auto witness = body();
    e.pass = !witness.has_value();
    if (witness) e.witness = *witness;
  } catch (const std::exception& ex) {
    e.witness = std::string("exception: ") + ex.what();
  }
  e.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return e;
}

struct Summary {
  int passed = 0;
  int failed = 0;
};

inline Summary summarize(const std::vector<CheckEntry>& entries) {
  Summary s;
  for (const auto& e : entries) (e.pass ? s.passed : s.failed)++;
  return s;
}

}  // namespace heisenweyl
