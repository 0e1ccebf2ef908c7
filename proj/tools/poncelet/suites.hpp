#pragma once

#include "scene.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace poncelet::cli {

struct CheckRecord {
  std::string id;
  /// Registry id of the verified result.
  std::string result;
  int samples{0};
  double max_residual{0.0};
  double tolerance{0.0};
  bool pass{false};
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed{1};
  int samples{200};
  /// Replaces every check tolerance when set.
  std::optional<double> tol;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" is handled by the caller). Throws Error(Validation)
/// or Error(Configuration) when the scene does not fit the suite.
VerificationReport run_suite(const std::string& suite, const Scene& scene, const SuiteOptions& opt);

ojson to_json(const VerificationReport& r);

}  // namespace poncelet::cli
