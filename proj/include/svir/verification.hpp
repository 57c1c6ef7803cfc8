#pragma once

#include <functional>
#include <string>
#include <vector>

namespace svir {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// m values for the per-m modular data checks (A3-A9). Empty selects the
  /// default ranges; otherwise each check uses the listed m inside its range.
  std::vector<int> ms;
  /// Tolerance of the checks that default to 1e-8.
  double tol = 1e-8;
};

/// Default options with the tolerance taken from SVIR_TOL when set. Throws
/// std::invalid_argument for a malformed or non-positive value.
VerifyOptions verify_options_from_env();

struct Criterion {
  std::string id;
  std::string title;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

/// The fourteen acceptance criteria in order, A1 through A14.
const std::vector<Criterion>& acceptance_criteria();

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

/// "PASS A4  coset modular data ... : detail", one line, no timing.
std::string format_result(const CriterionResult& r);

}  // namespace svir
