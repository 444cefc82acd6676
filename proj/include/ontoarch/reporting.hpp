#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ontoarch/diagnostic.hpp"
#include "ontoarch/model.hpp"

namespace ontoarch::reporting {

inline constexpr int kReportVersion = 1;

struct SuiteSummary {
  /// User modules per level, indexed by Level (FO, CO, TDO, LDO). IO is unused.
  std::array<std::size_t, 5> modules_per_level{};
  std::size_t terms = 0;
  std::size_t relations = 0;
  std::size_t individuals = 0;
  std::size_t worlds = 0;
  std::size_t files = 0;

  bool operator==(const SuiteSummary&) const = default;
};

struct Report {
  /// Sorted per sort_diagnostics.
  std::vector<Diagnostic> diagnostics;
  std::size_t errors = 0;
  std::size_t warnings = 0;
  SuiteSummary summary;

  bool operator==(const Report&) const = default;
};

SuiteSummary summarize(const model::ResolvedSuite& suite, std::size_t files);

/// Sorts the diagnostics and tallies severities.
Report make_report(std::vector<Diagnostic> diagnostics, SuiteSummary summary);

/// `file:line:col: severity[code] message (anchor)` per diagnostic, then a
/// `N errors, M warnings` line.
std::string render_text(const Report& report);

/// Canonical JSON (sorted keys, no whitespace) following report schema v1.
std::string render_json(const Report& report);

/// 0 without errors, 1 with any error. With `strict`, warnings count as errors.
int exit_code(const Report& report, bool strict = false);

/// Reserved for usage and I/O failures raised by the command line.
inline constexpr int kUsageExitCode = 2;

}  // namespace ontoarch::reporting
