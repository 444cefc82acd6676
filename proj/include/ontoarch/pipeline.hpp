#pragma once

#include <span>
#include <vector>

#include "ontoarch/model.hpp"
#include "ontoarch/parser.hpp"
#include "ontoarch/reporting.hpp"
#include "ontoarch/validator.hpp"

namespace ontoarch {

/// Everything produced by one parse -> resolve -> validate run.
struct Analysis {
  std::vector<Diagnostic> parse_diagnostics;
  model::ResolveResult resolved;
  std::vector<validator::Violation> violations;
  reporting::Report report;
};

/// Runs the full pipeline. Files are processed in path order, so the result
/// does not depend on the order of `files`.
Analysis analyze(std::span<const parser::SourceFile> files);

}  // namespace ontoarch
