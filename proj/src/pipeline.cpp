#include "ontoarch/pipeline.hpp"

#include <algorithm>

namespace ontoarch {

Analysis analyze(std::span<const parser::SourceFile> files) {
  std::vector<parser::SourceFile> ordered(files.begin(), files.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.path < b.path; });

  Analysis out;
  auto parsed = parser::parse_suite(ordered);
  out.parse_diagnostics = std::move(parsed.diagnostics);
  out.resolved = model::resolve(std::move(parsed.ast.units));
  out.violations = validator::check_all(out.resolved.suite);

  std::vector<Diagnostic> diagnostics = out.parse_diagnostics;
  diagnostics.insert(diagnostics.end(), out.resolved.diagnostics.begin(),
                     out.resolved.diagnostics.end());
  for (const auto& v : out.violations) diagnostics.push_back(validator::to_diagnostic(v));
  out.report = reporting::make_report(std::move(diagnostics),
                                      reporting::summarize(out.resolved.suite, ordered.size()));
  return out;
}

}  // namespace ontoarch
