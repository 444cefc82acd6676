#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontoarch {

/// 1-based source region. The end column points one past the last character.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool operator==(const SourceSpan&) const = default;
  auto operator<=>(const SourceSpan&) const = default;

  /// Smallest span covering both operands. Both must name the same file.
  [[nodiscard]] SourceSpan merge(const SourceSpan& other) const;
  [[nodiscard]] bool contains(const SourceSpan& inner) const;
};

enum class Severity { Warning, Error };

/// The normative source a diagnostic enforces.
enum class RuleId {
  G1,
  G2,
  R1,
  R2,
  R3,
  A1,
  A2,
  A3,
  RelConformance,
  PropConformance,
  Cardinality,
};

std::string_view to_string(RuleId rule);
std::string_view to_string(Severity severity);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::optional<RuleId> rule;
  std::string message;
  SourceSpan span;
  std::string anchor;
  std::optional<std::string> witness;

  bool operator==(const Diagnostic&) const = default;
};

/// Severity is a function of the code's first letter: E is an error, W a warning.
Severity severity_of(std::string_view code);

/// Builds a diagnostic, filling severity, rule and anchor from the code catalog.
Diagnostic make_diagnostic(std::string code, SourceSpan span, std::string message,
                           std::optional<std::string> witness = std::nullopt);

/// Sorts by (file, start line, start column, errors first, code), then message.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

}  // namespace ontoarch
