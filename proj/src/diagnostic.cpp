#include "ontoarch/diagnostic.hpp"

#include <algorithm>
#include <tuple>

#include "ontoarch/codes.hpp"

namespace ontoarch {

SourceSpan SourceSpan::merge(const SourceSpan& other) const {
  SourceSpan out = *this;
  if (std::tie(other.start_line, other.start_col) < std::tie(start_line, start_col)) {
    out.start_line = other.start_line;
    out.start_col = other.start_col;
  }
  if (std::tie(other.end_line, other.end_col) > std::tie(end_line, end_col)) {
    out.end_line = other.end_line;
    out.end_col = other.end_col;
  }
  return out;
}

bool SourceSpan::contains(const SourceSpan& inner) const {
  return inner.file == file &&
         std::tie(start_line, start_col) <= std::tie(inner.start_line, inner.start_col) &&
         std::tie(inner.end_line, inner.end_col) <= std::tie(end_line, end_col);
}

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::G1:
      return "G1";
    case RuleId::G2:
      return "G2";
    case RuleId::R1:
      return "R1";
    case RuleId::R2:
      return "R2";
    case RuleId::R3:
      return "R3";
    case RuleId::A1:
      return "A1";
    case RuleId::A2:
      return "A2";
    case RuleId::A3:
      return "A3";
    case RuleId::RelConformance:
      return "RelConformance";
    case RuleId::PropConformance:
      return "PropConformance";
    case RuleId::Cardinality:
      break;
  }
  return "Cardinality";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

Severity severity_of(std::string_view code) {
  return !code.empty() && code.front() == 'W' ? Severity::Warning : Severity::Error;
}

Diagnostic make_diagnostic(std::string code, SourceSpan span, std::string message,
                           std::optional<std::string> witness) {
  Diagnostic diag;
  diag.severity = severity_of(code);
  if (const CodeInfo* info = find_code(code)) {
    diag.rule = info->rule;
    diag.anchor = std::string(info->anchor);
  }
  diag.code = std::move(code);
  diag.span = std::move(span);
  diag.message = std::move(message);
  diag.witness = std::move(witness);
  return diag;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  // Errors sort before warnings at equal positions.
  const auto rank = [](const Diagnostic& d) { return d.severity == Severity::Error ? 0 : 1; };
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) {
                     const int ra = rank(a);
                     const int rb = rank(b);
                     return std::tie(a.span.file, a.span.start_line, a.span.start_col, ra, a.code,
                                     a.span.end_line, a.span.end_col, a.message, a.witness) <
                            std::tie(b.span.file, b.span.start_line, b.span.start_col, rb, b.code,
                                     b.span.end_line, b.span.end_col, b.message, b.witness);
                   });
}

}  // namespace ontoarch
