#include "ontoarch/reporting.hpp"

#include "json.hpp"
#include <sstream>

namespace ontoarch::reporting {

using nlohmann::json;

SuiteSummary summarize(const model::ResolvedSuite& suite, std::size_t files) {
  SuiteSummary summary;
  for (const auto& mod : suite.modules()) {
    ++summary.modules_per_level[static_cast<std::size_t>(mod.level())];
  }
  summary.terms = suite.term_count();
  summary.relations = suite.relation_count();
  summary.individuals = suite.individual_count();
  summary.worlds = suite.world_count();
  summary.files = files;
  return summary;
}

Report make_report(std::vector<Diagnostic> diagnostics, SuiteSummary summary) {
  Report report;
  sort_diagnostics(diagnostics);
  for (const auto& d : diagnostics) {
    (d.severity == Severity::Error ? report.errors : report.warnings) += 1;
  }
  report.diagnostics = std::move(diagnostics);
  report.summary = summary;
  return report;
}

namespace {

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& d : report.diagnostics) {
    os << d.span.file << ':' << d.span.start_line << ':' << d.span.start_col << ": "
       << to_string(d.severity) << '[' << d.code << "] " << d.message;
    if (!d.anchor.empty()) os << " (" << d.anchor << ')';
    os << '\n';
  }
  os << plural(report.errors, "error") << ", " << plural(report.warnings, "warning") << '\n';
  return os.str();
}

std::string render_json(const Report& report) {
  json diagnostics = json::array();
  for (const auto& d : report.diagnostics) {
    json entry = {
        {"anchor", d.anchor},
        {"code", d.code},
        {"message", d.message},
        {"rule", d.rule ? json(std::string(to_string(*d.rule))) : json(nullptr)},
        {"severity", std::string(to_string(d.severity))},
        {"span",
         {{"file", d.span.file},
          {"start_line", d.span.start_line},
          {"start_col", d.span.start_col},
          {"end_line", d.span.end_line},
          {"end_col", d.span.end_col}}},
        {"witness", d.witness ? json(*d.witness) : json(nullptr)},
    };
    diagnostics.push_back(std::move(entry));
  }
  const auto& s = report.summary;
  json modules = json::object();
  for (model::Level level : {model::Level::FO, model::Level::CO, model::Level::TDO, model::Level::LDO}) {
    modules[std::string(model::to_string(level))] =
        s.modules_per_level[static_cast<std::size_t>(level)];
  }
  json doc = {
      {"diagnostics", std::move(diagnostics)},
      {"report_version", kReportVersion},
      {"summary",
       {{"errors", report.errors},
        {"warnings", report.warnings},
        {"files", s.files},
        {"modules", std::move(modules)},
        {"terms", s.terms},
        {"relations", s.relations},
        {"individuals", s.individuals},
        {"worlds", s.worlds}}},
  };
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  return doc.dump(-1, ' ', false, json::error_handler_t::replace);
}

int exit_code(const Report& report, bool strict) {
  if (report.errors > 0) return 1;
  if (strict && report.warnings > 0) return 1;
  return 0;
}

}  // namespace ontoarch::reporting
