#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ontoarch/cli.hpp"
#include "ontoarch/metamodel.hpp"
#include "ontoarch/pipeline.hpp"

namespace py = pybind11;
using namespace ontoarch;

namespace {

std::vector<parser::SourceFile> to_files(const std::map<std::string, std::string>& sources) {
  std::vector<parser::SourceFile> files;
  for (const auto& [path, text] : sources) files.push_back({path, text});
  return files;
}

py::dict counts() {
  py::dict d;
  d["terms"] = metamodel::all_term_specs().size();
  d["properties"] = metamodel::all_property_specs().size();
  d["relationships"] = metamodel::all_relationship_specs().size();
  return d;
}

py::list term_specs() {
  py::list out;
  for (const auto& t : metamodel::all_term_specs()) {
    py::dict d;
    d["key"] = std::string(t.key);
    d["display"] = std::string(t.display);
    d["parent"] = t.parent ? py::object(py::str(std::string(metamodel::term_spec(*t.parent).key)))
                           : py::object(py::none());
    d["root"] = std::string(metamodel::to_string(metamodel::root_kind(t.id)));
    std::vector<std::string> synonyms(t.synonyms.begin(), t.synonyms.end());
    d["synonyms"] = synonyms;
    d["definition"] = std::string(t.definition);
    out.append(d);
  }
  return out;
}

py::list tokenize(const std::string& text) {
  const auto lexed = parser::tokenize(text, "<input>");
  if (!lexed.diagnostics.empty()) throw py::value_error(lexed.diagnostics.front().message);
  py::list out;
  for (const auto& t : lexed.tokens) {
    out.append(py::make_tuple(std::string(parser::to_string(t.kind)), t.lexeme, t.span.start_line,
                              t.span.start_col));
  }
  return out;
}

std::string format_source(const std::string& text, const std::string& path) {
  auto [unit, diags] = parser::parse_file(path, text);
  if (!diags.empty()) {
    throw py::value_error(diags.front().code + ": " + diags.front().message);
  }
  return parser::render_canonical(unit);
}

py::dict validate(const std::map<std::string, std::string>& sources, bool strict) {
  const auto files = to_files(sources);
  const auto analysis = analyze(files);
  py::dict report = py::module_::import("json").attr("loads")(reporting::render_json(analysis.report));
  report["exit_code"] = reporting::exit_code(analysis.report, strict);
  report["text"] = reporting::render_text(analysis.report);
  return report;
}

std::string export_graph(const std::map<std::string, std::string>& sources) {
  const auto files = to_files(sources);
  return cli::export_graph(analyze(files).resolved.suite);
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Layered ontology architecture checker";
  m.def("counts", &counts, "Sizes of the built-in ThingFO catalog.");
  m.def("term_specs", &term_specs, "The 19 ThingFO terms in catalog order.");
  m.def("tokenize", &tokenize, py::arg("text"),
        "Tokens as (kind, lexeme, line, column); raises ValueError on a lexical error.");
  m.def("format_source", &format_source, py::arg("text"), py::arg("path") = "<input>",
        "Canonical rendering of one source file; raises ValueError on a syntax error.");
  m.def("validate", &validate, py::arg("sources"), py::arg("strict") = false,
        "Validate a {path: text} mapping. Returns the JSON report as a dict plus "
        "`exit_code` and `text`.");
  m.def("export_graph", &export_graph, py::arg("sources"), "Graphviz DOT for a {path: text} mapping.");
  m.def("explain", [](const std::string& topic) { return cli::explain(topic); }, py::arg("topic"),
        "Catalog or diagnostic documentation, or None for an unknown topic.");
  m.def("run", &run, py::arg("args"), "Run the command line in process: (exit_code, stdout, stderr).");
}
