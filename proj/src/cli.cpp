#include "ontoarch/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ontoarch/pipeline.hpp"

namespace ontoarch::cli {
namespace {

namespace fs = std::filesystem;
namespace mm = ontoarch::metamodel;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text,
                  std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + *path + "'");
  file << text;
  if (!file) throw std::runtime_error("cannot write '" + *path + "'");
}

std::vector<parser::SourceFile> load(const std::vector<std::string>& paths) {
  std::vector<parser::SourceFile> files;
  for (const auto& p : discover_inputs(paths)) files.push_back({p, read_file(p)});
  return files;
}

std::string metamodel_listing() {
  std::ostringstream os;
  os << "Terms (" << mm::all_term_specs().size() << "):\n";
  for (const auto& t : mm::all_term_specs()) {
    os << "  " << t.key;
    if (t.parent) os << " : " << mm::term_spec(*t.parent).key;
    os << '\n';
  }
  os << "Properties (" << mm::all_property_specs().size() << "):\n";
  for (const auto& p : mm::all_property_specs()) {
    os << "  " << mm::term_spec(p.owner).key << '.' << p.key << '\n';
  }
  os << "Relationships (" << mm::all_relationship_specs().size() << "):\n";
  for (const auto& r : mm::all_relationship_specs()) {
    os << "  " << r.key << ": " << mm::term_spec(r.domain).key << " -> "
       << mm::term_spec(r.range).key << '\n';
  }
  return os.str();
}

int execute(const CliConfig& cfg, std::ostream& out) {
  switch (cfg.subcommand) {
    case Subcommand::Validate: {
      const auto files = load(cfg.inputs);
      const auto analysis = analyze(files);
      const std::string text = cfg.format == Format::Json
                                   ? reporting::render_json(analysis.report) + "\n"
                                   : reporting::render_text(analysis.report);
      write_output(cfg.out, text, out);
      return reporting::exit_code(analysis.report, cfg.strict);
    }
    case Subcommand::Metamodel:
      out << (cfg.counts ? metamodel_counts() + "\n" : metamodel_listing());
      return 0;
    case Subcommand::Graph: {
      const auto files = load(cfg.inputs);
      const auto analysis = analyze(files);
      write_output(cfg.out, export_graph(analysis.resolved.suite), out);
      return 0;
    }
    case Subcommand::Explain: {
      const auto text = explain(cfg.topic);
      if (!text) throw std::runtime_error("unknown topic '" + cfg.topic + "'");
      out << *text;
      return 0;
    }
  }
  return reporting::kUsageExitCode;
}

}  // namespace

std::vector<std::string> discover_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> found;
  for (const auto& p : paths) {
    std::error_code ec;
    const auto status = fs::status(p, ec);
    if (ec || !fs::exists(status)) throw std::runtime_error("no such file or directory '" + p + "'");
    if (fs::is_directory(status)) {
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".onto") {
          found.push_back(entry.path().lexically_normal().generic_string());
        }
      }
    } else {
      found.push_back(fs::path(p).lexically_normal().generic_string());
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Layered ontology architecture checker", "ontoarch"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* validate = app.add_subcommand("validate", "Check ontology and instance files");
  validate->add_option("paths", cfg.inputs, "Files or directories")->required();
  validate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  validate->add_flag("--strict", cfg.strict, "Treat warnings as errors");
  validate->add_option("--out", cfg.out, "Write the report to FILE");

  auto* metamodel = app.add_subcommand("metamodel", "Show the built-in ThingFO catalog");
  metamodel->add_flag("--counts", cfg.counts, "Print element counts only");

  auto* graph = app.add_subcommand("graph", "Export the architecture as Graphviz DOT");
  graph->add_option("paths", cfg.inputs, "Files or directories")->required();
  graph->add_option("--out", cfg.out, "Write the graph to FILE");

  auto* explain_cmd = app.add_subcommand("explain", "Describe a term, relationship or code");
  explain_cmd->add_option("topic", cfg.topic, "Term, relationship, property or code")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return reporting::kUsageExitCode;
  }

  if (validate->parsed()) cfg.subcommand = Subcommand::Validate;
  if (metamodel->parsed()) cfg.subcommand = Subcommand::Metamodel;
  if (graph->parsed()) cfg.subcommand = Subcommand::Graph;
  if (explain_cmd->parsed()) cfg.subcommand = Subcommand::Explain;
  cfg.format = format == "json" ? Format::Json : Format::Text;

  try {
    return execute(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return reporting::kUsageExitCode;
  }
}

}  // namespace ontoarch::cli
