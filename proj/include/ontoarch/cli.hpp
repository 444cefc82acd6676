#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoarch/model.hpp"

namespace ontoarch::cli {

enum class Subcommand { Validate, Metamodel, Graph, Explain };
enum class Format { Text, Json };

struct CliConfig {
  Subcommand subcommand = Subcommand::Validate;
  std::vector<std::string> inputs;
  Format format = Format::Text;
  bool strict = false;
  bool counts = false;
  std::optional<std::string> out;
  std::string topic;
};

/// Entry point. `args` excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// DOT digraph: one cluster per level from FO down to IO, module and term
/// nodes, solid `enriches` edges and dashed import edges.
std::string export_graph(const model::ResolvedSuite& suite);

/// Catalog entry for a ThingFO term, relationship or property, or the
/// documentation of a diagnostic code. nullopt for an unknown topic.
std::optional<std::string> explain(std::string_view topic);

/// `terms=19 properties=10 relationships=12`
std::string metamodel_counts();

/// Expands directories (recursively, `.onto` files only) and returns a sorted,
/// duplicate-free file list. Throws std::runtime_error for missing paths.
std::vector<std::string> discover_inputs(const std::vector<std::string>& paths);

}  // namespace ontoarch::cli
