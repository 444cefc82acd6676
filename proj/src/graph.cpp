#include <sstream>

#include "ontoarch/cli.hpp"

namespace ontoarch::cli {
namespace {

namespace mm = ontoarch::metamodel;
using model::Level;

std::string quoted(std::string_view id) {
  std::string out = "\"";
  for (const char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string instance_node(const model::ResolvedSuite& suite, std::size_t file) {
  const auto* decl = suite.instance_files()[file].decl;
  return "instances:" + decl->span.file + "#" + std::to_string(decl->span.start_line);
}

}  // namespace

std::string export_graph(const model::ResolvedSuite& suite) {
  std::ostringstream os;
  os << "digraph ontoarch {\n";
  os << "  rankdir=TB;\n";
  os << "  compound=true;\n";
  os << "  node [fontname=\"Helvetica\"];\n";

  // FO holds the built-in ThingFO and any (invalid) user FO modules.
  for (Level level : {Level::FO, Level::CO, Level::TDO, Level::LDO, Level::IO}) {
    const std::string name(model::to_string(level));
    std::ostringstream body;
    bool any = false;
    if (level == Level::FO) {
      any = true;
      body << "    subgraph " << quoted("cluster_module_ThingFO") << " {\n";
      body << "      label=\"ThingFO\";\n";
      body << "      " << quoted("ThingFO") << " [shape=box3d];\n";
      for (const auto& spec : mm::all_term_specs()) {
        body << "      " << quoted("ThingFO." + std::string(spec.key)) << " [label="
             << quoted(spec.key) << "];\n";
      }
      body << "    }\n";
    }
    for (const auto& mod : suite.modules()) {
      if (mod.level() != level) continue;
      any = true;
      body << "    subgraph " << quoted("cluster_module_" + mod.name()) << " {\n";
      body << "      label=" << quoted(mod.name()) << ";\n";
      body << "      " << quoted(mod.name()) << " [shape=box3d];\n";
      for (const auto& term : mod.decl->terms) {
        body << "      " << quoted(mod.name() + "." + term.name) << " [label=" << quoted(term.name)
             << "];\n";
      }
      body << "    }\n";
    }
    if (level == Level::IO) {
      for (std::size_t f = 0; f < suite.instance_files().size(); ++f) {
        any = true;
        const auto* decl = suite.instance_files()[f].decl;
        body << "    " << quoted(instance_node(suite, f))
             << " [shape=note, label=" << quoted("instances of " + decl->of_module) << "];\n";
      }
    }
    if (!any) continue;
    os << "  subgraph " << quoted("cluster_" + name) << " {\n";
    os << "    label=" << quoted(name) << ";\n";
    os << body.str();
    os << "  }\n";
  }

  for (const auto& mod : suite.modules()) {
    for (std::size_t t = 0; t < mod.terms.size(); ++t) {
      const auto& target = mod.terms[t].enriches;
      if (!target) continue;
      os << "  " << quoted(mod.name() + "." + mod.decl->terms[t].name) << " -> "
         << quoted(suite.qualified_name(*target)) << " [style=solid];\n";
    }
  }
  for (const auto& mod : suite.modules()) {
    for (int target : mod.imports) {
      const std::string to =
          target < 0 ? std::string(mm::kFoundationalModule) : suite.module(target).name();
      os << "  " << quoted(mod.name()) << " -> " << quoted(to) << " [style=dashed];\n";
    }
  }
  for (std::size_t f = 0; f < suite.instance_files().size(); ++f) {
    const auto& of = suite.instance_files()[f].of_module;
    if (!of) continue;
    const std::string to =
        *of < 0 ? std::string(mm::kFoundationalModule) : suite.module(*of).name();
    os << "  " << quoted(instance_node(suite, f)) << " -> " << quoted(to) << " [style=dotted];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ontoarch::cli
