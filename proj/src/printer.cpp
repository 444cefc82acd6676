#include <sstream>

#include "ontoarch/parser.hpp"

namespace ontoarch::parser {
namespace {

using namespace ontoarch::model;

std::string quote(std::string_view value) {
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void render_term(std::ostream& os, const TermDef& term) {
  os << "  term " << term.name;
  if (term.enriches) os << " enriches " << term.enriches->str();
  if (term.scope) os << " scope " << to_string(*term.scope);
  if (!term.attributes.empty()) {
    os << " {\n";
    for (const auto& attr : term.attributes) {
      os << "    " << attr.key << ' ' << quote(attr.value) << '\n';
    }
    os << "  }";
  }
  os << '\n';
}

void render_module(std::ostream& os, const OntologyModule& module) {
  os << "ontology " << module.name << " at " << to_string(module.level) << " {\n";
  for (const auto& import : module.imports) os << "  imports " << import.module << '\n';
  for (const auto& item : module.order) {
    if (item.kind == BodyItem::Kind::Term) {
      render_term(os, module.terms[item.index]);
    } else {
      const auto& rel = module.relations[item.index];
      os << "  relation " << rel.name << " from " << rel.from.str() << " to " << rel.to.str()
         << " kind " << rel.kind.str() << '\n';
    }
  }
  os << "}\n";
}

void render_world(std::ostream& os, const World& world) {
  os << "  world " << world.name << " {\n";
  for (const auto& thing : world.things) {
    os << "    thing " << thing.id;
    if (thing.instance_of) os << " : " << thing.instance_of->str();
    if (thing.properties.empty() && thing.powers.empty()) {
      os << " {\n    }\n";
      continue;
    }
    os << " {\n";
    for (const auto& [id, span] : thing.properties) os << "      property " << id << ";\n";
    for (const auto& [id, span] : thing.powers) os << "      power " << id << ";\n";
    os << "    }\n";
  }
  for (const auto& fact : world.facts) {
    os << "    " << to_string(fact.predicate) << '(' << fact.subject.str() << ", "
       << fact.object.str() << ")\n";
  }
  os << "  }\n";
}

void render_instances(std::ostream& os, const InstanceFile& file) {
  os << "instances of " << file.of_module << " {\n";
  for (const auto& item : file.order) {
    if (item.kind == InstanceItem::Kind::Individual) {
      const auto& indiv = file.individuals[item.index];
      os << "  individual " << indiv.name << " : " << indiv.type.str() << '\n';
    } else {
      render_world(os, file.worlds[item.index]);
    }
  }
  os << "}\n";
}

// -- structural equality ------------------------------------------------------

bool same(const QualifiedRef& a, const QualifiedRef& b) {
  return a.module == b.module && a.name == b.name;
}

bool same(const std::optional<QualifiedRef>& a, const std::optional<QualifiedRef>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same(*a, *b);
}

bool same(const Ref& a, const Ref& b) { return a.thing == b.thing && a.part == b.part; }

template <typename T, typename Eq>
bool same_list(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

bool same_parts(const std::vector<std::pair<std::string, SourceSpan>>& a,
                const std::vector<std::pair<std::string, SourceSpan>>& b) {
  return same_list(a, b, [](const auto& x, const auto& y) { return x.first == y.first; });
}

bool same(const TermDef& a, const TermDef& b) {
  return a.name == b.name && same(a.enriches, b.enriches) && a.scope == b.scope &&
         same_list(a.attributes, b.attributes, [](const Attribute& x, const Attribute& y) {
           return x.key == y.key && x.value == y.value;
         });
}

bool same(const RelationDecl& a, const RelationDecl& b) {
  return a.name == b.name && same(a.from, b.from) && same(a.to, b.to) && same(a.kind, b.kind);
}

bool same(const OntologyModule& a, const OntologyModule& b) {
  return a.name == b.name && a.level == b.level &&
         same_list(a.imports, b.imports,
                   [](const Import& x, const Import& y) { return x.module == y.module; }) &&
         same_list(a.terms, b.terms, [](const TermDef& x, const TermDef& y) { return same(x, y); }) &&
         same_list(a.relations, b.relations,
                   [](const RelationDecl& x, const RelationDecl& y) { return same(x, y); }) &&
         same_list(a.order, b.order, [](const BodyItem& x, const BodyItem& y) {
           return x.kind == y.kind && x.index == y.index;
         });
}

bool same(const World& a, const World& b) {
  return a.name == b.name &&
         same_list(a.things, b.things,
                   [](const ThingNode& x, const ThingNode& y) {
                     return x.id == y.id && same(x.instance_of, y.instance_of) &&
                            same_parts(x.properties, y.properties) &&
                            same_parts(x.powers, y.powers);
                   }) &&
         same_list(a.facts, b.facts, [](const Fact& x, const Fact& y) {
           return x.predicate == y.predicate && same(x.subject, y.subject) &&
                  same(x.object, y.object);
         });
}

bool same(const InstanceFile& a, const InstanceFile& b) {
  return a.of_module == b.of_module &&
         same_list(a.individuals, b.individuals,
                   [](const Individual& x, const Individual& y) {
                     return x.name == y.name && same(x.type, y.type);
                   }) &&
         same_list(a.worlds, b.worlds, [](const World& x, const World& y) { return same(x, y); }) &&
         same_list(a.order, b.order, [](const InstanceItem& x, const InstanceItem& y) {
           return x.kind == y.kind && x.index == y.index;
         });
}

}  // namespace

std::string render_canonical(const SourceUnit& unit) {
  std::ostringstream os;
  bool first = true;
  for (const auto& item : unit.order) {
    if (!first) os << '\n';
    first = false;
    if (item.kind == UnitItem::Kind::Module) {
      render_module(os, unit.modules[item.index]);
    } else {
      render_instances(os, unit.instances[item.index]);
    }
  }
  return os.str();
}

std::string render_canonical(const SuiteAst& ast) {
  std::string out;
  for (std::size_t i = 0; i < ast.units.size(); ++i) {
    if (i > 0) out += '\n';
    out += render_canonical(ast.units[i]);
  }
  return out;
}

bool same_structure(const SourceUnit& a, const SourceUnit& b) {
  return same_list(a.modules, b.modules,
                   [](const OntologyModule& x, const OntologyModule& y) { return same(x, y); }) &&
         same_list(a.instances, b.instances,
                   [](const InstanceFile& x, const InstanceFile& y) { return same(x, y); }) &&
         same_list(a.order, b.order, [](const UnitItem& x, const UnitItem& y) {
           return x.kind == y.kind && x.index == y.index;
         });
}

bool same_structure(const SuiteAst& a, const SuiteAst& b) {
  return same_list(a.units, b.units, [](const SourceUnit& x, const SourceUnit& y) {
    return same_structure(x, y);
  });
}

}  // namespace ontoarch::parser
