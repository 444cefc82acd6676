// Relationship, property and instance-level conformance.

#include <algorithm>
#include <set>

#include "validator_internal.hpp"

namespace ontoarch::validator {

namespace mm = ontoarch::metamodel;
using model::Level;
using model::ResolvedSuite;
using model::TermKey;

namespace detail {

bool conforms(const ResolvedSuite& suite, const TermKey& term, mm::TermId required) {
  const auto root = suite.enrichment_root(term);
  if (!root) return true;  // broken chains are reported by resolution
  if (mm::is_descendant(*root, required)) return true;
  if (required == mm::TermId::AssertionOnParticulars ||
      required == mm::TermId::AssertionOnUniversals) {
    const auto wanted = required == mm::TermId::AssertionOnParticulars
                            ? model::Scope::Particulars
                            : model::Scope::Universals;
    return mm::is_descendant(*root, mm::TermId::Assertion) &&
           suite.effective_scope(term) == wanted;
  }
  return false;
}

std::string describe_root(const ResolvedSuite& suite, const TermKey& term) {
  std::string out = "'" + suite.qualified_name(term) + "'";
  const auto root = suite.enrichment_root(term);
  if (!root) return out;
  out += " (root " + std::string(mm::term_spec(*root).key);
  if (const auto scope = suite.effective_scope(term)) {
    out += ", scope " + std::string(model::to_string(*scope));
  }
  return out + ")";
}

std::vector<Violation> relation_decls_for(const ResolvedSuite& suite, int module,
                                          std::span<const int> view) {
  std::vector<Violation> out;
  const auto& mod = suite.module(module);
  if (mod.level() == Level::FO) return out;
  for (std::size_t r = 0; r < mod.decl->relations.size(); ++r) {
    const auto& bound = mod.relations[r];
    if (!bound.from || !bound.to) continue;
    const auto chain = follow_kind(suite, module, r, view);
    if (chain.outcome != KindChain::Outcome::Foundational) continue;
    const auto& spec = mm::relationship_spec(chain.relationship);
    const bool domain_ok = conforms(suite, *bound.from, spec.domain);
    const bool range_ok = conforms(suite, *bound.to, spec.range);
    if (domain_ok && range_ok) continue;

    const auto& rel = mod.decl->relations[r];
    const std::string qualified = mod.name() + "." + rel.name;
    std::string message = "relation '" + qualified + "' is a '" + std::string(spec.name) +
                          "' (" + std::string(mm::term_spec(spec.domain).display) + " -> " +
                          std::string(mm::term_spec(spec.range).display) + ")";
    if (!domain_ok) message += "; from " + describe_root(suite, *bound.from) + " does not match";
    if (!range_ok) message += "; to " + describe_root(suite, *bound.to) + " does not match";
    out.push_back({RuleId::RelConformance, "E231", message,
                   {domain_ok ? rel.to.span : rel.from.span, rel.span},
                   "relation " + qualified + " from " + suite.qualified_name(*bound.from) +
                       " to " + suite.qualified_name(*bound.to) + " kind " +
                       std::string(spec.key),
                   mod.name(), std::string(spec.definition)});
  }
  return out;
}

const SourceSpan& fact_span(const model::ResolvedWorld& world, std::size_t fact) {
  return world.decl->facts[fact].span;
}

}  // namespace detail

std::vector<Violation> check_relationship_conformance(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  for (int m = 0; m < static_cast<int>(suite.modules().size()); ++m) {
    const int self[] = {m};
    auto found = detail::relation_decls_for(suite, m, self);
    out.insert(out.end(), found.begin(), found.end());
  }

  for (const auto& file : suite.instance_files()) {
    for (const auto& world : file.worlds) {
      const auto witness = [&](std::size_t fact) {
        const auto& f = world.decl->facts[fact];
        return std::string(model::to_string(f.predicate)) + "(" + f.subject.str() + ", " +
               f.object.str() + ")";
      };
      for (const auto& edge : world.belongs_to) {
        const auto root = suite.enrichment_root(edge.to);
        if (!root || mm::is_descendant(*root, mm::TermId::ThingCategory)) continue;
        out.push_back({RuleId::RelConformance, "E232",
                       "thing '" + world.thing_id(edge.from) + "' belongs to " +
                           detail::describe_root(suite, edge.to) +
                           ", which is not a Thing Category",
                       {detail::fact_span(world, edge.fact)}, witness(edge.fact), std::nullopt,
                       std::nullopt});
      }
      for (const auto& edge : world.defines) {
        const auto root = suite.enrichment_root(edge.to);
        if (!root || mm::is_descendant(*root, mm::TermId::Assertion)) continue;
        out.push_back({RuleId::RelConformance, "E233",
                       "thing '" + world.thing_id(edge.from) + "' defines " +
                           detail::describe_root(suite, edge.to) + ", which is not an Assertion",
                       {detail::fact_span(world, edge.fact)}, witness(edge.fact), std::nullopt,
                       std::nullopt});
      }
      for (const auto& edge : world.relates_with) {
        if (edge.from != edge.to) continue;
        out.push_back({RuleId::RelConformance, "E234",
                       "thing '" + world.thing_id(edge.from) + "' relates with itself",
                       {detail::fact_span(world, edge.fact)}, witness(edge.fact), std::nullopt,
                       std::nullopt});
      }
      if (world.acts_upon.empty()) continue;
      std::set<model::PartRef> acting;
      for (const auto& edge : world.acts_upon) acting.insert(edge.from);
      for (std::size_t t = 0; t < world.decl->things.size(); ++t) {
        const auto& node = world.decl->things[t];
        for (std::size_t w = 0; w < node.powers.size(); ++w) {
          if (acting.count(model::PartRef{t, w}) != 0) continue;
          const std::string power = node.id + "." + node.powers[w].first;
          out.push_back({RuleId::Cardinality, "W301",
                         "power '" + power + "' acts upon no property in world '" +
                             world.decl->name + "'",
                         {node.powers[w].second}, "power " + power, std::nullopt,
                         std::nullopt});
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_property_conformance(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  for (int m = 0; m < static_cast<int>(suite.modules().size()); ++m) {
    const auto& mod = suite.module(m);
    for (std::size_t t = 0; t < mod.decl->terms.size(); ++t) {
      const TermKey key{m, t};
      const auto& term = mod.decl->terms[t];
      const auto root = suite.enrichment_root(key);
      if (!root) continue;
      const std::string qualified = mod.name() + "." + term.name;
      const auto owned = mm::properties_of(*root);
      const auto& owner = mm::term_spec(mm::root_term(mm::root_kind(*root)));

      for (const auto& attr : term.attributes) {
        const bool ok = std::any_of(owned.begin(), owned.end(),
                                    [&](const mm::PropertySpec& p) { return p.key == attr.key; });
        if (ok) continue;
        std::string allowed;
        for (const auto& p : owned) allowed += (allowed.empty() ? "" : ", ") + std::string(p.key);
        std::string message = "attribute '" + attr.key + "' of term '" + qualified + "' ";
        message += mm::is_property_key(attr.key) ? "is not a property of "
                                                 : "is not a ThingFO property; expected a property of ";
        message += std::string(owner.display) + " (" + allowed + ")";
        out.push_back({RuleId::PropConformance, "W201", message, {attr.span},
                       "term " + qualified + " { " + attr.key + " }", mod.name(), std::nullopt});
      }

      if (mm::root_kind(*root) == mm::RootKind::Thing) {
        const bool described =
            std::any_of(term.attributes.begin(), term.attributes.end(),
                        [](const model::Attribute& a) { return a.key == "description"; });
        if (!described) {
          out.push_back({RuleId::PropConformance, "W202",
                         "Thing-rooted term '" + qualified + "' has no description",
                         {term.span}, "term " + qualified, mod.name(), std::nullopt});
        }
      }

      if (term.scope) {
        const std::string scope(model::to_string(*term.scope));
        if (!mm::is_descendant(*root, mm::TermId::Assertion)) {
          out.push_back({RuleId::PropConformance, "E204",
                         "term '" + qualified + "' declares scope " + scope + " but its root " +
                             std::string(mm::term_spec(*root).key) + " is not an Assertion",
                         {term.span}, "term " + qualified + " scope " + scope, mod.name(),
                         std::nullopt});
        } else if (const auto& parent = mod.terms[t].enriches) {
          const auto inherited = suite.effective_scope(*parent);
          if (inherited && *inherited != *term.scope) {
            out.push_back({RuleId::PropConformance, "E204",
                           "term '" + qualified + "' declares scope " + scope +
                               " but enriches " + detail::describe_root(suite, *parent),
                           {term.span}, "term " + qualified + " scope " + scope, mod.name(),
                           std::nullopt});
          }
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_rule3(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  for (const auto& file : suite.instance_files()) {
    for (std::size_t i = 0; i < file.individuals.size(); ++i) {
      const auto& type = file.individuals[i].type;
      if (!type) continue;
      const auto root = suite.enrichment_root(*type);
      if (!root) continue;
      const auto& decl = file.decl->individuals[i];
      const std::string witness = "individual " + decl.name + " : " + suite.qualified_name(*type);
      switch (mm::root_kind(*root)) {
        case mm::RootKind::Thing:
        case mm::RootKind::Assertion:
          break;
        case mm::RootKind::ThingCategory:
          out.push_back({RuleId::R3, "E301",
                         "individual '" + decl.name + "' instantiates " +
                             detail::describe_root(suite, *type) +
                             "; a Thing Category has no individuals",
                         {decl.type.span, decl.span}, witness, std::nullopt, std::nullopt});
          break;
        case mm::RootKind::Property:
        case mm::RootKind::Power:
          out.push_back({RuleId::R3, "E302",
                         "individual '" + decl.name + "' instantiates " +
                             detail::describe_root(suite, *type) +
                             "; properties and powers exist only as parts of world things",
                         {decl.type.span, decl.span}, witness, std::nullopt, std::nullopt});
          break;
      }
    }
    for (const auto& world : file.worlds) {
      for (std::size_t t = 0; t < world.things.size(); ++t) {
        const auto& type = world.things[t].instance_of;
        if (!type) continue;
        const auto root = suite.enrichment_root(*type);
        if (!root || mm::root_kind(*root) == mm::RootKind::Thing) continue;
        const auto& node = world.decl->things[t];
        out.push_back({RuleId::R3, "E303",
                       "world thing '" + node.id + "' is typed by " +
                           detail::describe_root(suite, *type) +
                           ", which is not a particular Thing",
                       {node.instance_of->span, node.span},
                       "thing " + node.id + " : " + suite.qualified_name(*type), std::nullopt,
                       std::nullopt});
      }
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace ontoarch::validator
