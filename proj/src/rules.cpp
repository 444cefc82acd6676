// Architecture placement and Rules #1/#2.

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "validator_internal.hpp"

namespace ontoarch::validator {

namespace mm = ontoarch::metamodel;
using model::Level;
using model::ResolvedSuite;

namespace detail {

KindChain follow_kind(const ResolvedSuite& suite, int module, std::size_t index,
                      std::span<const int> view) {
  const Level origin = suite.module(module).level();
  const auto visible = [&](int m) {
    return suite.module(m).level() != origin || std::binary_search(view.begin(), view.end(), m);
  };
  std::set<std::pair<int, std::size_t>> visited{{module, index}};
  int current_module = module;
  std::size_t current = index;
  bool first = true;
  while (true) {
    const auto& kind = suite.module(current_module).relations[current].kind;
    if (!kind) return {KindChain::Outcome::Broken};
    switch (kind->kind) {
      case model::KindTarget::Kind::Foundational:
        return {KindChain::Outcome::Foundational, kind->relationship};
      case model::KindTarget::Kind::Term:
        return {first ? KindChain::Outcome::DeadEnd : KindChain::Outcome::Broken};
      case model::KindTarget::Kind::Relation:
        break;
    }
    if (kind->module == module && kind->index == index) return {KindChain::Outcome::Cycle};
    if (!visible(kind->module)) return {KindChain::Outcome::Opaque};
    if (!visited.emplace(kind->module, kind->index).second) return {KindChain::Outcome::Broken};
    current_module = kind->module;
    current = kind->index;
    first = false;
  }
}

std::vector<Violation> rule1_for(const ResolvedSuite& suite, int module,
                                 std::span<const int> view) {
  std::vector<Violation> out;
  const auto& mod = suite.module(module);
  if (mod.level() == Level::FO) return out;
  const int expected_depth = model::depth(mod.level()) - 1;
  const auto expected_level = static_cast<Level>(expected_depth);

  for (std::size_t t = 0; t < mod.decl->terms.size(); ++t) {
    const auto& term = mod.decl->terms[t];
    const std::string qualified = mod.name() + "." + term.name;
    if (!term.enriches) {
      out.push_back({RuleId::R1, "E213",
                     "term '" + qualified + "' has no enrichment link to a " +
                         std::string(to_string(expected_level)) + " term",
                     {term.span}, "term " + qualified, mod.name(), std::nullopt});
      continue;
    }
    const auto& target = mod.terms[t].enriches;
    if (!target) continue;
    const Level target_level = suite.level_of(*target);
    if (model::depth(target_level) != expected_depth) {
      out.push_back({RuleId::R1, "E211",
                     "term '" + qualified + "' at " + std::string(to_string(mod.level())) +
                         " enriches '" + suite.qualified_name(*target) + "' at " +
                         std::string(to_string(target_level)) + "; expected a term at " +
                         std::string(to_string(expected_level)),
                     {term.enriches->span, term.span},
                     "term " + qualified + " enriches " + suite.qualified_name(*target),
                     mod.name(), std::nullopt});
    }
  }

  for (std::size_t r = 0; r < mod.decl->relations.size(); ++r) {
    const auto& rel = mod.decl->relations[r];
    const auto& kind = mod.relations[r].kind;
    if (!kind) continue;
    const std::string qualified = mod.name() + "." + rel.name;
    const std::string witness = "relation " + qualified + " kind " + rel.kind.str();

    if (kind->kind != model::KindTarget::Kind::Term) {
      const Level target_level = kind->kind == model::KindTarget::Kind::Foundational
                                     ? Level::FO
                                     : suite.module(kind->module).level();
      const int d = model::depth(target_level);
      if (d != expected_depth && d != model::depth(mod.level())) {
        out.push_back({RuleId::R1, "E211",
                       "relation '" + qualified + "' at " + std::string(to_string(mod.level())) +
                           " takes its kind from " + std::string(to_string(target_level)) +
                           "; expected a relationship at " +
                           std::string(to_string(expected_level)) + " or a same-level relation",
                       {rel.kind.span, rel.span}, witness, mod.name(), std::nullopt});
      }
    }

    const auto chain = detail::follow_kind(suite, module, r, view);
    if (chain.outcome == KindChain::Outcome::DeadEnd) {
      out.push_back({RuleId::R1, "E212",
                     "relation '" + qualified + "' takes its kind from '" + rel.kind.str() +
                         "', which is a term; the kind chain never reaches one of the 12 "
                         "foundational relationships",
                     {rel.kind.span, rel.span}, witness, mod.name(), std::nullopt});
    } else if (chain.outcome == KindChain::Outcome::Cycle) {
      out.push_back({RuleId::R1, "E212",
                     "relation '" + qualified +
                         "' lies on a kind cycle that never reaches one of the 12 foundational "
                         "relationships",
                     {rel.kind.span, rel.span}, witness, mod.name(), std::nullopt});
    }
  }
  return out;
}

}  // namespace detail

std::vector<Violation> check_architecture(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  for (const auto& mod : suite.modules()) {
    if (mod.level() == Level::FO) {
      out.push_back({RuleId::G2, "E201",
                     "module '" + mod.name() +
                         "' is declared at FO; the built-in ThingFO is the only foundational "
                         "ontology",
                     {mod.decl->name_span, mod.decl->span}, "ontology " + mod.name() + " at FO",
                     mod.name(), std::nullopt});
    }
    for (const auto& import : mod.decl->imports) {
      std::optional<Level> target_level;
      if (import.module == mm::kFoundationalModule) {
        target_level = Level::FO;
      } else if (const auto target = suite.find_module(import.module)) {
        target_level = suite.module(*target).level();
      }
      if (!target_level || import.module == mod.name()) continue;
      const std::string witness = mod.name() + " imports " + import.module;
      if (mod.level() == Level::FO || *target_level == Level::FO) {
        out.push_back({RuleId::R2, "E203",
                       "'" + witness + "' involves the foundational level, where no ontology may "
                       "be related to another",
                       {import.span}, witness, mod.name(), std::nullopt});
      } else if (*target_level != mod.level()) {
        out.push_back({RuleId::R2, "E202",
                       "module '" + mod.name() + "' at " + std::string(to_string(mod.level())) +
                           " imports '" + import.module + "' at " +
                           std::string(to_string(*target_level)) +
                           "; imports relate ontologies of the same level only",
                       {import.span}, witness, mod.name(), std::nullopt});
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_rule1(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  for (int m = 0; m < static_cast<int>(suite.modules().size()); ++m) {
    const int self[] = {m};
    auto found = detail::rule1_for(suite, m, self);
    out.insert(out.end(), found.begin(), found.end());
  }
  sort_violations(out);
  return out;
}

std::vector<std::vector<int>> import_components(const ResolvedSuite& suite) {
  const auto n = suite.modules().size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < static_cast<int>(n); ++m) {
    const auto& mod = suite.module(m);
    if (mod.level() == Level::FO) continue;
    const auto join = [&](int target) {
      if (target >= 0 && suite.module(target).level() == mod.level()) parent[find(m)] = find(target);
    };
    for (int target : mod.imports) join(target);
    for (const auto& rel : mod.relations) {
      if (rel.from) join(rel.from->module);
      if (rel.to) join(rel.to->module);
      if (rel.kind && rel.kind->kind == model::KindTarget::Kind::Relation) join(rel.kind->module);
    }
  }
  std::vector<std::vector<int>> components;
  std::vector<int> slot(n, -1);
  for (int m = 0; m < static_cast<int>(n); ++m) {
    if (suite.module(m).level() == Level::FO) continue;
    const int root = find(m);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[slot[root]].push_back(m);
  }
  return components;
}

std::vector<Violation> check_rule2(const ResolvedSuite& suite) {
  std::vector<Violation> out;
  const auto key = [](const Violation& v) { return std::tie(v.code, v.witness, v.spans); };

  for (const auto& component : import_components(suite)) {
    const auto view = model::merged_view(suite, component);
    std::vector<Violation> separate;
    std::vector<Violation> joint;
    for (int m : view.modules) {
      const int self[] = {m};
      auto rule1_alone = detail::rule1_for(suite, m, self);
      out.insert(out.end(), rule1_alone.begin(), rule1_alone.end());
      separate.insert(separate.end(), rule1_alone.begin(), rule1_alone.end());
      auto decls_alone = detail::relation_decls_for(suite, m, self);
      separate.insert(separate.end(), decls_alone.begin(), decls_alone.end());

      auto rule1_joint = detail::rule1_for(suite, m, view.modules);
      joint.insert(joint.end(), rule1_joint.begin(), rule1_joint.end());
      auto decls_joint = detail::relation_decls_for(suite, m, view.modules);
      joint.insert(joint.end(), decls_joint.begin(), decls_joint.end());
    }
    if (view.modules.size() < 2) continue;

    std::string members;
    for (int m : view.modules) members += (members.empty() ? "" : ", ") + suite.module(m).name();

    // Chains that leave a module laterally and end somewhere broken. Alone the
    // module cannot see past the lateral link, so only the joint view reports them.
    for (int m : view.modules) {
      const auto& mod = suite.module(m);
      const int self[] = {m};
      for (std::size_t r = 0; r < mod.relations.size(); ++r) {
        if (detail::follow_kind(suite, m, r, self).outcome != detail::KindChain::Outcome::Opaque) continue;
        if (detail::follow_kind(suite, m, r, view.modules).outcome != detail::KindChain::Outcome::Broken) {
          continue;
        }
        const auto& rel = mod.decl->relations[r];
        const std::string qualified = mod.name() + "." + rel.name;
        out.push_back({RuleId::R2, "E221",
                       "jointly with " + members + ": relation '" + qualified +
                           "' takes its kind from '" + rel.kind.str() +
                           "', whose kind chain never reaches one of the 12 foundational "
                           "relationships",
                       {rel.kind.span, rel.span},
                       "relation " + qualified + " kind " + rel.kind.str() + " (component: " +
                           members + ")",
                       mod.name(), std::nullopt});
      }
    }
    for (const auto& v : joint) {
      const bool seen = std::any_of(separate.begin(), separate.end(),
                                    [&](const Violation& s) { return key(s) == key(v); });
      if (seen) continue;
      Violation merged = v;
      merged.rule = RuleId::R2;
      merged.code = "E221";
      merged.message = "jointly with " + members + ": " + v.message + " [" + v.code + "]";
      merged.witness = v.witness + " (component: " + members + ")";
      merged.anchor.reset();
      out.push_back(std::move(merged));
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace ontoarch::validator
