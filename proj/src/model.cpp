#include "ontoarch/model.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace ontoarch::model {

namespace mm = ontoarch::metamodel;

std::string_view to_string(Level level) {
  static constexpr std::array<std::string_view, 5> kNames = {"FO", "CO", "TDO", "LDO", "IO"};
  return kNames[static_cast<std::size_t>(level)];
}

std::optional<Level> parse_level(std::string_view text) {
  for (Level level : {Level::FO, Level::CO, Level::TDO, Level::LDO, Level::IO}) {
    if (to_string(level) == text) return level;
  }
  return std::nullopt;
}

std::string_view to_string(Scope scope) {
  return scope == Scope::Particulars ? "particulars" : "universals";
}

std::string_view to_string(Predicate predicate) {
  switch (predicate) {
    case Predicate::Enables:
      return "enables";
    case Predicate::ActsUpon:
      return "actsUpon";
    case Predicate::Interacts:
      return "interacts";
    case Predicate::BelongsTo:
      return "belongsTo";
    case Predicate::RelatesWith:
      return "relatesWith";
    case Predicate::IsSeenAs:
      return "isSeenAs";
    case Predicate::Defines:
      break;
  }
  return "defines";
}

std::optional<Predicate> parse_predicate(std::string_view text) {
  for (Predicate p : {Predicate::Enables, Predicate::ActsUpon, Predicate::Interacts,
                      Predicate::BelongsTo, Predicate::RelatesWith, Predicate::IsSeenAs,
                      Predicate::Defines}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

std::string QualifiedRef::str() const { return module ? *module + "." + name : name; }

std::string Ref::str() const { return part ? thing + "." + *part : thing; }

QualifiedRef Ref::as_qualified() const {
  QualifiedRef ref;
  if (part) {
    ref.module = thing;
    ref.name = *part;
  } else {
    ref.name = thing;
  }
  ref.span = span;
  return ref;
}

const std::string& ResolvedWorld::thing_id(std::size_t thing) const {
  return decl->things[thing].id;
}

const std::string& ResolvedWorld::property_id(PartRef ref) const {
  return decl->things[ref.thing].properties[ref.part].first;
}

const std::string& ResolvedWorld::power_id(PartRef ref) const {
  return decl->things[ref.thing].powers[ref.part].first;
}

// ---------------------------------------------------------------------------
// ResolvedSuite queries
// ---------------------------------------------------------------------------

std::optional<int> ResolvedSuite::find_module(std::string_view name) const {
  const auto it = std::lower_bound(
      modules_.begin(), modules_.end(), name,
      [](const ResolvedModule& m, std::string_view n) { return m.name() < n; });
  if (it == modules_.end() || it->name() != name) return std::nullopt;
  return static_cast<int>(it - modules_.begin());
}

Level ResolvedSuite::level_of(const TermKey& key) const {
  return key.is_foundational() ? Level::FO : module(key.module).level();
}

std::string ResolvedSuite::qualified_name(const TermKey& key) const {
  if (key.is_foundational()) {
    return std::string(mm::kFoundationalModule) + "." +
           std::string(mm::term_spec(key.term_id()).key);
  }
  const auto& mod = module(key.module);
  return mod.name() + "." + mod.decl->terms[key.index].name;
}

const TermDef* ResolvedSuite::term_decl(const TermKey& key) const {
  if (key.is_foundational()) return nullptr;
  return &module(key.module).decl->terms[key.index];
}

const ResolvedTerm* ResolvedSuite::resolved_term(const TermKey& key) const {
  if (key.is_foundational()) return nullptr;
  return &module(key.module).terms[key.index];
}

const RelationDecl& ResolvedSuite::relation_decl(int module_index, std::size_t index) const {
  return module(module_index).decl->relations[index];
}

std::optional<mm::TermId> ResolvedSuite::enrichment_root(const TermKey& key) const {
  if (key.is_foundational()) return key.term_id();
  return resolved_term(key)->root;
}

std::optional<Scope> ResolvedSuite::effective_scope(const TermKey& key) const {
  TermKey cursor = key;
  // Bounded walk; enrichment cycles were already reported as E105.
  for (std::size_t steps = 0; steps <= term_count() + 1; ++steps) {
    if (cursor.is_foundational()) {
      if (cursor.term_id() == mm::TermId::AssertionOnParticulars) return Scope::Particulars;
      if (cursor.term_id() == mm::TermId::AssertionOnUniversals) return Scope::Universals;
      return std::nullopt;
    }
    if (const auto& scope = term_decl(cursor)->scope) return scope;
    const auto& next = resolved_term(cursor)->enriches;
    if (!next) return std::nullopt;
    cursor = *next;
  }
  return std::nullopt;
}

std::size_t ResolvedSuite::term_count() const {
  std::size_t n = 0;
  for (const auto& m : modules_) n += m.terms.size();
  return n;
}

std::size_t ResolvedSuite::relation_count() const {
  std::size_t n = 0;
  for (const auto& m : modules_) n += m.relations.size();
  return n;
}

std::size_t ResolvedSuite::individual_count() const {
  std::size_t n = 0;
  for (const auto& f : instance_files_) n += f.individuals.size();
  return n;
}

std::size_t ResolvedSuite::world_count() const {
  std::size_t n = 0;
  for (const auto& f : instance_files_) n += f.worlds.size();
  return n;
}

std::optional<mm::TermId> enrichment_root(const ResolvedSuite& suite, const TermKey& key) {
  return suite.enrichment_root(key);
}

// ---------------------------------------------------------------------------
// Resolver
// ---------------------------------------------------------------------------

class Resolver {
 public:
  explicit Resolver(std::vector<SourceUnit> units) { suite_.units_ = std::move(units); }

  ResolveResult run() {
    collect_modules();
    for (std::size_t i = 0; i < suite_.modules_.size(); ++i) declare_names(static_cast<int>(i));
    for (std::size_t i = 0; i < suite_.modules_.size(); ++i) bind_imports(static_cast<int>(i));
    report_import_cycles();
    for (std::size_t i = 0; i < suite_.modules_.size(); ++i) bind_body(static_cast<int>(i));
    compute_roots();
    for (const auto& unit : suite_.units_) {
      for (const auto& file : unit.instances) bind_instances(file);
    }
    sort_diagnostics(diagnostics_);
    return ResolveResult{std::move(suite_), std::move(diagnostics_)};
  }

 private:
  void error(std::string code, const SourceSpan& span, std::string message) {
    diagnostics_.push_back(make_diagnostic(std::move(code), span, std::move(message)));
  }

  void collect_modules() {
    std::set<std::string, std::less<>> seen;
    std::vector<const OntologyModule*> kept;
    for (const auto& unit : suite_.units_) {
      for (const auto& mod : unit.modules) {
        if (mod.name == mm::kFoundationalModule) {
          error("E102", mod.name_span,
                "module name 'ThingFO' is reserved for the built-in foundational ontology");
          continue;
        }
        if (!seen.insert(mod.name).second) {
          error("E102", mod.name_span, "duplicate module '" + mod.name + "'");
          continue;
        }
        kept.push_back(&mod);
      }
    }
    std::sort(kept.begin(), kept.end(),
              [](const OntologyModule* a, const OntologyModule* b) { return a->name < b->name; });
    for (const OntologyModule* decl : kept) {
      ResolvedModule mod;
      mod.decl = decl;
      mod.terms.resize(decl->terms.size());
      mod.relations.resize(decl->relations.size());
      suite_.modules_.push_back(std::move(mod));
    }
  }

  void declare_names(int index) {
    auto& mod = suite_.modules_[static_cast<std::size_t>(index)];
    for (const auto& item : mod.decl->order) {
      const bool is_term = item.kind == BodyItem::Kind::Term;
      const std::string& name =
          is_term ? mod.decl->terms[item.index].name : mod.decl->relations[item.index].name;
      const SourceSpan& span =
          is_term ? mod.decl->terms[item.index].span : mod.decl->relations[item.index].span;
      if (!mod.names.emplace(name, item).second) {
        error("E102", span, "duplicate definition of '" + name + "' in module '" + mod.name() + "'");
      }
    }
  }

  void bind_imports(int index) {
    auto& mod = suite_.modules_[static_cast<std::size_t>(index)];
    for (const auto& import : mod.decl->imports) {
      if (import.module == mod.name()) {
        error("E104", import.span, "module '" + mod.name() + "' imports itself");
        continue;
      }
      if (import.module == mm::kFoundationalModule) {
        mod.imports.push_back(-1);
        continue;
      }
      const auto target = suite_.find_module(import.module);
      if (!target) {
        error("E101", import.span, "unresolved import of unknown module '" + import.module + "'");
        continue;
      }
      if (std::find(mod.imports.begin(), mod.imports.end(), *target) == mod.imports.end()) {
        mod.imports.push_back(*target);
      }
    }
  }

  /// One E103 per strongly connected import component with more than one module.
  void report_import_cycles() {
    const std::size_t n = suite_.modules_.size();
    std::vector<int> order(n, -1);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0;

    std::function<void(int)> strongconnect = [&](int v) {
      order[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (int w : suite_.modules_[v].imports) {
        if (w < 0) continue;
        if (order[w] < 0) {
          strongconnect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
      }
      if (low[v] != order[v]) return;
      std::vector<int> component;
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() < 2) return;
      std::sort(component.begin(), component.end());
      const auto& first = suite_.modules_[component.front()];
      std::string names;
      for (int m : component) names += (names.empty() ? "" : ", ") + suite_.modules_[m].name();
      for (const auto& import : first.decl->imports) {
        const auto target = suite_.find_module(import.module);
        if (target && std::binary_search(component.begin(), component.end(), *target)) {
          error("E103", import.span, "import cycle among modules " + names);
          break;
        }
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (order[v] < 0) strongconnect(static_cast<int>(v));
    }
  }

  enum class Namespace { Terms, Relations };

  struct Binding {
    enum class Kind { FoundationalTerm, FoundationalRelationship, Term, Relation } kind;
    int module = -1;
    std::size_t index = 0;
  };

  std::optional<Binding> lookup_in_module(int module, std::string_view name) const {
    if (module < 0) {
      if (const auto id = mm::find_term(name)) {
        return Binding{Binding::Kind::FoundationalTerm, -1, static_cast<std::size_t>(*id)};
      }
      if (const auto id = mm::find_relationship(name)) {
        return Binding{Binding::Kind::FoundationalRelationship, -1, static_cast<std::size_t>(*id)};
      }
      return std::nullopt;
    }
    const auto& names = suite_.modules_[static_cast<std::size_t>(module)].names;
    const auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    const auto kind =
        it->second.kind == BodyItem::Kind::Term ? Binding::Kind::Term : Binding::Kind::Relation;
    return Binding{kind, module, it->second.index};
  }

  /// Binds `ref` as seen from `context` (a module index, or nullopt inside an
  /// instance file with no resolved module). Reports E101 on failure.
  std::optional<Binding> lookup(const QualifiedRef& ref, std::optional<int> context) {
    if (ref.module) {
      int target = -1;
      if (*ref.module != mm::kFoundationalModule) {
        const auto found = suite_.find_module(*ref.module);
        if (!found) {
          error("E101", ref.span, "unresolved reference '" + ref.str() + "': unknown module '" +
                                      *ref.module + "'");
          return std::nullopt;
        }
        target = *found;
      }
      if (auto binding = lookup_in_module(target, ref.name)) return binding;
      error("E101", ref.span,
            "unresolved reference '" + ref.str() + "': module '" + *ref.module +
                "' declares no '" + ref.name + "'");
      return std::nullopt;
    }
    if (context) {
      if (auto own = lookup_in_module(*context, ref.name)) return own;
      std::vector<Binding> found;
      std::vector<std::string> where;
      for (int imported : suite_.modules_[static_cast<std::size_t>(*context)].imports) {
        if (imported < 0) continue;
        if (auto binding = lookup_in_module(imported, ref.name)) {
          found.push_back(*binding);
          where.push_back(suite_.modules_[static_cast<std::size_t>(imported)].name());
        }
      }
      if (found.size() == 1) return found.front();
      if (found.size() > 1) {
        std::string list;
        for (const auto& w : where) list += (list.empty() ? "" : ", ") + w;
        error("E101", ref.span,
              "ambiguous reference '" + ref.name + "': declared in imported modules " + list);
        return std::nullopt;
      }
    }
    if (auto builtin = lookup_in_module(-1, ref.name)) return builtin;
    error("E101", ref.span, "unresolved reference '" + ref.name + "'");
    return std::nullopt;
  }

  std::optional<TermKey> lookup_term(const QualifiedRef& ref, std::optional<int> context) {
    const auto binding = lookup(ref, context);
    if (!binding) return std::nullopt;
    switch (binding->kind) {
      case Binding::Kind::FoundationalTerm:
      case Binding::Kind::Term:
        return TermKey{binding->module, binding->index};
      case Binding::Kind::FoundationalRelationship:
      case Binding::Kind::Relation:
        break;
    }
    error("E101", ref.span, "'" + ref.str() + "' names a relation where a term is expected");
    return std::nullopt;
  }

  std::optional<KindTarget> lookup_kind(const QualifiedRef& ref, int context) {
    const auto binding = lookup(ref, context);
    if (!binding) return std::nullopt;
    KindTarget target;
    switch (binding->kind) {
      case Binding::Kind::FoundationalRelationship:
        target.kind = KindTarget::Kind::Foundational;
        target.relationship = static_cast<mm::RelationshipId>(binding->index);
        break;
      case Binding::Kind::Relation:
        target.kind = KindTarget::Kind::Relation;
        target.module = binding->module;
        target.index = binding->index;
        break;
      case Binding::Kind::FoundationalTerm:
      case Binding::Kind::Term:
        target.kind = KindTarget::Kind::Term;
        target.term = TermKey{binding->module, binding->index};
        target.module = binding->module;
        break;
    }
    return target;
  }

  void bind_body(int index) {
    auto& mod = suite_.modules_[static_cast<std::size_t>(index)];
    for (std::size_t t = 0; t < mod.decl->terms.size(); ++t) {
      const auto& term = mod.decl->terms[t];
      if (term.enriches) mod.terms[t].enriches = lookup_term(*term.enriches, index);
    }
    for (std::size_t r = 0; r < mod.decl->relations.size(); ++r) {
      const auto& rel = mod.decl->relations[r];
      auto& out = mod.relations[r];
      out.from = lookup_term(rel.from, index);
      out.to = lookup_term(rel.to, index);
      out.kind = lookup_kind(rel.kind, index);
    }
  }

  void compute_roots() {
    enum class State { Unvisited, Visiting, Done };
    std::vector<std::vector<State>> state;
    for (const auto& mod : suite_.modules_) state.emplace_back(mod.terms.size(), State::Unvisited);

    std::function<std::optional<mm::TermId>(const TermKey&)> visit =
        [&](const TermKey& key) -> std::optional<mm::TermId> {
      if (key.is_foundational()) return key.term_id();
      auto& mod = suite_.modules_[static_cast<std::size_t>(key.module)];
      auto& st = state[static_cast<std::size_t>(key.module)][key.index];
      auto& term = mod.terms[key.index];
      if (st == State::Done) return term.root;
      if (st == State::Visiting) return std::nullopt;
      st = State::Visiting;
      if (term.enriches) {
        term.root = visit(*term.enriches);
        if (!term.root && in_cycle(key)) {
          error("E105", mod.decl->terms[key.index].span,
                "enrichment cycle through '" + suite_.qualified_name(key) + "'");
        }
      }
      st = State::Done;
      return term.root;
    };

    for (std::size_t m = 0; m < suite_.modules_.size(); ++m) {
      for (std::size_t t = 0; t < suite_.modules_[m].terms.size(); ++t) {
        visit(TermKey{static_cast<int>(m), t});
      }
    }
  }

  /// True iff following `enriches` from `key` returns to `key`.
  bool in_cycle(const TermKey& key) const {
    std::optional<TermKey> cursor = suite_.module(key.module).terms[key.index].enriches;
    for (std::size_t steps = 0; cursor && steps <= suite_.term_count(); ++steps) {
      if (*cursor == key) return true;
      if (cursor->is_foundational()) return false;
      cursor = suite_.module(cursor->module).terms[cursor->index].enriches;
    }
    return false;
  }

  struct ThingScope {
    const World* world;
    std::map<std::string, std::size_t, std::less<>> things;
  };

  std::optional<std::size_t> bind_thing(const ThingScope& scope, const Ref& ref) {
    const auto it = scope.things.find(ref.thing);
    if (it == scope.things.end()) {
      error("E101", ref.span,
            "unresolved reference: world '" + scope.world->name + "' has no thing '" + ref.thing + "'");
      return std::nullopt;
    }
    return it->second;
  }

  /// Binds `ref` to a whole thing; a `thing.part` reference is the wrong sort.
  std::optional<std::size_t> bind_whole_thing(const ThingScope& scope, const Ref& ref,
                                              std::string_view role) {
    if (ref.part) {
      error("E106", ref.span,
            "'" + ref.str() + "' is a part reference; " + std::string(role) + " must be a thing");
      return std::nullopt;
    }
    return bind_thing(scope, ref);
  }

  enum class PartKind { Property, Power };

  std::optional<PartRef> bind_part(const ThingScope& scope, const Ref& ref, PartKind want) {
    const std::string_view wanted = want == PartKind::Property ? "property" : "power";
    if (!ref.part) {
      error("E106", ref.span,
            "'" + ref.str() + "' is a thing; expected a " + std::string(wanted) + " reference '" +
                ref.thing + ".<" + std::string(wanted) + ">'");
      return std::nullopt;
    }
    const auto thing = bind_thing(scope, ref);
    if (!thing) return std::nullopt;
    const auto& node = scope.world->things[*thing];
    const auto find = [&](const auto& parts) -> std::optional<std::size_t> {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].first == *ref.part) return i;
      }
      return std::nullopt;
    };
    const auto& wanted_parts = want == PartKind::Property ? node.properties : node.powers;
    const auto& other_parts = want == PartKind::Property ? node.powers : node.properties;
    if (const auto index = find(wanted_parts)) return PartRef{*thing, *index};
    if (find(other_parts)) {
      error("E106", ref.span,
            "'" + ref.str() + "' is a " +
                std::string(want == PartKind::Property ? "power" : "property") + "; expected a " +
                std::string(wanted));
      return std::nullopt;
    }
    error("E101", ref.span,
          "unresolved reference: thing '" + ref.thing + "' has no part '" + *ref.part + "'");
    return std::nullopt;
  }

  void bind_instances(const InstanceFile& file) {
    ResolvedInstanceFile out;
    out.decl = &file;
    if (file.of_module == mm::kFoundationalModule) {
      out.of_module = -1;
    } else if (const auto found = suite_.find_module(file.of_module)) {
      out.of_module = *found;
    } else {
      error("E101", file.of_span, "unresolved reference to unknown module '" + file.of_module + "'");
    }
    std::optional<int> context;
    if (out.of_module && *out.of_module >= 0) context = *out.of_module;

    std::set<std::string, std::less<>> names;
    for (const auto& indiv : file.individuals) {
      if (!names.insert(indiv.name).second) {
        error("E102", indiv.span, "duplicate individual '" + indiv.name + "'");
      }
      out.individuals.push_back({lookup_term(indiv.type, context)});
    }
    std::set<std::string, std::less<>> world_names;
    for (const auto& world : file.worlds) {
      if (!world_names.insert(world.name).second) {
        error("E102", world.span, "duplicate world '" + world.name + "'");
      }
      out.worlds.push_back(bind_world(world, context));
    }
    suite_.instance_files_.push_back(std::move(out));
  }

  ResolvedWorld bind_world(const World& world, std::optional<int> context) {
    ResolvedWorld out;
    out.decl = &world;
    ThingScope scope{&world, {}};
    for (std::size_t i = 0; i < world.things.size(); ++i) {
      const auto& node = world.things[i];
      if (!scope.things.emplace(node.id, i).second) {
        error("E102", node.span, "duplicate thing '" + node.id + "' in world '" + world.name + "'");
      }
      std::set<std::string, std::less<>> parts;
      for (const auto* list : {&node.properties, &node.powers}) {
        for (const auto& [id, span] : *list) {
          if (!parts.insert(id).second) {
            error("E102", span, "duplicate part '" + id + "' in thing '" + node.id + "'");
          }
        }
      }
      ResolvedThing thing;
      if (node.instance_of) thing.instance_of = lookup_term(*node.instance_of, context);
      out.things.push_back(thing);
    }

    for (std::size_t f = 0; f < world.facts.size(); ++f) {
      const Fact& fact = world.facts[f];
      switch (fact.predicate) {
        case Predicate::Enables: {
          const auto prop = bind_part(scope, fact.subject, PartKind::Property);
          const auto pow = bind_part(scope, fact.object, PartKind::Power);
          if (prop && pow) out.enables.push_back({*prop, *pow, f});
          break;
        }
        case Predicate::ActsUpon: {
          const auto pow = bind_part(scope, fact.subject, PartKind::Power);
          const auto prop = bind_part(scope, fact.object, PartKind::Property);
          if (pow && prop) out.acts_upon.push_back({*pow, *prop, f});
          break;
        }
        case Predicate::Interacts: {
          const auto pow = bind_part(scope, fact.subject, PartKind::Power);
          const auto thing = bind_whole_thing(scope, fact.object, "the interaction target");
          if (pow && thing) out.interacts.push_back({*pow, *thing, f});
          break;
        }
        case Predicate::IsSeenAs: {
          const auto prop = bind_part(scope, fact.subject, PartKind::Property);
          const auto thing = bind_whole_thing(scope, fact.object, "the other thing");
          if (prop && thing) out.is_seen_as.push_back({*prop, *thing, f});
          break;
        }
        case Predicate::RelatesWith: {
          const auto a = bind_whole_thing(scope, fact.subject, "the subject");
          const auto b = bind_whole_thing(scope, fact.object, "the related thing");
          if (a && b) out.relates_with.push_back({*a, *b, f});
          break;
        }
        case Predicate::BelongsTo:
        case Predicate::Defines: {
          const auto thing = bind_whole_thing(scope, fact.subject, "the subject");
          const auto term = lookup_term(fact.object.as_qualified(), context);
          if (thing && term) {
            auto& edges = fact.predicate == Predicate::BelongsTo ? out.belongs_to : out.defines;
            edges.push_back({*thing, *term, f});
          }
          break;
        }
      }
    }
    return out;
  }

  ResolvedSuite suite_;
  std::vector<Diagnostic> diagnostics_;
};

ResolveResult resolve(std::vector<SourceUnit> units) { return Resolver(std::move(units)).run(); }

MergedView merged_view(const ResolvedSuite& suite, std::span<const int> modules) {
  MergedView view;
  view.modules.assign(modules.begin(), modules.end());
  std::sort(view.modules.begin(), view.modules.end());
  view.modules.erase(std::unique(view.modules.begin(), view.modules.end()), view.modules.end());
  if (!view.modules.empty()) view.level = suite.module(view.modules.front()).level();
  for (int m : view.modules) {
    const auto& mod = suite.module(m);
    for (std::size_t t = 0; t < mod.decl->terms.size(); ++t) {
      view.terms.push_back({m, t, mod.name() + "." + mod.decl->terms[t].name});
    }
    for (std::size_t r = 0; r < mod.decl->relations.size(); ++r) {
      view.relations.push_back({m, r, mod.name() + "." + mod.decl->relations[r].name});
    }
  }
  return view;
}

}  // namespace ontoarch::model
