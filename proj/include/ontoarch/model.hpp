#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoarch/diagnostic.hpp"
#include "ontoarch/metamodel.hpp"

namespace ontoarch::model {

/// Architecture tier. Smaller depth is more abstract: FO > CO > TDO > LDO > IO.
enum class Level { FO = 0, CO = 1, TDO = 2, LDO = 3, IO = 4 };

std::string_view to_string(Level level);
std::optional<Level> parse_level(std::string_view text);
constexpr int depth(Level level) { return static_cast<int>(level); }

// ---------------------------------------------------------------------------
// Declarations as written. The parser produces these; `resolve` binds them.
// ---------------------------------------------------------------------------

/// `Module.Name` or a bare `Name`.
struct QualifiedRef {
  std::optional<std::string> module;
  std::string name;
  SourceSpan span;

  [[nodiscard]] std::string str() const;
};

/// A world reference: `thing` or `thing.part`.
struct Ref {
  std::string thing;
  std::optional<std::string> part;
  SourceSpan span;

  [[nodiscard]] std::string str() const;
  /// Reinterprets the reference as a term name (`belongsTo`/`defines` targets).
  [[nodiscard]] QualifiedRef as_qualified() const;
};

struct Import {
  std::string module;
  SourceSpan span;
};

enum class Scope { Particulars, Universals };
std::string_view to_string(Scope scope);

struct Attribute {
  std::string key;
  std::string value;
  SourceSpan span;
};

struct TermDef {
  std::string name;
  std::optional<QualifiedRef> enriches;
  std::optional<Scope> scope;
  std::vector<Attribute> attributes;
  /// Whether the source carried an attribute block (possibly empty).
  bool has_attribute_block = false;
  SourceSpan span;
};

struct RelationDecl {
  std::string name;
  QualifiedRef from;
  QualifiedRef to;
  QualifiedRef kind;
  SourceSpan span;
};

/// Position of a declaration in its module body, used to preserve source order.
struct BodyItem {
  enum class Kind { Term, Relation } kind;
  std::size_t index;
};

struct OntologyModule {
  std::string name;
  Level level = Level::CO;
  SourceSpan name_span;
  std::vector<Import> imports;
  std::vector<TermDef> terms;
  std::vector<RelationDecl> relations;
  std::vector<BodyItem> order;
  SourceSpan span;
};

struct ThingNode {
  std::string id;
  std::optional<QualifiedRef> instance_of;
  std::vector<std::pair<std::string, SourceSpan>> properties;
  std::vector<std::pair<std::string, SourceSpan>> powers;
  SourceSpan span;
};

enum class Predicate { Enables, ActsUpon, Interacts, BelongsTo, RelatesWith, IsSeenAs, Defines };
std::string_view to_string(Predicate predicate);
std::optional<Predicate> parse_predicate(std::string_view text);

struct Fact {
  Predicate predicate = Predicate::Enables;
  Ref subject;
  Ref object;
  SourceSpan span;
};

struct World {
  std::string name;
  std::vector<ThingNode> things;
  std::vector<Fact> facts;
  SourceSpan span;
};

struct Individual {
  std::string name;
  QualifiedRef type;
  SourceSpan span;
};

struct InstanceItem {
  enum class Kind { Individual, World } kind;
  std::size_t index;
};

struct InstanceFile {
  std::string of_module;
  SourceSpan of_span;
  std::vector<Individual> individuals;
  std::vector<World> worlds;
  std::vector<InstanceItem> order;
  SourceSpan span;
};

// ---------------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------------

/// A term binding: either a foundational ThingFO term or a user term.
struct TermKey {
  /// Index into ResolvedSuite::modules, or -1 for ThingFO.
  int module = -1;
  /// Term index within the module, or the TermId value for ThingFO.
  std::size_t index = 0;

  static TermKey foundational(metamodel::TermId id) {
    return {-1, static_cast<std::size_t>(id)};
  }
  [[nodiscard]] bool is_foundational() const { return module < 0; }
  [[nodiscard]] metamodel::TermId term_id() const {
    return static_cast<metamodel::TermId>(index);
  }
  bool operator==(const TermKey&) const = default;
  auto operator<=>(const TermKey&) const = default;
};

/// A relation `kind` binding. `Term` means the name bound to a term, which is a dead end.
struct KindTarget {
  enum class Kind { Foundational, Relation, Term } kind = Kind::Foundational;
  metamodel::RelationshipId relationship = metamodel::RelationshipId::RelatesWithThing;
  int module = -1;
  std::size_t index = 0;
  TermKey term;
};

struct ResolvedTerm {
  std::optional<TermKey> enriches;
  /// Enrichment root, absent when the chain is broken or cyclic.
  std::optional<metamodel::TermId> root;
};

struct ResolvedRelation {
  std::optional<TermKey> from;
  std::optional<TermKey> to;
  std::optional<KindTarget> kind;
};

struct ResolvedModule {
  const OntologyModule* decl = nullptr;
  std::vector<int> imports;
  std::vector<ResolvedTerm> terms;
  std::vector<ResolvedRelation> relations;
  std::map<std::string, BodyItem, std::less<>> names;

  [[nodiscard]] const std::string& name() const { return decl->name; }
  [[nodiscard]] Level level() const { return decl->level; }
};

struct PartRef {
  std::size_t thing = 0;
  std::size_t part = 0;
  bool operator==(const PartRef&) const = default;
  auto operator<=>(const PartRef&) const = default;
};

template <typename From, typename To>
struct Edge {
  From from;
  To to;
  /// Index of the originating fact in World::facts.
  std::size_t fact = 0;
};

struct ResolvedThing {
  std::optional<TermKey> instance_of;
};

/// A world with every reference bound. Property and power nodes are owned by the
/// thing that declares them, so ownership is functional by construction.
struct ResolvedWorld {
  const World* decl = nullptr;
  std::vector<ResolvedThing> things;
  std::vector<Edge<PartRef, PartRef>> enables;     // property -> power
  std::vector<Edge<PartRef, PartRef>> acts_upon;   // power -> property
  std::vector<Edge<PartRef, std::size_t>> interacts;  // power -> thing
  std::vector<Edge<PartRef, std::size_t>> is_seen_as;  // property -> thing
  std::vector<Edge<std::size_t, std::size_t>> relates_with;
  std::vector<Edge<std::size_t, TermKey>> belongs_to;
  std::vector<Edge<std::size_t, TermKey>> defines;

  [[nodiscard]] const std::string& thing_id(std::size_t thing) const;
  [[nodiscard]] const std::string& property_id(PartRef ref) const;
  [[nodiscard]] const std::string& power_id(PartRef ref) const;
};

struct ResolvedIndividual {
  std::optional<TermKey> type;
};

struct ResolvedInstanceFile {
  const InstanceFile* decl = nullptr;
  std::optional<int> of_module;
  std::vector<ResolvedIndividual> individuals;
  std::vector<ResolvedWorld> worlds;
};

struct UnitItem {
  enum class Kind { Module, Instances } kind;
  std::size_t index;
};

/// The declarations of one source file.
struct SourceUnit {
  std::string path;
  std::vector<OntologyModule> modules;
  std::vector<InstanceFile> instances;
  std::vector<UnitItem> order;
};

/// The built-in ThingFO module plus every user module and instance file, with
/// every reference bound where possible. Modules are ordered by name.
class ResolvedSuite {
 public:
  ResolvedSuite() = default;
  ResolvedSuite(const ResolvedSuite&) = delete;
  ResolvedSuite& operator=(const ResolvedSuite&) = delete;
  ResolvedSuite(ResolvedSuite&&) noexcept = default;
  ResolvedSuite& operator=(ResolvedSuite&&) noexcept = default;

  [[nodiscard]] std::span<const ResolvedModule> modules() const { return modules_; }
  [[nodiscard]] std::span<const ResolvedInstanceFile> instance_files() const {
    return instance_files_;
  }
  [[nodiscard]] const ResolvedModule& module(int index) const {
    return modules_[static_cast<std::size_t>(index)];
  }
  [[nodiscard]] std::optional<int> find_module(std::string_view name) const;

  [[nodiscard]] Level level_of(const TermKey& key) const;
  /// `Module.Term` display name.
  [[nodiscard]] std::string qualified_name(const TermKey& key) const;
  [[nodiscard]] const TermDef* term_decl(const TermKey& key) const;
  [[nodiscard]] const ResolvedTerm* resolved_term(const TermKey& key) const;
  [[nodiscard]] const RelationDecl& relation_decl(int module, std::size_t index) const;

  /// Enrichment root of a term, or nullopt when its chain is broken or cyclic.
  [[nodiscard]] std::optional<metamodel::TermId> enrichment_root(const TermKey& key) const;
  /// The scope facet in force for a term: its own, or the nearest one up its
  /// enrichment chain. Enriching an `AssertionOn*` term implies that scope.
  [[nodiscard]] std::optional<Scope> effective_scope(const TermKey& key) const;

  [[nodiscard]] std::size_t term_count() const;
  [[nodiscard]] std::size_t relation_count() const;
  [[nodiscard]] std::size_t individual_count() const;
  [[nodiscard]] std::size_t world_count() const;

 private:
  friend class Resolver;

  std::vector<SourceUnit> units_;
  std::vector<ResolvedModule> modules_;
  std::vector<ResolvedInstanceFile> instance_files_;
};

struct ResolveResult {
  ResolvedSuite suite;
  std::vector<Diagnostic> diagnostics;
};

/// Binds every name in `units`. Unbound references stay empty in the suite and
/// each one surfaces as a diagnostic; nothing fails silently.
ResolveResult resolve(std::vector<SourceUnit> units);

/// Follows `enriches` links up to the foundational term. Identity on ThingFO terms.
std::optional<metamodel::TermId> enrichment_root(const ResolvedSuite& suite, const TermKey& key);

struct ScopedTerm {
  int module;
  std::size_t index;
  std::string qualified_name;
};

struct ScopedRelation {
  int module;
  std::size_t index;
  std::string qualified_name;
};

/// Union of same-level modules with qualified names kept distinct.
struct MergedView {
  Level level = Level::CO;
  std::vector<int> modules;
  std::vector<ScopedTerm> terms;
  std::vector<ScopedRelation> relations;
};

/// Precondition: all modules share one level.
MergedView merged_view(const ResolvedSuite& suite, std::span<const int> modules);

}  // namespace ontoarch::model
