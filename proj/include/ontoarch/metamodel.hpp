#pragma once

// The built-in ThingFO v1.3 catalog: terms, properties and non-taxonomic
// relationships. All data is immutable and safe to read from any thread.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ontoarch::metamodel {

/// Name of the built-in foundational module.
inline constexpr std::string_view kFoundationalModule = "ThingFO";

enum class TermId : std::uint8_t {
  Thing,
  Property,
  Power,
  ThingCategory,
  Assertion,
  AssertionOnParticulars,
  AssertionOnUniversals,
  ActionAssertion,
  AllotmentAssertion,
  BehaviorAssertion,
  ConstraintAssertion,
  IntentionAssertion,
  QualityAssertion,
  QuantityAssertion,
  RelationAssertion,
  SituationAssertion,
  StructureAssertion,
  SubstanceAssertion,
  TimeAssertion,
};

inline constexpr std::size_t kTermCount = 19;

/// The five taxonomy roots.
enum class RootKind : std::uint8_t { Thing, Property, Power, ThingCategory, Assertion };

struct TermSpec {
  TermId id;
  /// Identifier used in ontology sources, e.g. `ThingCategory`.
  std::string_view key;
  /// Display name as worded in the catalog, e.g. `Thing Category`.
  std::string_view display;
  std::optional<TermId> parent;
  std::vector<std::string_view> synonyms;
  std::string_view definition;
  std::vector<std::string_view> notes;

  bool operator==(const TermSpec&) const = default;
};

struct PropertySpec {
  TermId owner;
  /// Snake-case machine key, e.g. `structural_description`.
  std::string_view key;
  std::string_view display;
  std::string_view definition;

  bool operator==(const PropertySpec&) const = default;
};

enum class Axiom : std::uint8_t { A1, A2, A3 };

enum class CardinalitySeverity : std::uint8_t { Error, Warning };

/// Bounds on the target end; `max == nullopt` means unbounded.
struct Multiplicity {
  unsigned min = 0;
  std::optional<unsigned> max;

  bool operator==(const Multiplicity&) const = default;
};

enum class RelationshipId : std::uint8_t {
  ActsUpon,
  BelongsTo,
  DealsWithParticulars,
  DealsWithUniversals,
  Defines,
  Enables,
  Generalizes,
  InteractsWithOther,
  IsSeenAsOther,
  RelatesWithThing,
  RelatesWithCategory,
  RelatesWithAssertion,
};

inline constexpr std::size_t kRelationshipCount = 12;

struct RelationshipSpec {
  RelationshipId id;
  /// Display name, e.g. `acts upon`.
  std::string_view name;
  /// Identifier used as a relation `kind`, e.g. `actsUpon`.
  std::string_view key;
  TermId domain;
  TermId range;
  std::optional<Multiplicity> multiplicity;
  CardinalitySeverity cardinality_severity = CardinalitySeverity::Error;
  std::vector<Axiom> axioms;
  std::string_view definition;

  bool operator==(const RelationshipSpec&) const = default;
};

/// Catalog order follows the terms table.
std::span<const TermSpec> all_term_specs();
std::span<const PropertySpec> all_property_specs();
std::span<const RelationshipSpec> all_relationship_specs();

const TermSpec& term_spec(TermId id);
const RelationshipSpec& relationship_spec(RelationshipId id);

/// True iff `a == b` or `b` lies on `a`'s parent chain.
bool is_descendant(TermId a, TermId b);
RootKind root_kind(TermId id);
TermId root_term(RootKind kind);

std::optional<TermId> find_term(std::string_view key);
std::optional<RelationshipId> find_relationship(std::string_view key);
/// Property specs applicable to `term`, i.e. those owned by its taxonomy root.
std::vector<PropertySpec> properties_of(TermId term);
/// True iff `key` is one of the seven distinct property machine keys.
bool is_property_key(std::string_view key);

std::string_view to_string(RootKind kind);
std::string_view to_string(Axiom axiom);

}  // namespace ontoarch::metamodel
