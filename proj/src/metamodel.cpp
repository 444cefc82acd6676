#include "ontoarch/metamodel.hpp"

#include <algorithm>

namespace ontoarch::metamodel {
namespace {

using T = TermId;

std::vector<TermSpec> build_terms() {
  std::vector<TermSpec> terms;
  terms.reserve(kTermCount);

  terms.push_back(TermSpec{
      T::Thing,
      "Thing",
      "Thing",
      std::nullopt,
      {"Particular Thing", "Object", "Entity", "Instance", "Individual"},
      "Class or type of a perceivable or conceivable object, or its individuals of a given "
      "particular world.",
      {
          "A Thing as a class represents and implies unique individuals or instances, not a "
          "universal category. Therefore, a particular Thing results in instances, whereas a "
          "universal Thing (i.e., a Thing Category) does not result in instances, at least with "
          "the valuable meaning of individual in a given particular world.",
          "A Thing is not a particular Thing without its Properties and its Powers, so “things, "
          "properties and powers all emerge simultaneously to form a unity” ... “Things, "
          "properties and powers are necessary and sufficient for the existence of this unity” "
          "[1].",
          "A Thing cannot exist or be in spatiotemporal isolation from other Things in a given "
          "particular world. In other words, a target Thing is always surrounded by other "
          "context Things, in any particular situation.",
          "In contrast to a particular Thing, that is, a particular class or subclass, the "
          "individuals of a class or subclass are not instantiated by further entities.",
          "A subclass of a particular Thing as a particular class can be represented at any "
          "lower level of the ontological architecture (depicted in Figure 2) except at the "
          "Instance Ontological Level, where only particular individuals are or exist. See Rule "
          "#3, in the “Guidelines and Rules” Section.",
      },
  });
  terms.push_back(TermSpec{
      T::Property,
      "Property",
      "Property",
      std::nullopt,
      {},
      "It refers to the intrinsic constitution, structure, or parts of a particular Thing.",
      {
          "A Property is one member of the triad that conforms the unique identity named Thing.",
          "A Property, which is one member of the triad that conforms a particular Thing can be "
          "seen as another particular Thing in another situation with its own Properties and "
          "Powers.",
      },
  });
  terms.push_back(TermSpec{
      T::Power,
      "Power",
      "Power",
      std::nullopt,
      {},
      "It refers to what a particular Thing does, can do or behave.",
      {
          "A Power is one member of the triad that conforms the unique identity named Thing.",
          "According to Fleetwood “Powers are the way of acting of a things’ properties; powers "
          "are a things’ properties in action” [1]. Also, he states that “Things have "
          "properties, these properties instantiate [...] acting powers, and this ensemble of "
          "things, properties and powers cause any events that might occur”.",
      },
  });
  terms.push_back(TermSpec{
      T::ThingCategory,
      "ThingCategory",
      "Thing Category",
      std::nullopt,
      {"Entity Category", "Universal Thing"},
      "Class or type that represents a category that predicates on particular Things conceived "
      "by a human being's mind for abstraction and classification purposes.",
      {
          "A Thing Category does not exist, is or can be in a given particular world as a Thing "
          "does. Conversely, it may only be formed or developed mentally by human beings.",
          "A Thing Category as universal does not result in instances –at least with the "
          "valuable meaning of individual– but rather can be represented by more specific "
          "sub-categories of universal Things.",
      },
  });
  terms.push_back(TermSpec{
      T::Assertion,
      "Assertion",
      "Assertion",
      std::nullopt,
      {"Human Expression"},
      "Class or type that represents a positive and explicit statement or expression that "
      "somebody makes about something concerning Things, or their categories, based on "
      "thoughts, perceptions, facts, intuitions, intentions and/or beliefs, conceived with an "
      "attempt to provide current or subsequent evidence.",
      {
          "The part of the previous definition that indicates “...about something concerning "
          "Things...” means, for example, about the substance, structure, behavior, relations, "
          "situations, quantity, quality, among other aspects of Things.",
          "The part of the previous definition that indicates “...statement or expression that "
          "somebody makes...” means that a concrete human being –as a particular Thing– defines "
          "or conceives Assertions.",
          "In order to be valuable, actionable and ultimately useful for any science, an "
          "Assertion should to a great extent be verified and validated by theoretical and/or "
          "empirical evidence.",
          "An Assertion and its instances can be represented and modeled by means of informal, "
          "semiformal or formal expressions and specification languages.",
          "ISO 21838-1 [4] defines the term “expression” as “word or group of words or "
          "corresponding symbols that can be used in making an assertion”.",
      },
  });
  terms.push_back(TermSpec{
      T::AssertionOnParticulars,
      "AssertionOnParticulars",
      "Assertion on Particulars",
      T::Assertion,
      {},
      "It is an Assertion that somebody makes about something of one or more particular Things.",
      {},
  });
  terms.push_back(TermSpec{
      T::AssertionOnUniversals,
      "AssertionOnUniversals",
      "Assertion on Universals",
      T::Assertion,
      {},
      "It is an Assertion that somebody makes about something of one or more Thing Categories.",
      {},
  });
  terms.push_back(TermSpec{
      T::ActionAssertion,
      "ActionAssertion",
      "Action-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the interaction and happening of Things since acting "
      "Powers cause any events that might occur.",
      {
          "Particular Things can interact to each other, just as a Thing can act upon itself. "
          "See axioms A2 and A3.",
          "Interrelated Things interact to each other conforming particular situations, i.e., "
          "specific circumstances, episodes and events that are of interest for an intended "
          "agent.",
          "Interactions among Things both target entities and context entities in particular "
          "situations can be abstracted in generic situations.",
      },
  });
  terms.push_back(TermSpec{
      T::AllotmentAssertion,
      "AllotmentAssertion",
      "Allotment-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the assignment of something, which implies the assignment "
      "of a Thing to itself or to other Things.",
      {
          "For example, a particular resource (method, tool, person, etc.) is assigned to a task "
          "in a particular situation. Or, the specific amount of time a person gives him/herself "
          "to do an assignment. Or, the specific amount of time a professor gives their students "
          "to take a test.",
      },
  });
  terms.push_back(TermSpec{
      T::BehaviorAssertion,
      "BehaviorAssertion",
      "Behavior-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the Power, which represents the capability and "
      "responsibility that a particular Thing has and/or exhibits.",
      {"Behavior can be specified for particulars and can also be generalized for universals."},
  });
  terms.push_back(TermSpec{
      T::ConstraintAssertion,
      "ConstraintAssertion",
      "Constraint-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the specification of restrictions or conditions imposed "
      "on Things, Properties, relationships, interactions or Thing Categories that must be "
      "satisfied or evaluated to true in given situations or events.",
      {"Constraint-related Assertions can be specified for both particulars and universals."},
  });
  terms.push_back(TermSpec{
      T::IntentionAssertion,
      "IntentionAssertion",
      "Intention-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the aim to be achieved by somebody.",
      {
          "The statement of an Intention-related Assertion considers the propositional content "
          "of a goal purpose in a given situation and time frame.",
          "Intention-related Assertions can be specified for both particulars and universals.",
      },
  });
  terms.push_back(TermSpec{
      T::QualityAssertion,
      "QualityAssertion",
      "Quality-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the requirements and constraints to be specified "
      "regarding the quality (distinguishing characteristic, attribute, or statement item) for "
      "a Thing and possibly related entities, which may be evaluable.",
      {
          "Quality (cost, etc.) requirements and constraints can be specified for a particular "
          "Thing in terms of its Properties or Powers, or in terms of both as a whole.",
          "Quality requirements and constraints can be specified for particulars and can also "
          "be abstracted or generalized for universals.",
      },
  });
  terms.push_back(TermSpec{
      T::QuantityAssertion,
      "QuantityAssertion",
      "Quantity-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the countable, measurable and evaluable aspect of a Thing "
      "and possibly related entities, which can be specified by means of symbolic or numerical "
      "expressions.",
      {
          "Qualities of Things can be measured, evaluated and analyzed by specifying "
          "Quantity-related Assertions and strategies as resources.",
          "A quantity or a relationship between quantities can be formalized, for instance, by "
          "mathematical, statistical or logical expressions.",
          "Quantity-related Assertions can be specified for both particulars and universals.",
      },
  });
  terms.push_back(TermSpec{
      T::RelationAssertion,
      "RelationAssertion",
      "Relation-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to logical or natural associations between two or more "
      "Things and their categories.",
      {
          "A Thing cannot exist or be in spatiotemporal isolation from other Things in a given "
          "particular world. Therefore, a Thing is related to other Things.",
          "Relationships can be specified for particular Things (between classes or between "
          "instances and classes, or between instances), and can also be represented for Thing "
          "Categories.",
      },
  });
  terms.push_back(TermSpec{
      T::SituationAssertion,
      "SituationAssertion",
      "Situation-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the combination of circumstances, episodes, and "
      "relationships/events between target Things and context entities that surround them, or "
      "their categories, which is of interest or meaningful to be represented or modeled for "
      "an intended agent.",
      {
          "A Situation can be represented statically or dynamically depending on the intention "
          "of the agent.",
          "Situations can be specified for particulars and can also be generalized for "
          "universals.",
      },
  });
  terms.push_back(TermSpec{
      T::StructureAssertion,
      "StructureAssertion",
      "Structure-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the Property, which represents the intrinsic "
      "constitution, structure, or parts of a particular Thing.",
      {"Structural aspects can be specified for particulars and can also be abstracted for "
       "universals."},
  });
  terms.push_back(TermSpec{
      T::SubstanceAssertion,
      "SubstanceAssertion",
      "Substance-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the ontological significance and essential import of a "
      "Thing as a whole entity, or of a set of Things.",
      {"Substance aspects can be specified for particulars and can also be abstracted for "
       "universals."},
  });
  terms.push_back(TermSpec{
      T::TimeAssertion,
      "TimeAssertion",
      "Time-related Assertion",
      T::Assertion,
      {},
      "It is an Assertion related to the time as a Thing or its Properties or Power, which can "
      "imply specifying temporal boundaries or limits, among other aspects, for different "
      "situations and events.",
      {"Time aspects can be specified for particulars and can also be abstracted for "
       "universals."},
  });
  return terms;
}

std::vector<PropertySpec> build_properties() {
  return {
      {T::Thing, "name", "name", "Label or name that identifies the particular Thing."},
      {T::Thing, "description", "description",
       "An unambiguous textual statement describing a particular Thing."},
      {T::Property, "name", "name", "Label or name that identifies the Property of a Thing."},
      {T::Property, "structural_description", "structural description",
       "An unambiguous textual statement describing the Property of a Thing in terms of its "
       "constituents, structure, or parts."},
      {T::Power, "name", "name", "Label or name that identifies the Power of a Thing."},
      {T::Power, "behavioral_description", "behavioral description",
       "An unambiguous textual statement describing the Power of a Thing in terms of "
       "responsibilities, operations or actions."},
      {T::ThingCategory, "descriptive_statement", "descriptive statement",
       "An unambiguous textual description of the category purpose as universal."},
      {T::Assertion, "name", "name", "Label or name that identifies the Assertion."},
      {T::Assertion, "positive_statement", "positive statement",
       "An explicit declaration of the Assertion to be defined and expressed."},
      {T::Assertion, "specification", "specification",
       "The explicit and detailed representation or model of the Assertion in a given "
       "language."},
  };
}

std::vector<RelationshipSpec> build_relationships() {
  using R = RelationshipId;
  const Multiplicity zero_or_more{0, std::nullopt};
  const Multiplicity one_or_more{1, std::nullopt};
  return {
      {R::ActsUpon, "acts upon", "actsUpon", T::Power, T::Property, one_or_more,
       CardinalitySeverity::Warning, {Axiom::A2},
       "A Power acts upon one or more Properties, so it can look at them or update the status "
       "of the Thing’s properties."},
      {R::BelongsTo, "belongs to", "belongsTo", T::Thing, T::ThingCategory, zero_or_more,
       CardinalitySeverity::Error, {},
       "Particulars Things may belong to none or more Thing Categories."},
      {R::DealsWithParticulars, "deals with particulars", "dealsWithParticulars",
       T::AssertionOnParticulars, T::Thing, std::nullopt, CardinalitySeverity::Error, {},
       "An Assertion on Particulars deals with particular Things, both classes/subtypes and "
       "instances."},
      {R::DealsWithUniversals, "deals with universals", "dealsWithUniversals",
       T::AssertionOnUniversals, T::ThingCategory, std::nullopt, CardinalitySeverity::Error, {},
       "An Assertion on Universals deals with universal Things, which are Ccategories."},
      {R::Defines, "defines", "defines", T::Thing, T::Assertion, zero_or_more,
       CardinalitySeverity::Error, {}, "A Thing defines none or many Assertions."},
      {R::Enables, "enables", "enables", T::Property, T::Power, std::nullopt,
       CardinalitySeverity::Error, {Axiom::A1},
       "A Property enables the Powers of a particular Thing."},
      {R::Generalizes, "generalizes", "generalizes", T::AssertionOnUniversals,
       T::AssertionOnParticulars, zero_or_more, CardinalitySeverity::Error, {},
       "An Assertion on Universals abstracts none or more Assertions on Particulars."},
      {R::InteractsWithOther, "interacts with other", "interactsWithOther", T::Power, T::Thing,
       std::nullopt, CardinalitySeverity::Error, {Axiom::A3},
       "Due to the Power of a Thing, particular Things interact with each other."},
      {R::IsSeenAsOther, "is seen as other", "isSeenAsOther", T::Property, T::Thing,
       std::nullopt, CardinalitySeverity::Warning, {},
       "A Property most of the time is seen as another Thing."},
      {R::RelatesWithThing, "relates with", "relatesWithThing", T::Thing, T::Thing,
       std::nullopt, CardinalitySeverity::Error, {},
       "A Thing relates to other particular Things."},
      {R::RelatesWithCategory, "relates with", "relatesWithCategory", T::ThingCategory,
       T::ThingCategory, std::nullopt, CardinalitySeverity::Error, {},
       "A Thing Category may be related to other universal Things."},
      {R::RelatesWithAssertion, "relates with", "relatesWithAssertion", T::Assertion,
       T::Assertion, std::nullopt, CardinalitySeverity::Error, {},
       "An Assertion may be related to other Assertions."},
  };
}

}  // namespace

std::span<const TermSpec> all_term_specs() {
  static const std::vector<TermSpec> terms = build_terms();
  return terms;
}

std::span<const PropertySpec> all_property_specs() {
  static const std::vector<PropertySpec> properties = build_properties();
  return properties;
}

std::span<const RelationshipSpec> all_relationship_specs() {
  static const std::vector<RelationshipSpec> relationships = build_relationships();
  return relationships;
}

const TermSpec& term_spec(TermId id) { return all_term_specs()[static_cast<std::size_t>(id)]; }

const RelationshipSpec& relationship_spec(RelationshipId id) {
  return all_relationship_specs()[static_cast<std::size_t>(id)];
}

bool is_descendant(TermId a, TermId b) {
  std::optional<TermId> cursor = a;
  while (cursor) {
    if (*cursor == b) return true;
    cursor = term_spec(*cursor).parent;
  }
  return false;
}

RootKind root_kind(TermId id) {
  TermId cursor = id;
  while (const auto parent = term_spec(cursor).parent) cursor = *parent;
  switch (cursor) {
    case T::Thing:
      return RootKind::Thing;
    case T::Property:
      return RootKind::Property;
    case T::Power:
      return RootKind::Power;
    case T::ThingCategory:
      return RootKind::ThingCategory;
    default:
      return RootKind::Assertion;
  }
}

TermId root_term(RootKind kind) {
  switch (kind) {
    case RootKind::Thing:
      return T::Thing;
    case RootKind::Property:
      return T::Property;
    case RootKind::Power:
      return T::Power;
    case RootKind::ThingCategory:
      return T::ThingCategory;
    case RootKind::Assertion:
      break;
  }
  return T::Assertion;
}

std::optional<TermId> find_term(std::string_view key) {
  for (const auto& spec : all_term_specs()) {
    if (spec.key == key) return spec.id;
  }
  return std::nullopt;
}

std::optional<RelationshipId> find_relationship(std::string_view key) {
  for (const auto& spec : all_relationship_specs()) {
    if (spec.key == key) return spec.id;
  }
  return std::nullopt;
}

std::vector<PropertySpec> properties_of(TermId term) {
  const TermId owner = root_term(root_kind(term));
  std::vector<PropertySpec> out;
  for (const auto& spec : all_property_specs()) {
    if (spec.owner == owner) out.push_back(spec);
  }
  return out;
}

bool is_property_key(std::string_view key) {
  const auto specs = all_property_specs();
  return std::any_of(specs.begin(), specs.end(),
                     [&](const PropertySpec& spec) { return spec.key == key; });
}

std::string_view to_string(RootKind kind) { return term_spec(root_term(kind)).key; }

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1:
      return "A1";
    case Axiom::A2:
      return "A2";
    case Axiom::A3:
      break;
  }
  return "A3";
}

}  // namespace ontoarch::metamodel
