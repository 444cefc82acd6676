#include <array>
#include <sstream>

#include "ontoarch/cli.hpp"
#include "ontoarch/codes.hpp"

namespace ontoarch::cli {
namespace {

namespace mm = ontoarch::metamodel;

struct RuleText {
  std::string_view id;
  std::string_view title;
  std::string_view wording;
  std::string_view codes;
};

constexpr std::array kRules = {
    RuleText{"G1", "Guideline #1",
             "Any ontology conceptualization/formalization developed as an artifact cannot be "
             "conceived in isolation from an explicit specification of a layered ontological "
             "architecture. Therefore, a foundational ontology must be found at the upper or top "
             "level (Foundational Ontological Level in Figure 2, or FO level for short) of the "
             "ontological architecture.",
             "satisfied by the built-in ThingFO module"},
    RuleText{"G2", "Guideline #2",
             "At the Foundational Ontological Level of the ontological architecture, in order to "
             "comply with the principle of completeness and conciseness along with the principle "
             "of delegation of concerns, only one foundational ontology must be found.",
             "E201"},
    RuleText{"R1", "Rule #1",
             "Any new ontology located at level CO, or TDO, or LDO of the ontological "
             "architecture depicted in Figure 2 must guarantee a correspondence of its elements "
             "with the elements defined at the immediately higher level. For example, to "
             "introduce a new ontology at the Core Ontological Level, it must be guaranteed that "
             "its elements have a correspondence with the elements defined at the Foundational "
             "Ontological Level. This allows the terms and relationships of the lower-level "
             "ontologies to be semantically enriched by the terms and relationships of the "
             "higher-level ontologies.",
             "E211, E212, E213"},
    RuleText{"R2", "Rule #2",
             "Ontologies of the same level –except at the FO level– can be related to each "
             "other, but it must be guaranteed that their joint definition (as a whole) does not "
             "violate the principles of the next higher level. This implies that, if a "
             "core-level ontology uses elements from another ontology of the same level, "
             "together both semantic models must guarantee a correct definition with respect to "
             "the foundational-level ontology. This allows the terms and relationships of the "
             "ontologies of the same level to complement each other, maintaining a "
             "correspondence with the definitions of the ontologies of the higher levels.",
             "E202, E203, E221"},
    RuleText{"R3", "Rule #3",
             "At the Instance Ontological Level, only individuals of particular Things can be "
             "found. A Thing like a particular class represented at the foundational level or "
             "any of its subclasses (with the semantics of Thing) appropriately represented at "
             "the lower levels results in instances. Therefore, an individual is an instance of "
             "a particular class at higher levels.",
             "E301, E302, E303"},
    RuleText{"A1", "Axiom A1",
             "All Property of a Thing enables only its Powers.\n"
             "  ∀t, ∀prop, ∀pow: [Thing(t) ∧ Property(prop) ∧ partOf(prop, t) ∧ Power(pow) ∧ "
             "enables(prop, pow) → partOf(pow, t)]",
             "E311"},
    RuleText{"A2", "Axiom A2",
             "The Power of a Thing only acts upon its Properties.\n"
             "  ∀t, ∀pow, ∀prop: [Thing(t) ∧ Power(pow) ∧ partOf(pow, t) ∧ Property(prop) ∧ "
             "actsUpon(pow, prop) → partOf(prop, t)]",
             "E312"},
    RuleText{"A3", "Axiom A3",
             "The Power of a Thing only interacts with other Things.\n"
             "  ∀t, ∀pow: [Thing(t) ∧ Power(pow) ∧ partOf(pow, t) → ¬interactsWithOther(pow, t)]",
             "E313"},
};

void list(std::ostream& os, std::string_view heading, const std::vector<std::string_view>& items) {
  if (items.empty()) return;
  os << heading << ": ";
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
  os << '\n';
}

std::string explain_term(const mm::TermSpec& spec) {
  std::ostringstream os;
  os << spec.display << " [ThingFO." << spec.key << "]\n";
  os << "Root: " << mm::to_string(mm::root_kind(spec.id)) << '\n';
  if (spec.parent) os << "Parent: " << mm::term_spec(*spec.parent).key << '\n';
  list(os, "Synonyms", spec.synonyms);
  os << "\nDefinition:\n  " << spec.definition << '\n';
  if (!spec.notes.empty()) {
    os << "\nNotes:\n";
    for (std::size_t i = 0; i < spec.notes.size(); ++i) {
      os << "  " << (i + 1) << ". " << spec.notes[i] << '\n';
    }
  }
  const auto props = mm::properties_of(spec.id);
  if (!props.empty()) {
    os << "\nProperties (from " << mm::term_spec(props.front().owner).display << "):\n";
    for (const auto& p : props) os << "  " << p.key << ": " << p.definition << '\n';
  }
  return os.str();
}

std::string explain_relationship(const mm::RelationshipSpec& spec) {
  std::ostringstream os;
  os << spec.name << " [ThingFO." << spec.key << "]\n";
  os << "Domain: " << mm::term_spec(spec.domain).display << '\n';
  os << "Range: " << mm::term_spec(spec.range).display << '\n';
  if (spec.multiplicity) {
    os << "Target multiplicity: " << spec.multiplicity->min << ".."
       << (spec.multiplicity->max ? std::to_string(*spec.multiplicity->max) : "*");
    if (spec.cardinality_severity == mm::CardinalitySeverity::Warning) os << " (warning)";
    os << '\n';
  }
  if (!spec.axioms.empty()) {
    os << "Axioms: ";
    for (std::size_t i = 0; i < spec.axioms.size(); ++i) {
      os << (i ? ", " : "") << mm::to_string(spec.axioms[i]);
    }
    os << '\n';
  }
  os << "\nDefinition:\n  " << spec.definition << '\n';
  return os.str();
}

std::string explain_code(const CodeInfo& info) {
  std::ostringstream os;
  os << info.code << ": " << info.title << '\n';
  os << "Severity: " << to_string(severity_of(info.code)) << '\n';
  if (info.rule) os << "Rule: " << to_string(*info.rule) << '\n';
  if (!info.anchor.empty()) os << "\nWording:\n  " << info.anchor << '\n';
  for (const auto& rule : kRules) {
    if (info.rule && rule.id == to_string(*info.rule) && rule.wording != info.anchor) {
      os << "\n" << rule.title << ":\n  " << rule.wording << '\n';
    }
  }
  os << "\nExample:\n  " << info.example << '\n';
  return os.str();
}

std::string explain_rule(const RuleText& rule) {
  std::ostringstream os;
  os << rule.title << " [" << rule.id << "]\n\n  " << rule.wording << "\n\nChecked by: "
     << rule.codes << '\n';
  return os.str();
}

}  // namespace

std::optional<std::string> explain(std::string_view topic) {
  for (const auto& spec : mm::all_term_specs()) {
    if (spec.key == topic || spec.display == topic) return explain_term(spec);
  }
  for (const auto& spec : mm::all_relationship_specs()) {
    if (spec.key == topic) return explain_relationship(spec);
  }
  if (const CodeInfo* info = find_code(topic)) return explain_code(*info);
  for (const auto& rule : kRules) {
    if (rule.id == topic) return explain_rule(rule);
  }
  std::ostringstream os;
  bool found = false;
  for (const auto& p : mm::all_property_specs()) {
    if (p.key != topic) continue;
    if (!found) os << "Property '" << p.key << "'\n";
    found = true;
    os << "  " << mm::term_spec(p.owner).display << ": " << p.definition << '\n';
  }
  if (found) return os.str();
  return std::nullopt;
}

std::string metamodel_counts() {
  return "terms=" + std::to_string(mm::all_term_specs().size()) +
         " properties=" + std::to_string(mm::all_property_specs().size()) +
         " relationships=" + std::to_string(mm::all_relationship_specs().size());
}

}  // namespace ontoarch::cli
