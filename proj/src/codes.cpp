#include "ontoarch/codes.hpp"

#include <algorithm>
#include <array>

namespace ontoarch {
namespace {

using R = RuleId;

constexpr std::array kCodes = {
    // Front end.
    CodeInfo{"E001", std::nullopt, "invalid character", "", "term Pro¢ess"},
    CodeInfo{"E002", std::nullopt, "unexpected token", "", "ontology A at CO { term }"},
    CodeInfo{"E003", std::nullopt, "unknown level name", "", "ontology X at XX { }"},
    CodeInfo{"E004", std::nullopt, "unknown fact predicate in world", "",
             "world w { thing t { } owns(t, t) }"},
    // Resolution.
    CodeInfo{"E101", std::nullopt, "unresolved or ambiguous reference", "",
             "term X enriches ThingFO.Entityy"},
    CodeInfo{"E102", std::nullopt, "duplicate definition", "",
             "ontology A at CO { term X enriches ThingFO.Thing term X enriches ThingFO.Thing }"},
    CodeInfo{"E103", std::nullopt, "import cycle", "",
             "ontology A at CO { imports B }  ontology B at CO { imports A }"},
    CodeInfo{"E104", std::nullopt, "module imports itself", "", "ontology A at CO { imports A }"},
    CodeInfo{"E105", std::nullopt, "enrichment cycle", "",
             "ontology A at CO { term X enriches B.Y }  ontology B at CO { term Y enriches A.X }"},
    CodeInfo{"E106", std::nullopt, "fact argument of the wrong sort", "",
             "enables(t1.w1, t1.p1) where w1 is a power"},
    // Architecture and relationship conformance.
    CodeInfo{"E201", R::G2, "user module at the foundational level",
             "At the Foundational Ontological Level of the ontological architecture, in order to "
             "comply with the principle of completeness and conciseness along with the principle "
             "of delegation of concerns, only one foundational ontology must be found.",
             "ontology MyFO at FO { }"},
    CodeInfo{"E202", R::R2, "import crosses levels",
             "Ontologies of the same level –except at the FO level– can be related to each "
             "other",
             "ontology A at CO { imports SomeTDO }"},
    CodeInfo{"E203", R::R2, "import into or out of the foundational level",
             "Ontologies at the same level can be related to each other, except at the "
             "foundational level, where only the ThingFO ontology is found.",
             "ontology A at CO { imports ThingFO }"},
    CodeInfo{"E204", R::PropConformance, "scope facet not applicable to the term",
             "It is an Assertion that somebody makes about something of one or more particular "
             "Things.",
             "term P enriches ThingFO.Thing scope particulars"},
    CodeInfo{"E211", R::R1, "enrichment does not target the immediately higher level",
             "Any new ontology located at level CO, or TDO, or LDO of the ontological "
             "architecture depicted in Figure 2 must guarantee a correspondence of its elements "
             "with the elements defined at the immediately higher level.",
             "ontology D at TDO { term X enriches ThingFO.Thing }"},
    CodeInfo{"E212", R::R1, "relation kind chain does not end at a foundational relationship",
             "This allows the terms and relationships of the lower-level ontologies to be "
             "semantically enriched by the terms and relationships of the higher-level "
             "ontologies.",
             "relation r from A.X to A.Y kind ThingFO.Thing"},
    CodeInfo{"E213", R::R1, "term has no enrichment link",
             "must guarantee a correspondence of its elements with the elements defined at the "
             "immediately higher level",
             "a TermDef built programmatically without `enriches`"},
    CodeInfo{"E221", R::R2, "violation that appears only in the joint definition of related modules",
             "Ontologies of the same level –except at the FO level– can be related to each "
             "other, but it must be guaranteed that their joint definition (as a whole) does "
             "not violate the principles of the next higher level.",
             "A.r kind B.s and B.s kind A.r, with A and B related at CO"},
    CodeInfo{"E231", R::RelConformance, "relation endpoints do not match the relationship's domain or range",
             "Thing Component – ThingFO v1.3’s Non-taxonomic Relationships",
             "relation r from P.Situation to P.GenericSituation kind ThingFO.generalizes"},
    CodeInfo{"E232", R::RelConformance, "belongsTo target is not a Thing Category",
             "Particulars Things may belong to none or more Thing Categories.",
             "belongsTo(t1, ProcessCO.Process)"},
    CodeInfo{"E233", R::RelConformance, "defines target is not an Assertion",
             "A Thing defines none or many Assertions.", "defines(t1, ProcessCO.Process)"},
    CodeInfo{"E234", R::RelConformance, "relatesWith relates a thing to itself",
             "A Thing relates to other particular Things.", "relatesWith(t1, t1)"},
    // Instances and axioms.
    CodeInfo{"E301", R::R3, "individual of a Thing Category",
             "a particular Thing results in instances, whereas a universal Thing (i.e., a Thing "
             "Category) does not result in instances",
             "individual c1 : ProcessCO.ProductCategory"},
    CodeInfo{"E302", R::R3, "standalone individual of a Property or Power",
             "At the Instance Ontological Level, only individuals of particular Things can be "
             "found.",
             "individual p1 : ThingFO.Property"},
    CodeInfo{"E303", R::R3, "world thing typed by a term that is not a particular Thing",
             "At the Instance Ontological Level, only individuals of particular Things can be "
             "found.",
             "thing t1 : ProcessCO.ProductCategory { }"},
    CodeInfo{"E311", R::A1, "property enables a power of another thing",
             "All Property of a Thing enables only its Powers. ∀t, ∀prop, ∀pow: [Thing(t) ∧ "
             "Property(prop) ∧ partOf(prop, t) ∧ Power(pow) ∧ enables(prop, pow) → partOf(pow, "
             "t)]",
             "enables(t1.p1, t2.w2)"},
    CodeInfo{"E312", R::A2, "power acts upon a property of another thing",
             "The Power of a Thing only acts upon its Properties. ∀t, ∀pow, ∀prop: [Thing(t) ∧ "
             "Power(pow) ∧ partOf(pow, t) ∧ Property(prop) ∧ actsUpon(pow, prop) → partOf(prop, "
             "t)]",
             "actsUpon(t1.w1, t2.p2)"},
    CodeInfo{"E313", R::A3, "power interacts with its own thing",
             "The Power of a Thing only interacts with other Things. ∀t, ∀pow: [Thing(t) ∧ "
             "Power(pow) ∧ partOf(pow, t) → ¬interactsWithOther(pow, t)]",
             "interacts(t1.w1, t1)"},
    // Warnings.
    CodeInfo{"W201", R::PropConformance, "attribute is not a property of the term's root",
             "Thing Component – ThingFO v1.3’s Properties or Attributes",
             "term P enriches ThingFO.Thing { descriptive_statement \"...\" }"},
    CodeInfo{"W202", R::PropConformance, "Thing-rooted term lacks a description",
             "An unambiguous textual statement describing a particular Thing.",
             "term P enriches ThingFO.Thing"},
    CodeInfo{"W301", R::Cardinality, "power acts upon no property",
             "A Power acts upon one or more Properties, so it can look at them or update the "
             "status of the Thing’s properties.",
             "thing t1 { power w1; } with actsUpon facts elsewhere in the world"},
};

}  // namespace

std::span<const CodeInfo> all_codes() { return kCodes; }

const CodeInfo* find_code(std::string_view code) {
  const auto it = std::find_if(kCodes.begin(), kCodes.end(),
                               [&](const CodeInfo& info) { return info.code == code; });
  return it == kCodes.end() ? nullptr : &*it;
}

}  // namespace ontoarch
