#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontoarch/diagnostic.hpp"
#include "ontoarch/model.hpp"

namespace ontoarch::validator {

/// A rule breach with enough context to re-derive it by hand.
struct Violation {
  RuleId rule;
  std::string code;
  std::string message;
  /// First span is the primary location.
  std::vector<SourceSpan> spans;
  /// The falsifying ground tuple or declaration, e.g. `enables(t1.p1, t2.w2)`.
  std::string witness;
  /// Module the violation is attributed to, when it concerns a module declaration.
  std::optional<std::string> module;
  /// Overrides the catalog anchor when a more specific wording applies.
  std::optional<std::string> anchor;

  bool operator==(const Violation&) const = default;
};

/// Guidelines #1/#2 and import placement: E201, E202, E203.
std::vector<Violation> check_architecture(const model::ResolvedSuite& suite);

/// Rule #1, module by module: E211, E212, E213.
std::vector<Violation> check_rule1(const model::ResolvedSuite& suite);

/// Rule #2. For each connected component of same-level modules, the
/// Rule #1 and relationship checks are re-run over the merged view. Findings
/// already visible per module are returned unchanged; findings that only the
/// joint view exposes are returned as E221.
std::vector<Violation> check_rule2(const model::ResolvedSuite& suite);

/// Rule #3 over individuals and world thing typing: E301, E302, E303.
std::vector<Violation> check_rule3(const model::ResolvedSuite& suite);

/// Axioms A1-A3 over one world, by owner comparison per edge: E311, E312, E313.
std::vector<Violation> check_axioms(const model::ResolvedWorld& world);

/// Axioms A1-A3 by enumerating every quantifier instantiation. Independent of
/// check_axioms and intended as its test oracle.
std::vector<Violation> oracle_check_axioms(const model::ResolvedWorld& world);

/// Relation endpoints against foundational domain/range (E231), world fact
/// typing (E232, E233, E234) and `acts upon` cardinality (W301).
std::vector<Violation> check_relationship_conformance(const model::ResolvedSuite& suite);

/// Attribute schema (W201, W202) and scope facets (E204).
std::vector<Violation> check_property_conformance(const model::ResolvedSuite& suite);

/// Components of same-level user modules linked by imports or by lateral
/// references in relations, each sorted, in order of their smallest module index.
std::vector<std::vector<int>> import_components(const model::ResolvedSuite& suite);

/// Every check above plus the axioms of every world, deduplicated and sorted.
std::vector<Violation> check_all(const model::ResolvedSuite& suite);

/// Sort by (file, span, code), then witness.
void sort_violations(std::vector<Violation>& violations);

Diagnostic to_diagnostic(const Violation& violation);

}  // namespace ontoarch::validator
