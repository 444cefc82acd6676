#pragma once

// Helpers shared by the validator translation units.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontoarch/model.hpp"
#include "ontoarch/validator.hpp"

namespace ontoarch::validator::detail {

/// Where a relation's `kind` chain leads when followed within a view.
struct KindChain {
  enum class Outcome {
    /// Reached a foundational relationship.
    Foundational,
    /// Left the view through a same-level module outside it.
    Opaque,
    /// The relation's own `kind` names a term.
    DeadEnd,
    /// The relation lies on a `kind` cycle.
    Cycle,
    /// Something further up the chain is already broken or unresolved.
    Broken,
  } outcome = Outcome::Broken;
  metamodel::RelationshipId relationship = metamodel::RelationshipId::RelatesWithThing;
};

/// Follows the `kind` chain of `module.relations[index]`. Modules at the
/// origin's level are followed only when listed in `view` (sorted).
KindChain follow_kind(const model::ResolvedSuite& suite, int module, std::size_t index,
                      std::span<const int> view);

/// Rule #1 findings for one module as seen from `view`.
std::vector<Violation> rule1_for(const model::ResolvedSuite& suite, int module,
                                 std::span<const int> view);

/// E231 findings for one module's relation declarations as seen from `view`.
std::vector<Violation> relation_decls_for(const model::ResolvedSuite& suite, int module,
                                          std::span<const int> view);

/// True iff `term` may stand where `required` is expected.
bool conforms(const model::ResolvedSuite& suite, const model::TermKey& term,
              metamodel::TermId required);

/// Span of the fact that produced an edge.
const SourceSpan& fact_span(const model::ResolvedWorld& world, std::size_t fact);

/// Builds the violation for axiom `code` (E311/E312/E313) raised by `fact`.
Violation axiom_violation(const model::ResolvedWorld& world, std::string_view code,
                          std::size_t fact, std::size_t subject_owner, std::size_t object_owner);

std::string describe_root(const model::ResolvedSuite& suite, const model::TermKey& term);

}  // namespace ontoarch::validator::detail
