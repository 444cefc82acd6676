// Axioms A1-A3. Ownership (`partOf`) is functional: every property and power
// node is declared inside exactly one thing, so each axiom reduces to an owner
// comparison on the edge itself.

#include "validator_internal.hpp"

namespace ontoarch::validator {

namespace detail {

Violation axiom_violation(const model::ResolvedWorld& world, std::string_view code,
                          std::size_t fact, std::size_t subject_owner, std::size_t object_owner) {
  const auto& f = world.decl->facts[fact];
  const std::string witness = std::string(model::to_string(f.predicate)) + "(" +
                              f.subject.str() + ", " + f.object.str() + ")";
  const std::string& a = world.thing_id(subject_owner);
  const std::string& b = world.thing_id(object_owner);
  Violation v;
  v.code = std::string(code);
  v.spans = {f.span};
  v.witness = witness;
  if (code == "E311") {
    v.rule = RuleId::A1;
    v.message = "property '" + f.subject.str() + "' of '" + a + "' enables power '" +
                f.object.str() + "' of '" + b + "'; a property enables only its own thing's powers";
  } else if (code == "E312") {
    v.rule = RuleId::A2;
    v.message = "power '" + f.subject.str() + "' of '" + a + "' acts upon property '" +
                f.object.str() + "' of '" + b + "'; a power acts only upon its own thing's properties";
  } else {
    v.rule = RuleId::A3;
    v.message = "power '" + f.subject.str() + "' of '" + a +
                "' interacts with its own thing; a power interacts only with other things";
  }
  return v;
}

}  // namespace detail

std::vector<Violation> check_axioms(const model::ResolvedWorld& world) {
  std::vector<Violation> out;
  for (const auto& edge : world.enables) {
    if (edge.from.thing != edge.to.thing) {
      out.push_back(detail::axiom_violation(world, "E311", edge.fact, edge.from.thing, edge.to.thing));
    }
  }
  for (const auto& edge : world.acts_upon) {
    if (edge.from.thing != edge.to.thing) {
      out.push_back(detail::axiom_violation(world, "E312", edge.fact, edge.from.thing, edge.to.thing));
    }
  }
  for (const auto& edge : world.interacts) {
    if (edge.from.thing == edge.to) {
      out.push_back(detail::axiom_violation(world, "E313", edge.fact, edge.from.thing, edge.to));
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace ontoarch::validator
