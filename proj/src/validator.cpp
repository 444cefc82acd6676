#include "ontoarch/validator.hpp"

#include <algorithm>
#include <tuple>

#include "validator_internal.hpp"

namespace ontoarch::validator {

void sort_violations(std::vector<Violation>& violations) {
  static const SourceSpan kNone;
  const auto primary = [](const Violation& v) -> const SourceSpan& {
    return v.spans.empty() ? kNone : v.spans.front();
  };
  std::stable_sort(violations.begin(), violations.end(),
                   [&](const Violation& a, const Violation& b) {
                     return std::tie(primary(a), a.code, a.witness, a.message) <
                            std::tie(primary(b), b.code, b.witness, b.message);
                   });
}

std::vector<Violation> check_all(const model::ResolvedSuite& suite) {
  std::vector<Violation> all;
  const auto append = [&](std::vector<Violation> found) {
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  };
  append(check_architecture(suite));
  append(check_rule1(suite));
  append(check_rule2(suite));
  append(check_rule3(suite));
  append(check_relationship_conformance(suite));
  append(check_property_conformance(suite));
  for (const auto& file : suite.instance_files()) {
    for (const auto& world : file.worlds) append(check_axioms(world));
  }
  sort_violations(all);
  // check_rule2 repeats the per-module Rule #1 findings.
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Diagnostic to_diagnostic(const Violation& violation) {
  Diagnostic diag = make_diagnostic(violation.code,
                                    violation.spans.empty() ? SourceSpan{} : violation.spans.front(),
                                    violation.message, violation.witness);
  diag.rule = violation.rule;
  if (violation.anchor) diag.anchor = *violation.anchor;
  return diag;
}

}  // namespace ontoarch::validator
