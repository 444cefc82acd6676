// Brute-force evaluation of axioms A1-A3 as quantified formulas over a finite
// model. Nodes are renumbered globally and `partOf` is materialized as a
// relation, so nothing here relies on the owner-equality shortcut.

#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "validator_internal.hpp"

namespace ontoarch::validator {

std::vector<Violation> oracle_check_axioms(const model::ResolvedWorld& world) {
  const std::size_t thing_count = world.decl->things.size();

  // Universe of property and power nodes with global ids.
  std::map<model::PartRef, std::size_t> property_id;
  std::map<model::PartRef, std::size_t> power_id;
  for (std::size_t t = 0; t < thing_count; ++t) {
    const auto& node = world.decl->things[t];
    for (std::size_t i = 0; i < node.properties.size(); ++i) {
      property_id.emplace(model::PartRef{t, i}, property_id.size());
    }
    for (std::size_t i = 0; i < node.powers.size(); ++i) {
      power_id.emplace(model::PartRef{t, i}, power_id.size());
    }
  }

  // partOf(x, t) as sets of (node, thing).
  std::set<std::pair<std::size_t, std::size_t>> property_part_of;
  std::set<std::pair<std::size_t, std::size_t>> power_part_of;
  for (const auto& [ref, id] : property_id) property_part_of.emplace(id, ref.thing);
  for (const auto& [ref, id] : power_id) power_part_of.emplace(id, ref.thing);

  // Ground binary relations, each pair mapped to the facts asserting it.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> enables;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> acts_upon;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> interacts;
  for (const auto& e : world.enables) {
    enables[{property_id.at(e.from), power_id.at(e.to)}].push_back(e.fact);
  }
  for (const auto& e : world.acts_upon) {
    acts_upon[{power_id.at(e.from), property_id.at(e.to)}].push_back(e.fact);
  }
  for (const auto& e : world.interacts) interacts[{power_id.at(e.from), e.to}].push_back(e.fact);

  const auto owner_of = [](const std::set<std::pair<std::size_t, std::size_t>>& part_of,
                           std::size_t node) {
    for (const auto& [n, t] : part_of) {
      if (n == node) return t;
    }
    return std::size_t{0};
  };

  // (code, fact) pairs already reported; several instantiations may falsify one fact.
  std::set<std::pair<std::string, std::size_t>> reported;
  std::vector<Violation> out;
  const auto report = [&](std::string_view code, std::size_t fact, std::size_t a, std::size_t b) {
    if (reported.emplace(std::string(code), fact).second) {
      out.push_back(detail::axiom_violation(world, code, fact, a, b));
    }
  };

  for (std::size_t t = 0; t < thing_count; ++t) {
    for (std::size_t prop = 0; prop < property_id.size(); ++prop) {
      for (std::size_t pow = 0; pow < power_id.size(); ++pow) {
        // A1: partOf(prop, t) ∧ enables(prop, pow) → partOf(pow, t)
        if (property_part_of.count({prop, t}) != 0) {
          if (const auto it = enables.find({prop, pow});
              it != enables.end() && power_part_of.count({pow, t}) == 0) {
            for (std::size_t fact : it->second) {
              report("E311", fact, t, owner_of(power_part_of, pow));
            }
          }
        }
        // A2: partOf(pow, t) ∧ actsUpon(pow, prop) → partOf(prop, t)
        if (power_part_of.count({pow, t}) != 0) {
          if (const auto it = acts_upon.find({pow, prop});
              it != acts_upon.end() && property_part_of.count({prop, t}) == 0) {
            for (std::size_t fact : it->second) {
              report("E312", fact, t, owner_of(property_part_of, prop));
            }
          }
        }
      }
    }
    // A3: partOf(pow, t) → ¬interactsWithOther(pow, t)
    for (std::size_t pow = 0; pow < power_id.size(); ++pow) {
      if (power_part_of.count({pow, t}) == 0) continue;
      if (const auto it = interacts.find({pow, t}); it != interacts.end()) {
        for (std::size_t fact : it->second) report("E313", fact, t, t);
      }
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace ontoarch::validator
