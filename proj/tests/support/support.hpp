#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ontoarch/model.hpp"
#include "ontoarch/parser.hpp"
#include "ontoarch/validator.hpp"

namespace ontoarch::testing {

/// Absolute path of tests/fixtures.
std::string fixture_dir();

/// Every `.onto` file under `dir`, named relative to `dir`, sorted.
std::vector<parser::SourceFile> load_dir(const std::string& dir);

std::vector<parser::SourceFile> load_fig2();

/// fig2 with the files of mutants/<name> replacing or adding files by name.
std::vector<parser::SourceFile> load_mutant(const std::string& name);

/// Names of the mutant overlay directories, sorted.
std::vector<std::string> mutant_names();

/// fig2 plus every mutant, each mutant file prefixed with its directory.
std::vector<parser::SourceFile> load_corpus();

model::ResolveResult resolve_files(const std::vector<parser::SourceFile>& files);

/// Codes of every error-severity diagnostic of a full analysis, sorted.
std::vector<std::string> error_codes(const std::vector<parser::SourceFile>& files);

/// Per-thing part counts for a synthetic world.
struct ThingShape {
  int properties = 0;
  int powers = 0;
};

/// Candidate edge in a synthetic world. `b_part < 0` targets the thing itself.
struct EdgeSpec {
  model::Predicate predicate;
  std::size_t a_thing;
  std::size_t a_part;
  std::size_t b_thing;
  int b_part;
};

/// A declared world and its bound counterpart, built without the parser.
struct SyntheticWorld {
  std::unique_ptr<model::World> decl;
  model::ResolvedWorld resolved;
};

SyntheticWorld make_world(const std::vector<ThingShape>& shape, const std::vector<EdgeSpec>& edges);

/// Every well-typed enables / actsUpon / interacts edge over the shape.
std::vector<EdgeSpec> candidate_edges(const std::vector<ThingShape>& shape);

/// Calls `visit` for every subset of candidate edges. Returns the number of worlds.
std::uint64_t enumerate_worlds(const std::vector<ThingShape>& shape,
                               const std::function<void(const SyntheticWorld&)>& visit);

/// A random world with up to `max_things` things and `max_parts` parts of each kind per thing.
SyntheticWorld random_world(std::mt19937& rng, int max_things, int max_parts, double density);

/// Generated valid suite: `terms` terms spread over CO/TDO/LDO and `worlds` clean worlds.
std::vector<parser::SourceFile> generate_suite(int terms, int worlds);

}  // namespace ontoarch::testing
