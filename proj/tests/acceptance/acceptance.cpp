// One PASS/FAIL line per acceptance criterion. Exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ontoarch/cli.hpp"
#include "ontoarch/pipeline.hpp"
#include "support.hpp"

namespace {

using namespace ontoarch;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome metamodel_totals() {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int rc = cli::run({"metamodel", "--counts"}, out, err);
  const double t = seconds_since(start);
  const std::string text = out.str();
  const bool ok = rc == 0 && text == "terms=19 properties=10 relationships=12\n" && t < 1.0;
  return {ok, text.substr(0, text.find('\n')) + " in " + fmt_seconds(t)};
}

Outcome axiom_oracle() {
  const auto start = Clock::now();
  std::uint64_t worlds = 0, disagreements = 0, violating = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::vector<testing::ThingShape> shape = {{a & 1, a >> 1}, {b & 1, b >> 1}};
      worlds += testing::enumerate_worlds(shape, [&](const testing::SyntheticWorld& w) {
        const auto fast = validator::check_axioms(w.resolved);
        const auto slow = validator::oracle_check_axioms(w.resolved);
        if (fast != slow) ++disagreements;
        if (!fast.empty()) ++violating;
      });
    }
  }
  const double t = seconds_since(start);
  return {disagreements == 0 && t < 10.0,
          std::to_string(worlds) + " worlds (" + std::to_string(violating) + " violating), " +
              std::to_string(disagreements) + " disagreements in " + fmt_seconds(t)};
}

Outcome fig2_clean() {
  const auto analysis = analyze(testing::load_fig2());
  const auto& r = analysis.report;
  return {r.errors == 0 && r.warnings == 0 && r.summary.files == 5,
          std::to_string(r.errors) + " errors, " + std::to_string(r.warnings) + " warnings over " +
              std::to_string(r.summary.files) + " files"};
}

Outcome mutants() {
  const std::vector<std::string> expected = {"E201", "E202", "E211", "E212", "E231",
                                             "E232", "E301", "E311", "E312", "E313"};
  std::string failures;
  int matched = 0;
  for (const auto& code : expected) {
    const auto codes = testing::error_codes(testing::load_mutant(code));
    if (codes == std::vector<std::string>{code}) {
      ++matched;
    } else {
      std::string got;
      for (const auto& c : codes) got += (got.empty() ? "" : ",") + c;
      failures += " " + code + "->[" + got + "]";
    }
  }
  const bool ok = matched == 10 && testing::mutant_names() == expected;
  return {ok, std::to_string(matched) + "/10 mutants exact" + failures};
}

Outcome round_trip() {
  int files = 0, failures = 0;
  for (const auto& f : testing::load_corpus()) {
    ++files;
    const auto [first, d1] = parser::parse_file(f.path, f.text);
    const std::string r1 = parser::render_canonical(first);
    const auto [second, d2] = parser::parse_file(f.path, r1);
    const std::string r2 = parser::render_canonical(second);
    if (!d1.empty() || !d2.empty() || !parser::same_structure(first, second) || r1 != r2) {
      ++failures;
      std::printf("  round-trip failure: %s\n", f.path.c_str());
    }
  }
  return {failures == 0 && files > 0,
          std::to_string(files) + " files, " + std::to_string(failures) + " failures"};
}

Outcome determinism() {
  auto corpus = testing::load_corpus();
  const std::string reference = reporting::render_json(analyze(corpus).report);
  const bool repeat = reporting::render_json(analyze(corpus).report) == reference;
  std::mt19937 rng(20261019);
  int shuffles_ok = 0;
  for (int i = 0; i < 10; ++i) {
    std::shuffle(corpus.begin(), corpus.end(), rng);
    if (reporting::render_json(analyze(corpus).report) == reference) ++shuffles_ok;
  }
  return {repeat && shuffles_ok == 10,
          std::string(repeat ? "repeat identical" : "repeat differs") + ", " +
              std::to_string(shuffles_ok) + "/10 shuffled orders identical (" +
              std::to_string(reference.size()) + " bytes)"};
}

Outcome conservativity() {
  std::vector<std::vector<parser::SourceFile>> suites = {testing::load_fig2(),
                                                         testing::load_dir(testing::fixture_dir() + "/rule2")};
  for (const auto& name : testing::mutant_names()) suites.push_back(testing::load_mutant(name));

  int singletons = 0, discrepancies = 0;
  for (const auto& files : suites) {
    const auto resolved = testing::resolve_files(files);
    const auto& suite = resolved.suite;
    const auto rule1 = validator::check_rule1(suite);
    const auto rule2 = validator::check_rule2(suite);
    for (const auto& component : validator::import_components(suite)) {
      if (component.size() != 1) continue;
      ++singletons;
      const std::string& name = suite.module(component.front()).name();
      const auto only = [&](const std::vector<validator::Violation>& all) {
        std::vector<validator::Violation> out;
        std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                     [&](const auto& v) { return v.module == name; });
        return out;
      };
      if (only(rule1) != only(rule2)) ++discrepancies;
    }
  }
  return {discrepancies == 0 && singletons > 0,
          std::to_string(singletons) + " single-module components, " +
              std::to_string(discrepancies) + " discrepancies"};
}

Outcome scale() {
  const auto files = testing::generate_suite(1000, 100);
  const auto start = Clock::now();
  const auto analysis = analyze(files);
  const double t = seconds_since(start);
  const auto& r = analysis.report;
  return {r.errors == 0 && r.warnings == 0 && r.summary.terms == 1000 &&
              r.summary.relations > 400 && r.summary.worlds == 100 && t < 5.0,
          std::to_string(r.summary.terms) + " terms, " + std::to_string(r.summary.relations) +
              " relations, " + std::to_string(r.summary.worlds) + " worlds, " +
              std::to_string(r.errors + r.warnings) + " diagnostics in " + fmt_seconds(t)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"metamodel totals", metamodel_totals},
      {"axiom oracle equivalence", axiom_oracle},
      {"fig2 suite is clean", fig2_clean},
      {"single-edit mutants", mutants},
      {"parser round-trip", round_trip},
      {"determinism", determinism},
      {"rule 2 conservativity", conservativity},
      {"scale sanity", scale},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
