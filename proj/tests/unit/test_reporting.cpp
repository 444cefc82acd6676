#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "printing.hpp"
#include "json.hpp"
#include "ontoarch/pipeline.hpp"
#include "ontoarch/reporting.hpp"
#include "support.hpp"

using namespace ontoarch;
using namespace ontoarch::reporting;

namespace {

Diagnostic diag(const std::string& code, const std::string& file, int line, int col) {
  return make_diagnostic(code, {file, line, col, line, col + 1}, "message for " + code);
}

std::string golden_path(const std::string& name) {
  return std::string(ONTOARCH_GOLDEN_DIR) + "/" + name + ".json";
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::vector<parser::SourceFile>& files) {
  const std::string actual = render_json(analyze(files).report) + "\n";
  if (std::getenv("ONTOARCH_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden_path(name), std::ios::binary) << actual;
  }
  CAPTURE(name);
  CHECK(read(golden_path(name)) == actual);
}

}  // namespace

TEST_CASE("render_text") {
  const auto empty = make_report({}, {});
  CHECK(render_text(empty) == "0 errors, 0 warnings\n");

  const auto one = make_report({diag("E311", "w.onto", 3, 5)}, {});
  const auto text = render_text(one);
  CHECK(text.rfind("w.onto:3:5: error[E311] message for E311 (", 0) == 0);
  CHECK(text.find("enables(prop, pow)") != std::string::npos);
  CHECK(text.find("\n1 error, 0 warnings\n") != std::string::npos);
}

TEST_CASE("errors precede warnings at equal spans") {
  const auto report = make_report(
      {diag("W202", "a.onto", 2, 3), diag("E211", "a.onto", 2, 3), diag("W301", "a.onto", 1, 1)}, {});
  REQUIRE(report.diagnostics.size() == 3);
  CHECK(report.diagnostics[0].code == "W301");
  CHECK(report.diagnostics[1].code == "E211");
  CHECK(report.diagnostics[2].code == "W202");
  CHECK(report.errors == 1);
  CHECK(report.warnings == 2);
}

TEST_CASE("ordering does not depend on input order") {
  const auto analysis = analyze(testing::load_corpus());
  auto shuffled = analysis.report.diagnostics;
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(make_report(shuffled, analysis.report.summary) == analysis.report);
  }
}

TEST_CASE("render_json") {
  const auto empty = render_json(make_report({}, {}));
  CHECK(empty.rfind(R"({"diagnostics":[],"report_version":1,"summary":{)", 0) == 0);
  CHECK(empty.find(' ') == std::string::npos);

  const auto report = analyze(testing::load_corpus()).report;
  const auto text = render_json(report);
  CHECK(text == render_json(report));

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("report_version") == 1);
  CHECK(doc.at("summary").at("errors") == report.errors);
  CHECK(doc.at("summary").at("warnings") == report.warnings);
  REQUIRE(doc.at("diagnostics").size() == report.diagnostics.size());
  for (const auto& d : doc.at("diagnostics")) {
    for (const char* key : {"anchor", "code", "message", "rule", "severity", "span", "witness"}) {
      CHECK(d.contains(key));
    }
  }
  // Keys are emitted in sorted order, so re-dumping the parsed document is the identity.
  CHECK(doc.dump() == text);
}

TEST_CASE("render_json distinguishes different reports") {
  const auto a = make_report({diag("E311", "w.onto", 3, 5)}, {});
  const auto b = make_report({diag("E311", "w.onto", 3, 6)}, {});
  CHECK(render_json(a) != render_json(b));
  CHECK(render_json(make_report({}, {})) != render_json(make_report({}, {{0, 1}, 0, 0, 0, 0, 0})));
}

TEST_CASE("exit codes") {
  CHECK(exit_code(make_report({diag("W202", "a", 1, 1), diag("W201", "a", 2, 1), diag("W301", "a", 3, 1)}, {})) == 0);
  CHECK(exit_code(make_report({diag("W202", "a", 1, 1)}, {}), true) == 1);
  CHECK(exit_code(make_report({diag("E201", "a", 1, 1)}, {})) == 1);
  CHECK(exit_code(analyze(testing::load_fig2()).report) == 0);
  CHECK(kUsageExitCode == 2);
}

TEST_CASE("every diagnostic with a rule carries an anchor") {
  const auto report = analyze(testing::load_corpus()).report;
  CHECK_FALSE(report.diagnostics.empty());
  for (const auto& d : report.diagnostics) {
    CAPTURE(d.code);
    CHECK(d.severity == (d.code.front() == 'E' ? Severity::Error : Severity::Warning));
    if (d.rule) CHECK_FALSE(d.anchor.empty());
  }
}

TEST_CASE("golden reports") {
  check_golden("fig2", testing::load_fig2());
  check_golden("rule2", testing::load_dir(testing::fixture_dir() + "/rule2"));
  for (const auto& name : testing::mutant_names()) {
    check_golden("mutant_" + name, testing::load_mutant(name));
  }
}
