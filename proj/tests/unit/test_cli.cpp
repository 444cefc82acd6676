#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "printing.hpp"
#include "json.hpp"
#include "ontoarch/cli.hpp"
#include "ontoarch/pipeline.hpp"
#include "support.hpp"

using namespace ontoarch;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fig2_dir() { return testing::fixture_dir() + "/fig2"; }

fs::path temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ontoarch_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t node_count(const std::string& dot) {
  static const std::regex node(R"(^\s*"[^"]+" \[)");
  std::size_t n = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (std::regex_search(line, node)) ++n;
  }
  return n;
}

std::vector<std::string> level_clusters(const std::string& dot) {
  static const std::regex cluster(R"re(^  subgraph "cluster_([A-Z]+)")re");
  std::vector<std::string> out;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    std::smatch m;
    if (std::regex_search(line, m, cluster)) out.push_back(m[1]);
  }
  return out;
}

}  // namespace

TEST_CASE("validate fig2") {
  const auto r = run({"validate", fig2_dir()});
  CHECK(r.code == 0);
  CHECK(r.out == "0 errors, 0 warnings\n");
  CHECK(r.err.empty());
  CHECK(run({"validate", fig2_dir(), "--strict"}).code == 0);
}

TEST_CASE("validate json output and --out") {
  const auto r = run({"validate", fig2_dir(), "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("report_version") == 1);
  CHECK(doc.at("summary").at("files") == 5);

  const auto dir = temp_dir("out");
  const auto path = (dir / "report.json").string();
  const auto to_file = run({"validate", fig2_dir(), "--format", "json", "--out", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == r.out);
  fs::remove_all(dir);
}

TEST_CASE("validate exit codes") {
  const auto dir = temp_dir("mutant");
  for (const auto& f : testing::load_mutant("E311")) std::ofstream(dir / f.path) << f.text;
  const auto r = run({"validate", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("error[E311]") != std::string::npos);

  // Warnings pass unless --strict.
  const auto warn = temp_dir("warn");
  std::ofstream(warn / "a.onto") << "ontology A at CO { term T enriches ThingFO.Thing }\n";
  CHECK(run({"validate", warn.string()}).code == 0);
  CHECK(run({"validate", warn.string(), "--strict"}).code == 1);
  fs::remove_all(dir);
  fs::remove_all(warn);
}

TEST_CASE("usage and I/O failures exit 2") {
  CHECK(run({}).code == 2);
  const auto bad_flag = run({"validate", fig2_dir(), "--bogus"});
  CHECK(bad_flag.code == 2);
  CHECK(bad_flag.err.find("Usage") != std::string::npos);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", fig2_dir(), "--format", "xml"}).code == 2);
  const auto missing = run({"validate", "/no/such/path.onto"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/no/such/path.onto") != std::string::npos);
  CHECK(run({"graph"}).code == 2);
  CHECK(run({"validate", fig2_dir(), "--out", "/no/such/dir/report.txt"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("metamodel") {
  const auto r = run({"metamodel", "--counts"});
  CHECK(r.code == 0);
  CHECK(r.out == "terms=19 properties=10 relationships=12\n");
  CHECK(cli::metamodel_counts() == "terms=19 properties=10 relationships=12");
  const auto listing = run({"metamodel"});
  CHECK(listing.code == 0);
  CHECK(listing.out.find("Relationships (12)") != std::string::npos);
}

TEST_CASE("explain") {
  const auto thing = run({"explain", "Thing"});
  CHECK(thing.code == 0);
  CHECK(thing.out.find("perceivable or conceivable object, or its individuals") != std::string::npos);
  CHECK(thing.out.find("Particular Thing") != std::string::npos);

  CHECK(run({"explain", "ThingCategory"}).out.find("does not result in instances") != std::string::npos);
  CHECK(run({"explain", "E313"}).out.find("The Power of a Thing only interacts with other Things.") !=
        std::string::npos);
  CHECK(run({"explain", "enables"}).out.find("A Property enables the Powers") != std::string::npos);
  CHECK(run({"explain", "descriptive_statement"}).code == 0);
  CHECK(run({"explain", "R2"}).out.find("Rule #2") != std::string::npos);

  const auto unknown = run({"explain", "Zorp"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown topic") != std::string::npos);

  for (const auto& spec : metamodel::all_term_specs()) CHECK(cli::explain(spec.key).has_value());
}

TEST_CASE("graph export") {
  const auto empty = analyze({});
  const auto dot = cli::export_graph(empty.resolved.suite);
  CHECK(level_clusters(dot) == std::vector<std::string>{"FO"});
  CHECK(node_count(dot) == 1 + 19);

  const auto files = testing::load_fig2();
  const auto analysis = analyze(files);
  const auto& suite = analysis.resolved.suite;
  const auto fig2 = cli::export_graph(suite);
  CHECK(level_clusters(fig2) == std::vector<std::string>{"FO", "CO", "TDO", "LDO", "IO"});
  CHECK(node_count(fig2) ==
        (suite.modules().size() + 1) + (suite.term_count() + 19) + suite.instance_files().size());
  CHECK(fig2.find("\"ProcessCO.Process\" -> \"ThingFO.Thing\" [style=solid]") != std::string::npos);
  CHECK(fig2.find("\"SituationCO\" -> \"ProcessCO\" [style=dashed]") != std::string::npos);
  const auto co = fig2.find("cluster_CO");
  CHECK(fig2.find("cluster_module_ProcessCO", co) < fig2.find("cluster_TDO"));
  CHECK(fig2.find("cluster_module_SituationCO", co) < fig2.find("cluster_TDO"));

  const auto cli_run = run({"graph", fig2_dir()});
  CHECK(cli_run.code == 0);
  CHECK(node_count(cli_run.out) == node_count(fig2));
}

TEST_CASE("run is deterministic and directory order independent") {
  const auto a = run({"validate", testing::fixture_dir(), "--format", "json"});
  const auto b = run({"validate", testing::fixture_dir(), "--format", "json"});
  CHECK(a.out == b.out);
  CHECK(a.code == 1);
  const auto files = cli::discover_inputs({testing::fixture_dir()});
  CHECK(std::is_sorted(files.begin(), files.end()));
  for (const auto& f : files) CHECK(fs::path(f).extension() == ".onto");
  const auto twice = cli::discover_inputs({fig2_dir(), fig2_dir() + "/process_co.onto"});
  CHECK(twice.size() == 5);
  CHECK_THROWS_AS(cli::discover_inputs({"/no/such/dir"}), std::runtime_error);
}
