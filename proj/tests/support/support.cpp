#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ontoarch/pipeline.hpp"

namespace ontoarch::testing {

namespace fs = std::filesystem;

std::string fixture_dir() { return ONTOARCH_FIXTURE_DIR; }

std::vector<parser::SourceFile> load_dir(const std::string& dir) {
  std::vector<parser::SourceFile> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".onto") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    files.push_back({fs::relative(entry.path(), dir).generic_string(), ss.str()});
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
  return files;
}

std::vector<parser::SourceFile> load_fig2() { return load_dir(fixture_dir() + "/fig2"); }

std::vector<parser::SourceFile> load_mutant(const std::string& name) {
  std::map<std::string, std::string> merged;
  for (auto& f : load_fig2()) merged[f.path] = std::move(f.text);
  for (auto& f : load_dir(fixture_dir() + "/mutants/" + name)) merged[f.path] = std::move(f.text);
  std::vector<parser::SourceFile> out;
  for (auto& [path, text] : merged) out.push_back({path, std::move(text)});
  return out;
}

std::vector<std::string> mutant_names() {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(fixture_dir() + "/mutants")) {
    if (entry.is_directory()) names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<parser::SourceFile> load_corpus() {
  auto files = load_fig2();
  for (const auto& name : mutant_names()) {
    for (auto& f : load_dir(fixture_dir() + "/mutants/" + name)) {
      files.push_back({"mutants/" + name + "/" + f.path, std::move(f.text)});
    }
  }
  return files;
}

model::ResolveResult resolve_files(const std::vector<parser::SourceFile>& files) {
  auto parsed = parser::parse_suite(files);
  return model::resolve(std::move(parsed.ast.units));
}

std::vector<std::string> error_codes(const std::vector<parser::SourceFile>& files) {
  const auto analysis = analyze(files);
  std::vector<std::string> codes;
  for (const auto& d : analysis.report.diagnostics) {
    if (d.severity == Severity::Error) codes.push_back(d.code);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

SyntheticWorld make_world(const std::vector<ThingShape>& shape, const std::vector<EdgeSpec>& edges) {
  SyntheticWorld w;
  w.decl = std::make_unique<model::World>();
  w.decl->name = "w";
  for (std::size_t t = 0; t < shape.size(); ++t) {
    model::ThingNode node;
    node.id = "t" + std::to_string(t);
    for (int i = 0; i < shape[t].properties; ++i) node.properties.push_back({"p" + std::to_string(i), {}});
    for (int i = 0; i < shape[t].powers; ++i) node.powers.push_back({"w" + std::to_string(i), {}});
    w.decl->things.push_back(std::move(node));
  }
  w.resolved.decl = w.decl.get();
  w.resolved.things.resize(shape.size());

  for (const auto& e : edges) {
    const std::size_t fact = w.decl->facts.size();
    model::Fact f;
    f.predicate = e.predicate;
    const auto& a = w.decl->things[e.a_thing];
    const auto& b = w.decl->things[e.b_thing];
    const bool a_is_power = e.predicate != model::Predicate::Enables;
    f.subject = {a.id, a_is_power ? a.powers[e.a_part].first : a.properties[e.a_part].first, {}};
    f.span = {"<synthetic>", static_cast<int>(fact) + 1, 1, static_cast<int>(fact) + 1, 2};
    const model::PartRef from{e.a_thing, e.a_part};
    switch (e.predicate) {
      case model::Predicate::Enables: {
        const model::PartRef to{e.b_thing, static_cast<std::size_t>(e.b_part)};
        f.object = {b.id, b.powers[to.part].first, {}};
        w.resolved.enables.push_back({from, to, fact});
        break;
      }
      case model::Predicate::ActsUpon: {
        const model::PartRef to{e.b_thing, static_cast<std::size_t>(e.b_part)};
        f.object = {b.id, b.properties[to.part].first, {}};
        w.resolved.acts_upon.push_back({from, to, fact});
        break;
      }
      default:
        f.object = {b.id, std::nullopt, {}};
        w.resolved.interacts.push_back({from, e.b_thing, fact});
        break;
    }
    w.decl->facts.push_back(std::move(f));
  }
  return w;
}

std::vector<EdgeSpec> candidate_edges(const std::vector<ThingShape>& shape) {
  using model::Predicate;
  std::vector<EdgeSpec> out;
  const std::size_t n = shape.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (int ap = 0; ap < shape[a].properties; ++ap) {
      for (std::size_t b = 0; b < n; ++b) {
        for (int bw = 0; bw < shape[b].powers; ++bw) {
          out.push_back({Predicate::Enables, a, static_cast<std::size_t>(ap), b, bw});
        }
      }
    }
    for (int aw = 0; aw < shape[a].powers; ++aw) {
      for (std::size_t b = 0; b < n; ++b) {
        for (int bp = 0; bp < shape[b].properties; ++bp) {
          out.push_back({Predicate::ActsUpon, a, static_cast<std::size_t>(aw), b, bp});
        }
        out.push_back({Predicate::Interacts, a, static_cast<std::size_t>(aw), b, -1});
      }
    }
  }
  return out;
}

std::uint64_t enumerate_worlds(const std::vector<ThingShape>& shape,
                               const std::function<void(const SyntheticWorld&)>& visit) {
  const auto candidates = candidate_edges(shape);
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<EdgeSpec> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) chosen.push_back(candidates[i]);
    }
    visit(make_world(shape, chosen));
  }
  return total;
}

SyntheticWorld random_world(std::mt19937& rng, int max_things, int max_parts, double density) {
  std::uniform_int_distribution<int> things(0, max_things);
  std::uniform_int_distribution<int> parts(0, max_parts);
  std::bernoulli_distribution keep(density);
  std::vector<ThingShape> shape(static_cast<std::size_t>(things(rng)));
  for (auto& s : shape) s = {parts(rng), parts(rng)};
  std::vector<EdgeSpec> chosen;
  for (const auto& e : candidate_edges(shape)) {
    if (keep(rng)) chosen.push_back(e);
  }
  return make_world(shape, chosen);
}

std::vector<parser::SourceFile> generate_suite(int terms, int worlds) {
  constexpr int kPerModule = 50;
  const char* levels[] = {"CO", "TDO", "LDO"};
  std::vector<parser::SourceFile> files;
  int counts[3];
  for (int l = 0; l < 3; ++l) counts[l] = terms / 3 + (l < terms % 3 ? 1 : 0);

  const auto module_of = [&](int l, int j) {
    return std::string("Gen") + levels[l] + std::to_string(j / kPerModule);
  };
  for (int l = 0; l < 3; ++l) {
    for (int start = 0; start < counts[l]; start += kPerModule) {
      const int end = std::min(counts[l], start + kPerModule);
      std::ostringstream os;
      os << "ontology " << module_of(l, start) << " at " << levels[l] << " {\n";
      for (int j = start; j < end; ++j) {
        os << "  term T" << j << " enriches "
           << (l == 0 ? std::string("ThingFO.Thing") : module_of(l - 1, j) + ".T" + std::to_string(j))
           << " {\n    description \"generated term " << j << "\"\n  }\n";
      }
      for (int j = start; j + 1 < end; j += 2) {
        os << "  relation r" << j << " from T" << j << " to T" << j + 1 << " kind "
           << (l == 0 ? std::string("ThingFO.relatesWithThing")
                      : module_of(l - 1, j) + ".r" + std::to_string(j))
           << "\n";
      }
      os << "}\n";
      files.push_back({"gen/" + module_of(l, start) + ".onto", os.str()});
    }
  }

  std::ostringstream os;
  os << "instances of GenLDO0 {\n";
  const std::string type = "GenLDO0.T";
  for (int w = 0; w < worlds; ++w) {
    os << "  individual i" << w << " : " << type << (w % 2) << "\n";
    os << "  world w" << w << " {\n";
    for (int t = 0; t < 3; ++t) {
      os << "    thing x" << t << " : " << type << t << " {\n      property p;\n      power q;\n    }\n";
    }
    for (int t = 0; t < 3; ++t) {
      os << "    enables(x" << t << ".p, x" << t << ".q)\n";
      os << "    actsUpon(x" << t << ".q, x" << t << ".p)\n";
      os << "    interacts(x" << t << ".q, x" << (t + 1) % 3 << ")\n";
    }
    os << "    relatesWith(x0, x1)\n  }\n";
  }
  os << "}\n";
  files.push_back({"gen/instances.onto", os.str()});
  return files;
}

}  // namespace ontoarch::testing
