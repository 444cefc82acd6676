#include <utility>

#include "ontoarch/parser.hpp"

namespace ontoarch::parser {
namespace {

using model::Fact;
using model::Individual;
using model::InstanceFile;
using model::OntologyModule;
using model::QualifiedRef;
using model::Ref;
using model::RelationDecl;
using model::SourceUnit;
using model::TermDef;
using model::ThingNode;
using model::World;

/// Thrown to unwind to the top-level loop after an E002.
struct SyntaxError {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view path) : tokens_(std::move(tokens)) {
    unit_.path = std::string(path);
  }

  std::pair<SourceUnit, std::vector<Diagnostic>> run() {
    while (!at(TokenKind::EndOfInput)) {
      try {
        if (at_keyword("ontology")) {
          unit_.modules.push_back(module_decl());
          unit_.order.push_back({model::UnitItem::Kind::Module, unit_.modules.size() - 1});
        } else if (at_keyword("instances")) {
          unit_.instances.push_back(instances_decl());
          unit_.order.push_back({model::UnitItem::Kind::Instances, unit_.instances.size() - 1});
        } else {
          unexpected("'ontology' or 'instances'");
        }
      } catch (const SyntaxError&) {
        synchronize();
      }
    }
    return {std::move(unit_), std::move(diagnostics_)};
  }

 private:
  // -- token helpers --------------------------------------------------------

  [[nodiscard]] const Token& current() const { return tokens_[index_]; }
  [[nodiscard]] const Token& lookahead(std::size_t n) const {
    return tokens_[std::min(index_ + n, tokens_.size() - 1)];
  }
  [[nodiscard]] bool at(TokenKind kind) const { return current().kind == kind; }
  [[nodiscard]] bool at_keyword(std::string_view word) const {
    return at(TokenKind::Keyword) && current().lexeme == word;
  }
  [[nodiscard]] bool at_punct(char c) const {
    return at(TokenKind::Punctuation) && current().lexeme[0] == c;
  }
  [[nodiscard]] bool at_word() const {
    return at(TokenKind::Identifier) || at(TokenKind::Keyword);
  }

  const Token& take() {
    const Token& tok = tokens_[index_];
    last_ = tok.span;
    if (index_ + 1 < tokens_.size()) ++index_;
    return tok;
  }

  [[noreturn]] void unexpected(std::string_view expected) {
    const Token& tok = current();
    std::string found = tok.kind == TokenKind::EndOfInput
                            ? std::string("end of input")
                            : std::string(to_string(tok.kind)) + " '" + tok.lexeme + "'";
    diagnostics_.push_back(
        make_diagnostic("E002", tok.span, "expected " + std::string(expected) + ", found " + found));
    throw SyntaxError{};
  }

  const Token& expect_keyword(std::string_view word) {
    if (!at_keyword(word)) unexpected("'" + std::string(word) + "'");
    return take();
  }

  const Token& expect_punct(char c) {
    if (!at_punct(c)) unexpected(std::string("'") + c + "'");
    return take();
  }

  const Token& expect_identifier(std::string_view what) {
    if (!at(TokenKind::Identifier)) unexpected(what);
    return take();
  }

  /// A name segment inside a reference; keywords are admitted so that
  /// foundational relationship keys such as `ThingFO.enables` can be named.
  const Token& expect_word(std::string_view what) {
    if (!at_word()) unexpected(what);
    return take();
  }

  /// Skips to the next top-level declaration, consuming at least one token.
  void synchronize() {
    if (!at(TokenKind::EndOfInput)) take();
    while (!at(TokenKind::EndOfInput) && !at_keyword("ontology") && !at_keyword("instances")) {
      take();
    }
  }

  SourceSpan from(const SourceSpan& start) const { return start.merge(last_); }

  // -- grammar --------------------------------------------------------------

  QualifiedRef qname() {
    const Token& first = expect_word("a name");
    QualifiedRef ref;
    ref.name = first.lexeme;
    const SourceSpan start = first.span;
    if (at_punct('.')) {
      take();
      ref.module = std::move(ref.name);
      ref.name = expect_word("a name after '.'").lexeme;
    }
    ref.span = from(start);
    return ref;
  }

  Ref world_ref() {
    const Token& first = expect_word("a thing reference");
    Ref ref;
    ref.thing = first.lexeme;
    const SourceSpan start = first.span;
    if (at_punct('.')) {
      take();
      ref.part = expect_word("a name after '.'").lexeme;
    }
    ref.span = from(start);
    return ref;
  }

  OntologyModule module_decl() {
    OntologyModule module;
    const SourceSpan start = expect_keyword("ontology").span;
    const Token& name = expect_identifier("a module name");
    module.name = name.lexeme;
    module.name_span = name.span;
    expect_keyword("at");
    level(module);
    expect_punct('{');
    while (at_keyword("imports")) {
      const SourceSpan import_start = take().span;
      const Token& target = expect_identifier("an imported module name");
      module.imports.push_back({target.lexeme, from(import_start)});
    }
    while (!at_punct('}')) {
      if (at_keyword("term")) {
        module.terms.push_back(term_decl());
        module.order.push_back({model::BodyItem::Kind::Term, module.terms.size() - 1});
      } else if (at_keyword("relation")) {
        module.relations.push_back(relation_decl());
        module.order.push_back({model::BodyItem::Kind::Relation, module.relations.size() - 1});
      } else {
        unexpected("'term', 'relation' or '}'");
      }
    }
    take();
    module.span = from(start);
    return module;
  }

  void level(OntologyModule& module) {
    if (!at_word()) unexpected("a level name");
    const Token& tok = take();
    if (const auto parsed = model::parse_level(tok.lexeme); parsed && *parsed != model::Level::IO) {
      module.level = *parsed;
      return;
    }
    diagnostics_.push_back(make_diagnostic(
        "E003", tok.span, "unknown level name '" + tok.lexeme + "'; expected FO, CO, TDO or LDO"));
  }

  TermDef term_decl() {
    TermDef term;
    const SourceSpan start = expect_keyword("term").span;
    term.name = expect_identifier("a term name").lexeme;
    expect_keyword("enriches");
    term.enriches = qname();
    if (at_keyword("scope")) {
      take();
      if (at_keyword("particulars")) {
        term.scope = model::Scope::Particulars;
      } else if (at_keyword("universals")) {
        term.scope = model::Scope::Universals;
      } else {
        unexpected("'particulars' or 'universals'");
      }
      take();
    }
    if (at_punct('{')) {
      take();
      term.has_attribute_block = true;
      while (!at_punct('}')) {
        const Token& key = expect_identifier("an attribute key or '}'");
        model::Attribute attr;
        attr.key = key.lexeme;
        if (!at(TokenKind::String)) unexpected("a string value");
        attr.value = take().lexeme;
        attr.span = from(key.span);
        term.attributes.push_back(std::move(attr));
      }
      take();
    }
    term.span = from(start);
    return term;
  }

  RelationDecl relation_decl() {
    RelationDecl rel;
    const SourceSpan start = expect_keyword("relation").span;
    rel.name = expect_identifier("a relation name").lexeme;
    expect_keyword("from");
    rel.from = qname();
    expect_keyword("to");
    rel.to = qname();
    expect_keyword("kind");
    rel.kind = qname();
    rel.span = from(start);
    return rel;
  }

  InstanceFile instances_decl() {
    InstanceFile file;
    const SourceSpan start = expect_keyword("instances").span;
    expect_keyword("of");
    const Token& of = expect_identifier("a module name");
    file.of_module = of.lexeme;
    file.of_span = of.span;
    expect_punct('{');
    while (!at_punct('}')) {
      if (at_keyword("individual")) {
        file.individuals.push_back(individual_decl());
        file.order.push_back(
            {model::InstanceItem::Kind::Individual, file.individuals.size() - 1});
      } else if (at_keyword("world")) {
        file.worlds.push_back(world_decl());
        file.order.push_back({model::InstanceItem::Kind::World, file.worlds.size() - 1});
      } else {
        unexpected("'individual', 'world' or '}'");
      }
    }
    take();
    file.span = from(start);
    return file;
  }

  Individual individual_decl() {
    Individual indiv;
    const SourceSpan start = expect_keyword("individual").span;
    indiv.name = expect_identifier("an individual name").lexeme;
    expect_punct(':');
    indiv.type = qname();
    indiv.span = from(start);
    return indiv;
  }

  World world_decl() {
    World world;
    const SourceSpan start = expect_keyword("world").span;
    world.name = expect_identifier("a world name").lexeme;
    expect_punct('{');
    while (at_keyword("thing")) world.things.push_back(thing_decl());
    while (!at_punct('}')) {
      if (at_keyword("thing")) unexpected("a fact; thing declarations must precede facts");
      world.facts.push_back(fact_decl());
    }
    take();
    world.span = from(start);
    return world;
  }

  ThingNode thing_decl() {
    ThingNode node;
    const SourceSpan start = expect_keyword("thing").span;
    node.id = expect_identifier("a thing name").lexeme;
    if (at_punct(':')) {
      take();
      node.instance_of = qname();
    }
    expect_punct('{');
    while (at_keyword("property")) {
      const SourceSpan part_start = take().span;
      const std::string id = expect_identifier("a property name").lexeme;
      expect_punct(';');
      node.properties.emplace_back(id, from(part_start));
    }
    while (at_keyword("power")) {
      const SourceSpan part_start = take().span;
      const std::string id = expect_identifier("a power name").lexeme;
      expect_punct(';');
      node.powers.emplace_back(id, from(part_start));
    }
    if (at_keyword("property")) unexpected("'power' or '}'; properties must precede powers");
    expect_punct('}');
    node.span = from(start);
    return node;
  }

  Fact fact_decl() {
    Fact fact;
    if (!at_word() || !(lookahead(1).kind == TokenKind::Punctuation && lookahead(1).lexeme == "(")) {
      unexpected("a fact such as 'enables(t.p, t.w)' or '}'");
    }
    const Token& pred = take();
    const SourceSpan start = pred.span;
    if (const auto parsed = model::parse_predicate(pred.lexeme)) {
      fact.predicate = *parsed;
    } else {
      diagnostics_.push_back(make_diagnostic(
          "E004", pred.span,
          "unknown fact predicate '" + pred.lexeme +
              "'; expected enables, actsUpon, interacts, belongsTo, relatesWith, isSeenAs or "
              "defines"));
    }
    expect_punct('(');
    fact.subject = world_ref();
    expect_punct(',');
    fact.object = world_ref();
    expect_punct(')');
    fact.span = from(start);
    return fact;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  SourceSpan last_;
  SourceUnit unit_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::pair<model::SourceUnit, std::vector<Diagnostic>> parse_file(std::string_view path,
                                                                 std::string_view text) {
  LexResult lexed = tokenize(text, path);
  auto [unit, diagnostics] = Parser(std::move(lexed.tokens), path).run();
  lexed.diagnostics.insert(lexed.diagnostics.end(), diagnostics.begin(), diagnostics.end());
  sort_diagnostics(lexed.diagnostics);
  return {std::move(unit), std::move(lexed.diagnostics)};
}

ParseResult parse_suite(std::span<const SourceFile> files) {
  ParseResult result;
  for (const auto& file : files) {
    auto [unit, diagnostics] = parse_file(file.path, file.text);
    if (diagnostics.empty()) {
      result.ast.units.push_back(std::move(unit));
    } else {
      result.failed_files.push_back(file.path);
      result.diagnostics.insert(result.diagnostics.end(), diagnostics.begin(), diagnostics.end());
    }
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

}  // namespace ontoarch::parser
