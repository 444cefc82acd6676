#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoarch/diagnostic.hpp"
#include "ontoarch/model.hpp"

namespace ontoarch::parser {

enum class TokenKind { Keyword, Identifier, String, Punctuation, EndOfInput };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  /// Source text; for strings, the unescaped contents.
  std::string lexeme;
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

/// Splits `source` into tokens ending with an end-of-input marker. `//` comments
/// are dropped. Invalid characters are reported (E001) and skipped.
LexResult tokenize(std::string_view source, std::string_view file = "<input>");

bool is_keyword(std::string_view word);

struct SourceFile {
  std::string path;
  std::string text;
};

/// Parsed, unresolved declarations for a set of files.
struct SuiteAst {
  std::vector<model::SourceUnit> units;
};

struct ParseResult {
  /// Units for files that parsed cleanly, in input order.
  SuiteAst ast;
  std::vector<Diagnostic> diagnostics;
  /// Paths of files that produced at least one diagnostic.
  std::vector<std::string> failed_files;
};

/// Parses one file. Any diagnostic marks the unit as failed.
std::pair<model::SourceUnit, std::vector<Diagnostic>> parse_file(std::string_view path,
                                                                 std::string_view text);

/// Parses all files; failed files are left out of the returned AST.
ParseResult parse_suite(std::span<const SourceFile> files);

/// Canonical text for one unit. Parsing the output yields a structurally equal unit.
std::string render_canonical(const model::SourceUnit& unit);
/// Concatenation of each unit's canonical text, separated by a blank line.
std::string render_canonical(const SuiteAst& ast);

/// Structural equality, ignoring source spans.
bool same_structure(const model::SourceUnit& a, const model::SourceUnit& b);
bool same_structure(const SuiteAst& a, const SuiteAst& b);

}  // namespace ontoarch::parser
