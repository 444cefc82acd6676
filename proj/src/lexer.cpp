#include <algorithm>
#include <array>
#include <cctype>

#include "ontoarch/parser.hpp"

namespace ontoarch::parser {
namespace {

constexpr std::array<std::string_view, 30> kKeywords = {
    "ontology",   "at",          "imports",   "term",      "enriches",   "scope",
    "particulars", "universals", "relation",  "from",      "to",         "kind",
    "instances",  "of",          "individual", "world",    "thing",      "property",
    "power",      "FO",          "CO",        "TDO",       "LDO",        "enables",
    "actsUpon",   "interacts",   "belongsTo", "relatesWith", "isSeenAs", "defines",
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// Number of bytes in the UTF-8 sequence introduced by `lead`.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

class Lexer {
 public:
  Lexer(std::string_view source, std::string_view file) : src_(source), file_(file) {}

  LexResult run() {
    while (true) {
      skip_trivia();
      if (at_end()) break;
      lex_one();
    }
    const Position here = pos();
    out_.tokens.push_back(Token{TokenKind::EndOfInput, "", span(here, here)});
    return std::move(out_);
  }

 private:
  struct Position {
    std::size_t offset;
    int line;
    int col;
  };

  [[nodiscard]] bool at_end() const { return offset_ >= src_.size(); }
  [[nodiscard]] char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
  }
  [[nodiscard]] Position pos() const { return {offset_, line_, col_}; }

  SourceSpan span(const Position& start, const Position& end) const {
    return SourceSpan{std::string(file_), start.line, start.col, end.line, end.col};
  }

  /// Advances one code point, keeping line/column in sync.
  void advance() {
    if (src_[offset_] == '\n') {
      ++offset_;
      ++line_;
      col_ = 1;
      return;
    }
    const std::size_t len = utf8_length(static_cast<unsigned char>(src_[offset_]));
    offset_ = std::min(src_.size(), offset_ + len);
    ++col_;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_one() {
    const Position start = pos();
    const char c = peek();
    if (is_ident_start(c)) {
      while (!at_end() && is_ident_char(peek())) advance();
      std::string word(src_.substr(start.offset, offset_ - start.offset));
      const TokenKind kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
      out_.tokens.push_back(Token{kind, std::move(word), span(start, pos())});
      return;
    }
    if (c == '"') {
      lex_string(start);
      return;
    }
    static constexpr std::string_view kPunctuation = "{}():,.;";
    if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      out_.tokens.push_back(Token{TokenKind::Punctuation, std::string(1, c), span(start, pos())});
      return;
    }
    advance();
    const std::string shown(src_.substr(start.offset, offset_ - start.offset));
    out_.diagnostics.push_back(
        make_diagnostic("E001", span(start, pos()), "invalid character '" + shown + "'"));
  }

  void lex_string(const Position& start) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (at_end()) {
        out_.diagnostics.push_back(
            make_diagnostic("E001", span(start, pos()), "unterminated string literal"));
        return;
      }
      const char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const Position escape = pos();
        advance();
        const char next = peek();
        if (next == '"' || next == '\\') {
          value.push_back(next);
          advance();
        } else {
          if (!at_end()) advance();
          out_.diagnostics.push_back(make_diagnostic(
              "E001", span(escape, pos()), "invalid escape sequence; only \\\" and \\\\ are allowed"));
        }
        continue;
      }
      const std::size_t before = offset_;
      advance();
      value.append(src_.substr(before, offset_ - before));
    }
    out_.tokens.push_back(Token{TokenKind::String, std::move(value), span(start, pos())});
  }

  std::string_view src_;
  std::string_view file_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int col_ = 1;
  LexResult out_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword:
      return "keyword";
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::String:
      return "string";
    case TokenKind::Punctuation:
      return "punctuation";
    case TokenKind::EndOfInput:
      break;
  }
  return "end-of-input";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult tokenize(std::string_view source, std::string_view file) {
  return Lexer(source, file).run();
}

}  // namespace ontoarch::parser
