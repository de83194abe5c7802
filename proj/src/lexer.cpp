#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dimetrics::frontend::detail {

namespace {

// Every Java reserved word. Words outside the accepted subset are still lexed as
// keywords so the parser can reject them by name.
constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",  "break",     "byte",      "case",      "catch",        "char",
    "class",    "const",      "continue", "default",   "do",        "double",    "else",         "enum",
    "extends",  "final",      "finally",  "float",     "for",       "goto",      "if",           "implements",
    "import",   "instanceof", "int",      "interface", "long",      "native",    "new",          "package",
    "private",  "protected",  "public",   "return",    "short",     "static",    "strictfp",     "super",
    "switch",   "synchronized", "this",   "throw",     "throws",    "transient", "try",          "void",
    "volatile", "while",      "true",     "false",     "null"};

constexpr std::array<std::string_view, 8> kPrimitives = {"boolean", "byte", "char", "short", "int", "long", "float", "double"};

// Longest first so that greedy matching picks multi-character operators.
constexpr std::array<std::string_view, 36> kPunct = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=",
    "/=",   "%=",  "&=",  "|=",  "^=",  "<<", "{",  "}",  "(",  ")",  "[",  "]",  ";",  ",",  ".",  "=",  "@",  "?"};

constexpr std::string_view kSingleOps = "+-*/%<>!~&|^:";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult run() {
    LexResult result;
    while (true) {
      skip_trivia();
      if (error_) break;
      if (pos_ >= text_.size()) {
        result.tokens.push_back(Token{TokenKind::end, "", line_, column_});
        break;
      }
      Token tok = next();
      if (error_) break;
      result.tokens.push_back(std::move(tok));
    }
    result.error = error_;
    if (error_) result.tokens.clear();
    return result;
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void fail(std::size_t line, std::size_t column, std::string message) {
    if (!error_) error_ = LexError{line, column, std::move(message)};
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) {
          fail(line, column, "unterminated block comment");
          return;
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    Token tok;
    tok.line = line_;
    tok.column = column_;
    char c = peek();
    std::size_t start = pos_;

    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(peek())) advance();
      tok.text = std::string(text_.substr(start, pos_ - start));
      bool keyword = std::find(kKeywords.begin(), kKeywords.end(), tok.text) != kKeywords.end();
      tok.kind = keyword ? TokenKind::keyword : TokenKind::identifier;
      return tok;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      bool is_float = false;
      while (pos_ < text_.size()) {
        char d = peek();
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          if (d == 'e' || d == 'E' || d == 'f' || d == 'F' || d == 'd' || d == 'D') {
            bool hex = pos_ - start >= 2 && (text_[start + 1] == 'x' || text_[start + 1] == 'X');
            if (!hex) is_float = true;
          }
          advance();
          if ((d == 'e' || d == 'E') && (peek() == '+' || peek() == '-')) advance();
        } else if (d == '.') {
          is_float = true;
          advance();
        } else {
          break;
        }
      }
      tok.text = std::string(text_.substr(start, pos_ - start));
      tok.kind = is_float ? TokenKind::float_literal : TokenKind::int_literal;
      return tok;
    }

    if (c == '"' || c == '\'') {
      char quote = c;
      advance();
      while (pos_ < text_.size() && peek() != quote && peek() != '\n') {
        if (peek() == '\\' && pos_ + 1 < text_.size()) advance();
        advance();
      }
      if (peek() != quote) {
        fail(tok.line, tok.column, quote == '"' ? "unterminated string literal" : "unterminated character literal");
        return tok;
      }
      advance();
      tok.text = std::string(text_.substr(start, pos_ - start));
      tok.kind = quote == '"' ? TokenKind::string_literal : TokenKind::char_literal;
      return tok;
    }

    for (std::string_view p : kPunct) {
      if (text_.substr(pos_, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        tok.kind = TokenKind::punct;
        tok.text = std::string(p);
        return tok;
      }
    }
    if (kSingleOps.find(c) != std::string_view::npos) {
      advance();
      tok.kind = TokenKind::punct;
      tok.text = std::string(1, c);
      return tok;
    }

    fail(tok.line, tok.column, std::string("unexpected character '") + c + "'");
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::optional<LexError> error_;
};

}  // namespace

LexResult tokenize(std::string_view text) { return Lexer(text).run(); }

bool is_primitive_type(std::string_view word) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

}  // namespace dimetrics::frontend::detail
