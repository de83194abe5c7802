#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dimetrics::frontend::detail {

enum class TokenKind { identifier, keyword, int_literal, float_literal, string_literal, char_literal, punct, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::punct, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::keyword, t); }
};

struct LexError {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an `end` token on success
  std::optional<LexError> error;
};

LexResult tokenize(std::string_view text);

bool is_primitive_type(std::string_view word);

}  // namespace dimetrics::frontend::detail
