#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumber,
  kString,
  kSymbol,
  kComment,
  kWhitespace,
  kNewline,
};

std::string_view to_string(TokenKind kind);

// A token views into the text it was lexed from.
struct Token {
  std::string_view text;
  TokenKind kind;
  std::size_t offset;

  std::size_t end() const { return offset + text.size(); }
  bool is_word() const {
    return kind == TokenKind::kIdentifier || kind == TokenKind::kKeyword;
  }
};

// Lossless: concatenating the returned token texts reproduces `text`.
// Identifiers are maximal [A-Za-z_][A-Za-z0-9_]* runs. Strings and char
// literals honor backslash escapes and end at an unescaped quote or at the
// end of the line. Block comments without a terminator run to end of input.
// Any other byte becomes a one-byte symbol token.
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

// Splits an identifier at underscores (dropped) and camel-case boundaries.
// Upper-case runs stay together until the last capital that starts a
// lower-case word: "HTTPServer" -> {"HTTP", "Server"}.
std::vector<std::string> subtokens(std::string_view identifier);

// Length of the identifier run that ends exactly at the end of `prefix`
// (0 if the prefix does not end inside an identifier). A run that starts
// with a digit is part of a number and does not count.
std::size_t trailing_identifier_length(std::string_view prefix);

}  // namespace cce
