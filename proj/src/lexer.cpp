#include "cce/lexer.hpp"

#include "cce/common.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace cce {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",      "byte",
    "case",     "catch",      "char",      "class",      "const",
    "continue", "default",    "do",        "double",     "else",
    "enum",     "extends",    "final",     "finally",    "float",
    "for",      "goto",       "if",        "implements", "import",
    "instanceof", "int",      "interface", "long",       "native",
    "new",      "package",    "private",   "protected",  "public",
    "return",   "short",      "static",    "strictfp",   "super",
    "switch",   "synchronized", "this",    "throw",      "throws",
    "transient", "try",       "void",      "volatile",   "while",
    "true",     "false",      "null",
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower_or_digit(char c) { return (c >= 'a' && c <= 'z') || is_digit(c); }

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kNumber: return "number";
    case TokenKind::kString: return "string";
    case TokenKind::kSymbol: return "symbol";
    case TokenKind::kComment: return "comment";
    case TokenKind::kWhitespace: return "whitespace";
    case TokenKind::kNewline: return "newline";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  auto emit = [&](std::size_t start, std::size_t end, TokenKind kind) {
    out.push_back(Token{text.substr(start, end - start), kind, start});
  };
  while (i < n) {
    const char c = text[i];
    const std::size_t start = i;
    if (c == '\n') {
      emit(i, i + 1, TokenKind::kNewline);
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                       text[i] == '\f' || text[i] == '\v'))
        ++i;
      emit(start, i, TokenKind::kWhitespace);
    } else if (is_ident_start(c)) {
      while (i < n && is_ident_char(text[i])) ++i;
      auto word = text.substr(start, i - start);
      emit(start, i, is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier);
    } else if (is_digit(c)) {
      // Permissive: covers 0x1F, 10L, 1.5e10, 1_000.
      while (i < n) {
        const char d = text[i];
        if (is_ident_char(d)) {
          ++i;
        } else if (d == '.' && i + 1 < n && is_digit(text[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
      emit(start, i, TokenKind::kNumber);
    } else if (c == '"' || c == '\'') {
      ++i;
      while (i < n && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < n && text[i + 1] != '\n') {
          i += 2;
          continue;
        }
        if (text[i] == c) {
          ++i;
          break;
        }
        ++i;
      }
      emit(start, i, TokenKind::kString);
    } else if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      emit(start, i, TokenKind::kComment);
    } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      const auto close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? n : close + 2;
      emit(start, i, TokenKind::kComment);
    } else {
      emit(i, i + 1, TokenKind::kSymbol);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> subtokens(std::string_view identifier) {
  std::vector<std::string> parts;
  std::string cur;
  const std::size_t n = identifier.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = identifier[i];
    if (c == '_') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (!cur.empty() && is_upper(c)) {
      const char prev = identifier[i - 1];
      const bool lower_to_upper = is_lower_or_digit(prev);
      const bool acronym_end = is_upper(prev) && i + 1 < n &&
                               identifier[i + 1] >= 'a' && identifier[i + 1] <= 'z';
      if (lower_to_upper || acronym_end) {
        parts.push_back(std::move(cur));
        cur.clear();
      }
    }
    cur.push_back(c);
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

std::size_t trailing_identifier_length(std::string_view prefix) {
  std::size_t len = 0;
  while (len < prefix.size() && is_ident_char(prefix[prefix.size() - 1 - len]))
    ++len;
  // "x12" is an identifier; "12" and "0x1" are numbers.
  if (len > 0 && !is_ident_start(prefix[prefix.size() - len])) return 0;
  return len;
}

}  // namespace cce
