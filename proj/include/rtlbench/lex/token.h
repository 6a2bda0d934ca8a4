#pragma once

#include <cstddef>
#include <string_view>

namespace rtlbench::vlex {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kEscapedIdentifier,
  kNumber,
  kStringLiteral,
  kLineComment,
  kBlockComment,
  kOperator,
  kWhitespace,
  kUnknown,
};

// One lexical token. `text` is a view into the source passed to Tokenize();
// concatenating the texts of a token stream in order reproduces the source
// byte for byte.
struct Token {
  TokenKind kind = TokenKind::kUnknown;
  std::string_view text;
  size_t begin = 0;  // byte offset, inclusive
  size_t end = 0;    // byte offset, exclusive
  int line = 1;      // 1-based line of the first byte
  bool unterminated = false;  // block comment / string that ran to end of input

  bool IsKeyword(std::string_view kw) const {
    return kind == TokenKind::kKeyword && text == kw;
  }
};

const char* TokenKindName(TokenKind kind);

// Reserved-word check against the Verilog-2005 keyword set. SystemVerilog-only
// keywords are not included and lex as identifiers.
bool IsVerilogKeyword(std::string_view word);

}  // namespace rtlbench::vlex
