#include "rtlbench/lex/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace rtlbench::vlex {

namespace {

const std::unordered_set<std::string_view>& KeywordSet() {
  // IEEE 1364-2005 Annex B reserved words.
  static const std::unordered_set<std::string_view> kKeywords = {
      "always", "and", "assign", "automatic", "begin", "buf", "bufif0",
      "bufif1", "case", "casex", "casez", "cell", "cmos", "config",
      "deassign", "default", "defparam", "design", "disable", "edge", "else",
      "end", "endcase", "endconfig", "endfunction", "endgenerate",
      "endmodule", "endprimitive", "endspecify", "endtable", "endtask",
      "event", "for", "force", "forever", "fork", "function", "generate",
      "genvar", "highz0", "highz1", "if", "ifnone", "incdir", "include",
      "initial", "inout", "input", "instance", "integer", "join", "large",
      "liblist", "library", "localparam", "macromodule", "medium", "module",
      "nand", "negedge", "nmos", "nor", "noshowcancelled", "not", "notif0",
      "notif1", "or", "output", "parameter", "pmos", "posedge", "primitive",
      "pull0", "pull1", "pulldown", "pullup", "pulsestyle_ondetect",
      "pulsestyle_onevent", "rcmos", "real", "realtime", "reg", "release",
      "repeat", "rnmos", "rpmos", "rtran", "rtranif0", "rtranif1", "scalared",
      "showcancelled", "signed", "small", "specify", "specparam", "strong0",
      "strong1", "supply0", "supply1", "table", "task", "time", "tran",
      "tranif0", "tranif1", "tri", "tri0", "tri1", "triand", "trior",
      "trireg", "unsigned", "use", "uwire", "vectored", "wait", "wand",
      "weak0", "weak1", "while", "wire", "wor", "xnor", "xor",
  };
  return kKeywords;
}

bool IsWs(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9') || c == '$';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsBaseChar(char c) {
  return c == 'd' || c == 'D' || c == 'b' || c == 'B' || c == 'o' ||
         c == 'O' || c == 'h' || c == 'H';
}

bool IsBasedDigit(char c) {
  return IsDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F') ||
         c == 'x' || c == 'X' || c == 'z' || c == 'Z' || c == '?' || c == '_';
}

bool IsOperatorChar(char c) {
  static constexpr std::string_view kOps = "+-*/%&|^~!=<>?:;,.()[]{}@#";
  return kOps.find(c) != std::string_view::npos;
}

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (pos_ < src_.size()) {
      tokens.push_back(Next());
    }
    return tokens;
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  Token Next() {
    const size_t start = pos_;
    const int start_line = line_;
    char c = src_[pos_];

    TokenKind kind;
    bool unterminated = false;

    if (IsWs(c)) {
      while (pos_ < src_.size() && IsWs(src_[pos_])) Advance();
      kind = TokenKind::kWhitespace;
    } else if (c == '/' && Peek(1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      kind = TokenKind::kLineComment;
    } else if (c == '/' && Peek(1) == '*') {
      Advance();
      Advance();
      unterminated = true;
      while (pos_ < src_.size()) {
        if (src_[pos_] == '*' && Peek(1) == '/') {
          Advance();
          Advance();
          unterminated = false;
          break;
        }
        Advance();
      }
      kind = TokenKind::kBlockComment;
    } else if (c == '"') {
      Advance();
      unterminated = true;
      while (pos_ < src_.size()) {
        char s = src_[pos_];
        if (s == '\\' && pos_ + 1 < src_.size()) {
          Advance();
          Advance();
          continue;
        }
        Advance();
        if (s == '"') {
          unterminated = false;
          break;
        }
      }
      kind = TokenKind::kStringLiteral;
    } else if (c == '\\') {
      Advance();
      while (pos_ < src_.size() && !IsWs(src_[pos_])) Advance();
      kind = TokenKind::kEscapedIdentifier;
    } else if (IsIdentStart(c)) {
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
      kind = IsVerilogKeyword(src_.substr(start, pos_ - start))
                 ? TokenKind::kKeyword
                 : TokenKind::kIdentifier;
    } else if (c == '$' && IsIdentChar(Peek(1))) {
      Advance();
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
      kind = TokenKind::kIdentifier;  // system task/function name
    } else if (IsDigit(c)) {
      while (pos_ < src_.size() && (IsDigit(src_[pos_]) || src_[pos_] == '_'))
        Advance();
      if (Peek() == '\'' && ScanBaseSuffix()) {
        // sized based literal, e.g. 4'd12
      } else if (Peek() == '.' && IsDigit(Peek(1))) {
        Advance();
        while (pos_ < src_.size() && (IsDigit(src_[pos_]) || src_[pos_] == '_'))
          Advance();
        ScanExponent();
      } else {
        ScanExponent();
      }
      kind = TokenKind::kNumber;
    } else if (c == '\'' &&
               (IsBaseChar(Peek(1)) ||
                ((Peek(1) == 's' || Peek(1) == 'S') && IsBaseChar(Peek(2))))) {
      ScanBaseSuffix();
      kind = TokenKind::kNumber;  // unsized based literal, e.g. 'd12
    } else if (c == '`' && IsIdentStart(Peek(1))) {
      Advance();
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
      kind = TokenKind::kUnknown;  // compiler directive; not expanded here
    } else if (IsOperatorChar(c)) {
      ScanOperator();
      kind = TokenKind::kOperator;
    } else {
      // Maximal run of bytes that cannot start any token.
      while (pos_ < src_.size() && !StartsToken(src_[pos_])) Advance();
      if (pos_ == start) Advance();  // lone ' or ` or \0 etc.
      kind = TokenKind::kUnknown;
    }

    Token t;
    t.kind = kind;
    t.begin = start;
    t.end = pos_;
    t.text = src_.substr(start, pos_ - start);
    t.line = start_line;
    t.unterminated = unterminated;
    return t;
  }

  // Consumes 'd / 'sb / 'hFF... starting at a quote; returns false (consuming
  // nothing) if the quote is not followed by a base designator.
  bool ScanBaseSuffix() {
    size_t probe = pos_ + 1;
    if (probe < src_.size() && (src_[probe] == 's' || src_[probe] == 'S'))
      ++probe;
    if (probe >= src_.size() || !IsBaseChar(src_[probe])) return false;
    while (pos_ <= probe) Advance();
    while (pos_ < src_.size() && IsBasedDigit(src_[pos_])) Advance();
    return true;
  }

  void ScanExponent() {
    if ((Peek() == 'e' || Peek() == 'E')) {
      size_t probe = pos_ + 1;
      if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-'))
        ++probe;
      if (probe < src_.size() && IsDigit(src_[probe])) {
        while (pos_ <= probe) Advance();
        while (pos_ < src_.size() && (IsDigit(src_[pos_]) || src_[pos_] == '_'))
          Advance();
      }
    }
  }

  void ScanOperator() {
    static constexpr std::array<std::string_view, 5> kOps3 = {
        "===", "!==", "<<<", ">>>", "&&&"};
    static constexpr std::array<std::string_view, 18> kOps2 = {
        "==", "!=", "<=", ">=", "<<", ">>", "&&", "||", "**",
        "~&", "~|", "~^", "^~", "=>", "->", "+:", "-:", "*>"};
    std::string_view rest = src_.substr(pos_);
    for (auto op : kOps3) {
      if (rest.substr(0, 3) == op) {
        Advance();
        Advance();
        Advance();
        return;
      }
    }
    for (auto op : kOps2) {
      if (rest.substr(0, 2) == op) {
        Advance();
        Advance();
        return;
      }
    }
    Advance();
  }

  static bool StartsToken(char c) {
    return IsWs(c) || IsIdentStart(c) || IsDigit(c) || c == '/' || c == '"' ||
           c == '\\' || c == '$' || c == '\'' || c == '`' || IsOperatorChar(c);
  }

  void Advance() {
    if (src_[pos_] == '\n') ++line_;
    ++pos_;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

bool IsVerilogKeyword(std::string_view word) {
  return KeywordSet().count(word) > 0;
}

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "Keyword";
    case TokenKind::kIdentifier: return "Identifier";
    case TokenKind::kEscapedIdentifier: return "EscapedIdentifier";
    case TokenKind::kNumber: return "Number";
    case TokenKind::kStringLiteral: return "StringLiteral";
    case TokenKind::kLineComment: return "LineComment";
    case TokenKind::kBlockComment: return "BlockComment";
    case TokenKind::kOperator: return "Operator";
    case TokenKind::kWhitespace: return "Whitespace";
    case TokenKind::kUnknown: return "Unknown";
  }
  return "?";
}

std::vector<Token> Tokenize(std::string_view source) {
  return Scanner(source).Run();
}

std::vector<ModulePair> FindModulePairs(const std::vector<Token>& tokens) {
  std::vector<ModulePair> pairs;
  std::vector<const Token*> open;
  size_t next_open = 0;
  for (const Token& t : tokens) {
    if (t.IsKeyword("module")) {
      open.push_back(&t);
    } else if (t.IsKeyword("endmodule") && next_open < open.size()) {
      const Token* m = open[next_open++];
      pairs.push_back({m->begin, m->end, t.begin, t.end});
    }
  }
  return pairs;
}

TruncateResult TruncateCompletion(std::string_view completion) {
  for (const Token& t : Tokenize(completion)) {
    if (t.IsKeyword("endmodule")) {
      return {std::string(completion.substr(0, t.end)), TruncateStatus::kClean};
    }
  }
  return {std::string(completion), TruncateStatus::kNoTerminator};
}

}  // namespace rtlbench::vlex
