#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rtlbench/lex/token.h"

namespace rtlbench::vlex {

// Total tokenizer: never rejects. Malformed constructs degrade to kUnknown
// tokens; comments, strings, based numbers, and escaped identifiers are each
// one token. Tokens view into `source`, which must outlive them.
std::vector<Token> Tokenize(std::string_view source);

// A module/endmodule keyword pair. Pairs are matched first-in-first-out over
// keyword tokens only, so text inside comments or strings never counts.
struct ModulePair {
  size_t module_begin = 0;
  size_t module_end = 0;
  size_t endmodule_begin = 0;
  size_t endmodule_end = 0;
};

std::vector<ModulePair> FindModulePairs(const std::vector<Token>& tokens);

enum class TruncateStatus { kClean, kNoTerminator };

struct TruncateResult {
  std::string truncated;  // always a byte prefix of the input
  TruncateStatus status = TruncateStatus::kNoTerminator;
};

// Cuts a raw completion immediately after its first `endmodule` keyword
// token. Comments and strings are shielded by the tokenizer; with no
// terminator the completion is returned unchanged.
TruncateResult TruncateCompletion(std::string_view completion);

}  // namespace rtlbench::vlex
