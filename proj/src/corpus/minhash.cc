#include "rtlbench/corpus/minhash.h"

#include <limits>
#include <stdexcept>
#include <string>

#include "rtlbench/lex/lexer.h"
#include "rtlbench/util/hash.h"

namespace rtlbench::corpus {

namespace {

// Unit separator keeps "ab c" and "a bc" from shingling identically.
constexpr char kSep = '\x1e';

}  // namespace

ShingleSet Shingle(std::string_view content, size_t width) {
  if (width == 0) throw std::invalid_argument("shingle width must be >= 1");
  std::vector<std::string_view> stream;
  for (const auto& t : vlex::Tokenize(content)) {
    switch (t.kind) {
      case vlex::TokenKind::kWhitespace:
      case vlex::TokenKind::kLineComment:
      case vlex::TokenKind::kBlockComment:
        break;
      default:
        stream.push_back(t.text);
    }
  }
  ShingleSet shingles;
  if (stream.empty()) return shingles;
  const size_t gram = std::min(width, stream.size());
  for (size_t i = 0; i + gram <= stream.size(); ++i) {
    std::string joined;
    for (size_t k = 0; k < gram; ++k) {
      if (k > 0) joined.push_back(kSep);
      joined.append(stream[i + k]);
    }
    shingles.insert(util::Fnv1a64(joined));
  }
  return shingles;
}

double ExactJaccard(const ShingleSet& a, const ShingleSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  size_t inter = 0;
  const ShingleSet& small = a.size() <= b.size() ? a : b;
  const ShingleSet& large = a.size() <= b.size() ? b : a;
  for (uint64_t s : small) {
    if (large.count(s)) ++inter;
  }
  size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 1.0 : double(inter) / double(uni);
}

MinHashSignature ComputeMinHash(const ShingleSet& shingles, uint32_t perms,
                                uint64_t seed, uint32_t shingle_width) {
  if (shingles.empty()) {
    throw std::invalid_argument("minhash of an empty shingle set");
  }
  if (perms == 0) throw std::invalid_argument("perms must be >= 1");
  MinHashSignature sig;
  sig.seed = seed;
  sig.shingle_width = shingle_width;
  sig.values.assign(perms, std::numeric_limits<uint64_t>::max());
  for (uint64_t s : shingles) {
    for (uint32_t i = 0; i < perms; ++i) {
      uint64_t h = util::SeededHash(s, seed, i);
      if (h < sig.values[i]) sig.values[i] = h;
    }
  }
  return sig;
}

double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b) {
  if (!a.ComparableWith(b)) {
    throw std::invalid_argument(
        "incomparable signatures (seed/perms/shingle width differ)");
  }
  size_t agree = 0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] == b.values[i]) ++agree;
  }
  return double(agree) / double(a.values.size());
}

}  // namespace rtlbench::corpus
