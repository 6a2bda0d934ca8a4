#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace rtlbench::corpus {

using ShingleSet = std::unordered_set<uint64_t>;

// Hashes of all consecutive `width`-grams over the normalized token stream
// (comments and whitespace dropped, token texts joined with a separator).
// Streams shorter than `width` tokens yield one shingle of the whole stream;
// an empty stream yields an empty set.
ShingleSet Shingle(std::string_view content, size_t width);

double ExactJaccard(const ShingleSet& a, const ShingleSet& b);

struct MinHashSignature {
  std::vector<uint64_t> values;
  uint64_t seed = 0;
  uint32_t shingle_width = 0;

  bool ComparableWith(const MinHashSignature& other) const {
    return seed == other.seed && shingle_width == other.shingle_width &&
           values.size() == other.values.size();
  }
};

// values[i] = min over shingles of the i-th seeded hash. Throws
// std::invalid_argument on an empty shingle set.
MinHashSignature ComputeMinHash(const ShingleSet& shingles, uint32_t perms,
                                uint64_t seed, uint32_t shingle_width);

// Fraction of agreeing positions. Throws std::invalid_argument for
// incomparable signatures.
double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b);

}  // namespace rtlbench::corpus
