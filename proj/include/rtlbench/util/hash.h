#pragma once

#include <cstdint>
#include <string_view>

namespace rtlbench::util {

// Finalizer from the splitmix64 generator. Good avalanche, cheap, and
// stable across platforms, which is all the corpus pipeline needs.
inline uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t Fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// i-th member of a seeded family of 64-bit hash functions over 64-bit keys.
inline uint64_t SeededHash(uint64_t key, uint64_t seed, uint32_t index) {
  return Mix64(key ^ Mix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
}

}  // namespace rtlbench::util
