#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace rtlbench::util {

// Minimal SHA-256 (FIPS 180-4). Used for content digests and run manifests;
// not a hot path.
class Sha256 {
 public:
  Sha256() { Reset(); }

  void Reset();
  void Update(std::string_view data);
  std::array<uint8_t, 32> Finish();

  static std::string HexDigest(std::string_view data);

 private:
  void ProcessBlock(const uint8_t* block);

  uint32_t state_[8];
  uint64_t total_len_ = 0;
  uint8_t buffer_[64];
  size_t buffer_len_ = 0;
};

std::string ToHex(const std::array<uint8_t, 32>& digest);

}  // namespace rtlbench::util
