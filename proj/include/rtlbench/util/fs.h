#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace rtlbench::util {

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

// Self-deleting unique directory under the system temp root.
class TempDir {
 public:
  explicit TempDir(std::string_view prefix = "rtlbench");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  void Keep() { keep_ = true; }

 private:
  std::filesystem::path path_;
  bool keep_ = false;
};

}  // namespace rtlbench::util
