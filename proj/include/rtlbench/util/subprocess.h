#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rtlbench::util {

struct RunOptions {
  double timeout_s = 0;  // 0 = no limit
  std::optional<std::filesystem::path> cwd;
  size_t max_capture_bytes = 1 << 20;
};

struct RunResult {
  int exit_code = -1;
  bool timed_out = false;
  bool binary_missing = false;  // exec failed with ENOENT
  std::string out;
  std::string err;
  double duration_s = 0;

  bool ok() const { return !timed_out && !binary_missing && exit_code == 0; }
};

// Runs argv[0] with the given arguments, capturing stdout/stderr. On timeout
// the whole process group is killed. Never throws for child failures; only
// for unusable host state (pipe/fork failure).
RunResult RunProcess(const std::vector<std::string>& argv,
                     const RunOptions& options = {});

}  // namespace rtlbench::util
