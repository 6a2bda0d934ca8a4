#pragma once

#include <stdexcept>
#include <string>

namespace rtlbench::util {

// Exit-code-bearing error categories; the CLI maps these to its documented
// exit codes, library code throws them.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ToolMissingError : std::runtime_error {
  explicit ToolMissingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ReplayMissError : std::runtime_error {
  explicit ReplayMissError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BackendError : std::runtime_error {
  explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingDataError : std::runtime_error {
  explicit MissingDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rtlbench::util
