#include "rtlbench/util/fs.h"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rtlbench/util/errors.h"

namespace rtlbench::util {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path.string());
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    throw IoError("write failed for " + path.string());
  }
}

TempDir::TempDir(std::string_view prefix) {
  auto tmpl = (std::filesystem::temp_directory_path() /
               (std::string(prefix) + ".XXXXXX"))
                  .string();
  if (!mkdtemp(tmpl.data())) throw IoError("mkdtemp failed for " + tmpl);
  path_ = tmpl;
}

TempDir::~TempDir() {
  if (!keep_ && !path_.empty()) {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
}

}  // namespace rtlbench::util
