#include "rtlbench/corpus/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rtlbench/lex/lexer.h"
#include "rtlbench/util/errors.h"
#include "rtlbench/util/fs.h"
#include "rtlbench/util/sha256.h"
#include "rtlbench/util/strings.h"

namespace rtlbench::corpus {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Length of the UTF-8 sequence introduced by `lead`, or 0 if `lead` cannot
// start one.
int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 0;
}

bool IsContinuation(unsigned char c) { return (c & 0xc0) == 0x80; }

constexpr std::string_view kReplacement = "\xef\xbf\xbd";  // U+FFFD

IngestResult IngestWithExtension(const fs::path& root,
                                 std::string_view extension) {
  IngestResult result;
  std::error_code ec;
  auto status = fs::status(root, ec);
  if (ec || !fs::exists(status)) {
    throw util::IoError("ingest root does not exist: " + root.string());
  }

  std::vector<std::pair<std::string, fs::path>> found;  // (origin, path)
  if (fs::is_regular_file(status)) {
    // Manifest: one path per line.
    std::istringstream lines(util::ReadFile(root));
    std::string line;
    while (std::getline(lines, line)) {
      auto trimmed = util::Trim(line);
      if (trimmed.empty()) continue;
      found.emplace_back(trimmed, fs::path(trimmed));
    }
  } else if (fs::is_directory(status)) {
    for (auto it = fs::recursive_directory_iterator(
             root, fs::directory_options::skip_permission_denied);
         it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file(ec)) continue;
      auto rel = fs::relative(it->path(), root, ec);
      found.emplace_back(ec ? it->path().generic_string() : rel.generic_string(),
                         it->path());
    }
  } else {
    throw util::IoError("ingest root is neither directory nor file: " +
                        root.string());
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first;
                          }),
              found.end());

  for (auto& [origin, path] : found) {
    if (path.extension().string() != extension) continue;
    if (!fs::is_regular_file(path, ec)) {
      result.warnings.push_back({origin, "not a regular file"});
      continue;
    }
    try {
      result.files.push_back(
          MakeSourceFile(origin, origin, util::ReadFile(path)));
    } catch (const util::IoError& e) {
      result.warnings.push_back({origin, e.what()});
    }
  }
  return result;
}

}  // namespace

std::string SanitizeUtf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    unsigned char lead = bytes[i];
    int len = SequenceLength(lead);
    if (len == 1) {
      out.push_back(char(lead));
      ++i;
      continue;
    }
    bool valid = len > 0 && i + len <= bytes.size();
    for (int k = 1; valid && k < len; ++k) {
      valid = IsContinuation(bytes[i + k]);
    }
    if (valid) {
      out.append(bytes.substr(i, len));
      i += len;
    } else {
      out.append(kReplacement);
      ++i;
    }
  }
  return out;
}

size_t CountCodePoints(std::string_view utf8) {
  size_t n = 0;
  for (unsigned char c : utf8) {
    if (!IsContinuation(c)) ++n;
  }
  return n;
}

SourceFile MakeSourceFile(std::string id, std::string origin,
                          std::string raw_bytes) {
  SourceFile f;
  f.id = std::move(id);
  f.origin = std::move(origin);
  f.content = SanitizeUtf8(raw_bytes);
  f.char_count = CountCodePoints(f.content);
  f.content_hash = util::Sha256::HexDigest(f.content);
  return f;
}

IngestResult Ingest(const fs::path& root) {
  return IngestWithExtension(root, ".v");
}

IngestResult IngestText(const fs::path& root) {
  return IngestWithExtension(root, ".txt");
}

bool HasModulePair(const SourceFile& file) {
  return !vlex::FindModulePairs(vlex::Tokenize(file.content)).empty();
}

std::vector<SourceFile> FilterModulePair(std::vector<SourceFile> files) {
  std::erase_if(files, [](const SourceFile& f) { return !HasModulePair(f); });
  return files;
}

std::vector<SourceFile> FilterSize(std::vector<SourceFile> files,
                                   size_t max_chars) {
  std::erase_if(files,
                [&](const SourceFile& f) { return f.char_count >= max_chars; });
  return files;
}

std::vector<TrainingExample> WindowText(const std::string& text,
                                        const std::string& source_id,
                                        size_t window, size_t stride) {
  if (stride == 0 || stride > window) {
    throw util::ConfigError("window stride must satisfy 0 < stride <= window");
  }
  // Code-point boundaries so windows never split a multi-byte sequence.
  std::vector<size_t> starts;  // byte offset of each code point
  for (size_t i = 0; i < text.size(); ++i) {
    if (!IsContinuation(text[i])) starts.push_back(i);
  }
  starts.push_back(text.size());
  const size_t n_points = starts.size() - 1;

  std::vector<TrainingExample> out;
  if (n_points <= window) {
    out.push_back({text, source_id, 0});
    return out;
  }
  uint32_t index = 0;
  for (size_t begin = 0; begin < n_points; begin += stride) {
    size_t end = std::min(begin + window, n_points);
    out.push_back({text.substr(starts[begin], starts[end] - starts[begin]),
                   source_id, index++});
  }
  return out;
}

size_t EmitCorpus(const std::vector<TrainingExample>& examples,
                  const fs::path& out_path) {
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw util::IoError("cannot write " + out_path.string());
  size_t count = 0;
  for (const auto& ex : examples) {
    ordered_json record;
    record["text"] = ex.text;
    record["source_id"] = ex.source_id;
    record["window_index"] = ex.window_index;
    out << record.dump() << '\n';
    ++count;
  }
  out.flush();
  if (!out) {
    out.close();
    std::error_code ec;
    fs::remove(out_path, ec);
    throw util::IoError("write failed for " + out_path.string());
  }
  return count;
}

std::vector<TrainingExample> ReadCorpus(const fs::path& path) {
  std::istringstream lines(util::ReadFile(path));
  std::vector<TrainingExample> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (util::Trim(line).empty()) continue;
    ordered_json record = ordered_json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("text")) {
      throw util::IoError("corpus parse error at " + path.string() + ":" +
                          std::to_string(lineno));
    }
    out.push_back({record["text"].get<std::string>(),
                   record.value("source_id", std::string()),
                   record.value("window_index", 0u)});
  }
  return out;
}

}  // namespace rtlbench::corpus
