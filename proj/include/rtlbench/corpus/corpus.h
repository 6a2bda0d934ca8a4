#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rtlbench::corpus {

struct SourceFile {
  std::string id;       // stable identifier (relative origin path)
  std::string origin;   // path or manifest line as given
  std::string content;  // sanitized UTF-8 text
  size_t char_count = 0;     // Unicode code points
  std::string content_hash;  // hex SHA-256 of content
};

struct IngestWarning {
  std::string origin;
  std::string message;
};

struct IngestResult {
  std::vector<SourceFile> files;  // sorted by origin
  std::vector<IngestWarning> warnings;
};

// Replaces invalid UTF-8 byte sequences with U+FFFD and counts code points.
std::string SanitizeUtf8(std::string_view bytes);
size_t CountCodePoints(std::string_view utf8);

SourceFile MakeSourceFile(std::string id, std::string origin,
                          std::string raw_bytes);

// Collects `.v` regular files under a directory (recursively) or listed in a
// manifest file, one path per line. Unreadable individual files are skipped
// with a warning; an unreadable root throws.
IngestResult Ingest(const std::filesystem::path& root);

// Same walk for pre-extracted plain-text (`.txt`) material.
IngestResult IngestText(const std::filesystem::path& root);

// Keeps files with at least one module/endmodule keyword pair.
std::vector<SourceFile> FilterModulePair(std::vector<SourceFile> files);
bool HasModulePair(const SourceFile& file);

// Keeps files with char_count < max_chars (the boundary value is removed).
std::vector<SourceFile> FilterSize(std::vector<SourceFile> files,
                                   size_t max_chars = 20000);

struct TrainingExample {
  std::string text;
  std::string source_id;
  uint32_t window_index = 0;
};

// Character windows starting at 0, stride, 2*stride, ...; the last window may
// be shorter. Windows slice code points, never the middle of a UTF-8
// sequence.
std::vector<TrainingExample> WindowText(const std::string& text,
                                        const std::string& source_id,
                                        size_t window, size_t stride);

// One JSON object per line: {"text", "source_id", "window_index"}.
size_t EmitCorpus(const std::vector<TrainingExample>& examples,
                  const std::filesystem::path& out_path);
std::vector<TrainingExample> ReadCorpus(const std::filesystem::path& path);

}  // namespace rtlbench::corpus
