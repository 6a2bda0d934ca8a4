#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtlbench/corpus/corpus.h"

namespace rtlbench::corpus {

struct DedupParams {
  double threshold = 0.85;
  uint32_t perms = 128;
  uint32_t bands = 16;  // bands * rows must equal perms
  uint32_t rows = 8;
  uint32_t shingle_width = 5;
  uint64_t seed = 1;
  bool verify_exact = false;  // re-check LSH candidates with exact Jaccard
  unsigned workers = 0;       // 0 = hardware concurrency
};

struct DuplicateEdge {
  std::string a;
  std::string b;
  double estimate = 0;
};

struct DuplicateCluster {
  std::string representative;        // kept member (smallest origin)
  std::vector<std::string> members;  // all ids, representative included
  std::vector<DuplicateEdge> edges;  // pairs that joined the cluster
};

struct DedupReport {
  size_t kept = 0;
  size_t removed = 0;
  std::vector<DuplicateCluster> clusters;
};

struct DedupResult {
  std::vector<SourceFile> kept;
  DedupReport report;
};

// LSH banding proposes candidate pairs; pairs at or above the threshold are
// clustered with union-find and one representative per cluster is kept.
// kept + removed always equals the input count.
DedupResult Dedup(std::vector<SourceFile> files, const DedupParams& params);

std::string DedupReportToJson(const DedupReport& report);

}  // namespace rtlbench::corpus
