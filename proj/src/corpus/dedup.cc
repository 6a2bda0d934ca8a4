#include "rtlbench/corpus/dedup.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "rtlbench/corpus/minhash.h"
#include "rtlbench/util/errors.h"
#include "rtlbench/util/hash.h"
#include "rtlbench/util/parallel.h"

namespace rtlbench::corpus {

namespace {

struct UnionFind {
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t Find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void Union(size_t a, size_t b) { parent[Find(a)] = Find(b); }
  std::vector<size_t> parent;
};

}  // namespace

DedupResult Dedup(std::vector<SourceFile> files, const DedupParams& params) {
  if (params.bands * params.rows != params.perms) {
    throw util::ConfigError("LSH bands*rows must equal perms");
  }
  const size_t n = files.size();

  // Per-file shingles and signatures; files that normalize to nothing are
  // kept as-is and never become dedup candidates.
  std::vector<ShingleSet> shingles(n);
  std::vector<MinHashSignature> sigs(n);
  std::vector<char> has_sig(n, 0);
  util::ParallelFor(n, params.workers, [&](size_t i) {
    shingles[i] = Shingle(files[i].content, params.shingle_width);
    if (!shingles[i].empty()) {
      sigs[i] = ComputeMinHash(shingles[i], params.perms, params.seed,
                               params.shingle_width);
      has_sig[i] = 1;
    }
  });

  // Banding: files sharing any band hash become candidate pairs.
  std::unordered_map<uint64_t, std::vector<size_t>> buckets;
  for (size_t i = 0; i < n; ++i) {
    if (!has_sig[i]) continue;
    for (uint32_t b = 0; b < params.bands; ++b) {
      uint64_t h = util::Mix64(b + 0x517cc1b727220a95ULL);
      for (uint32_t r = 0; r < params.rows; ++r) {
        h = util::Mix64(h ^ sigs[i].values[b * params.rows + r]);
      }
      buckets[h].push_back(i);
    }
  }

  std::set<std::pair<size_t, size_t>> candidates;
  for (auto& [h, members] : buckets) {
    if (members.size() < 2) continue;
    for (size_t x = 0; x < members.size(); ++x) {
      for (size_t y = x + 1; y < members.size(); ++y) {
        auto a = std::min(members[x], members[y]);
        auto b = std::max(members[x], members[y]);
        if (a != b) candidates.insert({a, b});
      }
    }
  }

  UnionFind uf(n);
  std::vector<DuplicateEdge> edges;
  for (auto [a, b] : candidates) {
    double est = EstimateJaccard(sigs[a], sigs[b]);
    if (est < params.threshold) continue;
    if (params.verify_exact &&
        ExactJaccard(shingles[a], shingles[b]) < params.threshold) {
      continue;
    }
    uf.Union(a, b);
    edges.push_back({files[a].id, files[b].id, est});
  }

  // Group members by root; the representative is the smallest origin.
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < n; ++i) groups[uf.Find(i)].push_back(i);

  std::vector<char> keep(n, 0);
  DedupResult result;
  for (auto& [root, members] : groups) {
    size_t rep = *std::min_element(members.begin(), members.end(),
                                   [&](size_t a, size_t b) {
                                     return files[a].origin < files[b].origin;
                                   });
    keep[rep] = 1;
    if (members.size() < 2) continue;
    DuplicateCluster cluster;
    cluster.representative = files[rep].id;
    for (size_t m : members) cluster.members.push_back(files[m].id);
    std::sort(cluster.members.begin(), cluster.members.end());
    for (const auto& e : edges) {
      bool in_cluster = false;
      for (size_t m : members) {
        if (files[m].id == e.a) in_cluster = true;
      }
      if (in_cluster) cluster.edges.push_back(e);
    }
    result.report.clusters.push_back(std::move(cluster));
  }
  std::sort(result.report.clusters.begin(), result.report.clusters.end(),
            [](const DuplicateCluster& a, const DuplicateCluster& b) {
              return a.representative < b.representative;
            });

  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) result.kept.push_back(std::move(files[i]));
  }
  result.report.kept = result.kept.size();
  result.report.removed = n - result.kept.size();
  return result;
}

std::string DedupReportToJson(const DedupReport& report) {
  nlohmann::ordered_json j;
  j["kept"] = report.kept;
  j["removed"] = report.removed;
  j["clusters"] = nlohmann::ordered_json::array();
  for (const auto& c : report.clusters) {
    nlohmann::ordered_json jc;
    jc["representative"] = c.representative;
    jc["members"] = c.members;
    jc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : c.edges) {
      jc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"estimate", e.estimate}});
    }
    j["clusters"].push_back(std::move(jc));
  }
  return j.dump(2);
}

}  // namespace rtlbench::corpus
