#include "rtlbench/corpus/corpus.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>
#include <string>

#include "rtlbench/corpus/dedup.h"
#include "rtlbench/corpus/minhash.h"
#include "rtlbench/util/errors.h"
#include "rtlbench/util/fs.h"
#include "support/synth_corpus.h"

using namespace rtlbench;
using namespace rtlbench::corpus;
namespace fs = std::filesystem;

namespace {

SourceFile File(const std::string& id, const std::string& content) {
  return MakeSourceFile(id, id, content);
}

// Brute-force w-gram Jaccard over whitespace-split tokens; the test-side
// oracle deliberately avoids the lexer and hashing used by Shingle().
double BruteForceJaccard(const std::string& a, const std::string& b, size_t w) {
  auto grams = [&](const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : s) {
      if (isspace((unsigned char)c) || c == '(' || c == ')' || c == ';' ||
          c == ',' || c == '=' || c == '&' || c == '|') {
        if (!cur.empty()) toks.push_back(cur);
        cur.clear();
        if (!isspace((unsigned char)c)) toks.push_back(std::string(1, c));
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) toks.push_back(cur);
    std::set<std::string> out;
    if (toks.size() <= w) {
      std::string g;
      for (auto& t : toks) g += t + "\x01";
      out.insert(g);
      return out;
    }
    for (size_t i = 0; i + w <= toks.size(); ++i) {
      std::string g;
      for (size_t k = 0; k < w; ++k) g += toks[i + k] + "\x01";
      out.insert(g);
    }
    return out;
  };
  auto ga = grams(a), gb = grams(b);
  size_t inter = 0;
  for (auto& g : ga) inter += gb.count(g);
  return double(inter) / double(ga.size() + gb.size() - inter);
}

TEST(Ingest, ExtensionFilter) {
  util::TempDir dir;
  util::WriteFile(dir.path() / "a.v", "module m; endmodule\n");
  util::WriteFile(dir.path() / "b.sv", "module m; endmodule\n");
  util::WriteFile(dir.path() / "c.txt", "some text\n");
  auto result = Ingest(dir.path());
  ASSERT_EQ(result.files.size(), 1u);
  EXPECT_EQ(result.files[0].id, "a.v");
  EXPECT_TRUE(result.warnings.empty());
}

TEST(Ingest, EmptyDirectory) {
  util::TempDir dir;
  EXPECT_TRUE(Ingest(dir.path()).files.empty());
}

TEST(Ingest, MissingRootIsFatal) {
  EXPECT_THROW(Ingest("/nonexistent/rtlbench-test-root"), util::IoError);
}

TEST(Ingest, IdenticalContentsShareHash) {
  util::TempDir dir;
  for (const char* name : {"x.v", "y.v", "z.v"}) {
    util::WriteFile(dir.path() / name, "module m; endmodule\n");
  }
  auto result = Ingest(dir.path());
  ASSERT_EQ(result.files.size(), 3u);
  EXPECT_EQ(result.files[0].content_hash, result.files[1].content_hash);
  EXPECT_EQ(result.files[1].content_hash, result.files[2].content_hash);
}

TEST(Ingest, SortedAndRecursive) {
  util::TempDir dir;
  fs::create_directories(dir.path() / "sub");
  util::WriteFile(dir.path() / "sub/b.v", "module b; endmodule\n");
  util::WriteFile(dir.path() / "a.v", "module a; endmodule\n");
  auto result = Ingest(dir.path());
  ASSERT_EQ(result.files.size(), 2u);
  EXPECT_EQ(result.files[0].id, "a.v");
  EXPECT_EQ(result.files[1].id, "sub/b.v");
}

TEST(Ingest, ManifestMode) {
  util::TempDir dir;
  util::WriteFile(dir.path() / "a.v", "module a; endmodule\n");
  util::WriteFile(dir.path() / "skip.txt", "not verilog\n");
  fs::create_directories(dir.path() / "dir.v");
  std::string manifest = (dir.path() / "a.v").string() + "\n" +
                         (dir.path() / "skip.txt").string() + "\n" +
                         (dir.path() / "dir.v").string() + "\n" +
                         (dir.path() / "gone.v").string() + "\n";
  util::WriteFile(dir.path() / "manifest.txt", manifest);
  auto result = Ingest(dir.path() / "manifest.txt");
  ASSERT_EQ(result.files.size(), 1u);
  EXPECT_EQ(result.files[0].origin, (dir.path() / "a.v").string());
  EXPECT_EQ(result.warnings.size(), 2u);  // directory + missing file
}

TEST(Ingest, InvalidBytesReplaced) {
  util::TempDir dir;
  util::WriteFile(dir.path() / "bad.v", "module m; // \xFF\xFE\nendmodule\n");
  auto result = Ingest(dir.path());
  ASSERT_EQ(result.files.size(), 1u);
  EXPECT_EQ(result.files[0].content.find('\xFF'), std::string::npos);
  EXPECT_NE(result.files[0].content.find("\xef\xbf\xbd"), std::string::npos);
}

TEST(FilterModulePair, Examples) {
  EXPECT_TRUE(HasModulePair(File("a", "module m; endmodule")));
  EXPECT_FALSE(HasModulePair(File("b", "`timescale 1ns/1ps\nwire w;")));
  EXPECT_FALSE(HasModulePair(File("c", "/* module x; endmodule */ wire w;")));
  EXPECT_FALSE(HasModulePair(File("d", "module only_open;")));
}

TEST(FilterSize, Boundary) {
  std::vector<SourceFile> files;
  files.push_back(File("small", std::string(19999, 'a')));
  files.push_back(File("exact", std::string(20000, 'a')));
  files.push_back(File("empty", ""));
  auto kept = FilterSize(std::move(files));
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].id, "small");
  EXPECT_EQ(kept[1].id, "empty");
}

TEST(FilterSize, CharCountIsCodePoints) {
  // 19999 code points that occupy >20000 bytes must still be kept.
  std::string s;
  for (int i = 0; i < 19999; ++i) s += "\xc3\xa9";  // 'é'
  auto f = File("utf8", s);
  EXPECT_EQ(f.char_count, 19999u);
  EXPECT_EQ(FilterSize({f}).size(), 1u);
}

TEST(Filters, MonotoneAndIdempotent) {
  std::mt19937_64 rng(7);
  std::vector<SourceFile> files;
  for (int i = 0; i < 20; ++i) {
    files.push_back(File("f" + std::to_string(i),
                         testsupport::MakeRandomVerilogFile(rng)));
  }
  files.push_back(File("nopair", "wire w;\n"));
  files.push_back(File("big", "module m; endmodule" + std::string(30000, ' ')));
  auto once = FilterSize(FilterModulePair(files));
  auto twice = FilterSize(FilterModulePair(once));
  ASSERT_EQ(once.size(), twice.size());
  EXPECT_LE(once.size(), files.size());
  for (size_t i = 0; i < once.size(); ++i) {
    EXPECT_EQ(once[i].id, twice[i].id);
  }
}

TEST(Shingle, NormalizationIgnoresCommentsAndWhitespace) {
  auto a = Shingle("module m;\n  assign y = a & b;\nendmodule\n", 5);
  auto b = Shingle("module m; /* noise */ assign y=a&b; // c\nendmodule", 5);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
}

TEST(Shingle, ShortStreamYieldsOneShingle) {
  EXPECT_EQ(Shingle("wire w;", 5).size(), 1u);
  EXPECT_TRUE(Shingle("// only a comment\n", 5).empty());
}

TEST(Shingle, MatchesBruteForceJaccard) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = testsupport::MakeRandomVerilogFile(rng);
    auto b = testsupport::MutateOneToken(a, rng);
    double brute = BruteForceJaccard(a, b, 5);
    double exact = ExactJaccard(Shingle(a, 5), Shingle(b, 5));
    EXPECT_NEAR(exact, brute, 1e-9) << "trial " << trial;
  }
}

TEST(MinHash, EqualSetsEqualSignatures) {
  ShingleSet s = {1, 2, 3, 99, 12345};
  auto a = ComputeMinHash(s, 128, 42, 5);
  auto b = ComputeMinHash(s, 128, 42, 5);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(EstimateJaccard(a, b), 1.0);
}

TEST(MinHash, InsertionOrderInsensitive) {
  ShingleSet fwd, rev;
  for (uint64_t i = 0; i < 100; ++i) fwd.insert(i * 977 + 13);
  for (uint64_t i = 100; i-- > 0;) rev.insert(i * 977 + 13);
  EXPECT_EQ(ComputeMinHash(fwd, 64, 1, 5).values,
            ComputeMinHash(rev, 64, 1, 5).values);
}

TEST(MinHash, EmptySetRejected) {
  EXPECT_THROW(ComputeMinHash({}, 128, 1, 5), std::invalid_argument);
}

TEST(MinHash, IncomparableSignaturesRejected) {
  ShingleSet s = {1, 2, 3};
  auto a = ComputeMinHash(s, 128, 1, 5);
  auto b = ComputeMinHash(s, 128, 2, 5);
  auto c = ComputeMinHash(s, 64, 1, 5);
  auto d = ComputeMinHash(s, 128, 1, 7);
  EXPECT_THROW(EstimateJaccard(a, b), std::invalid_argument);
  EXPECT_THROW(EstimateJaccard(a, c), std::invalid_argument);
  EXPECT_THROW(EstimateJaccard(a, d), std::invalid_argument);
}

TEST(MinHash, ThirdJaccardEstimateAtP512) {
  // |A∩B| = 1, |A∪B| = 3: exact Jaccard 1/3 by enumeration.
  ShingleSet a = {111, 222};
  ShingleSet b = {222, 333};
  double sum = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    sum += EstimateJaccard(ComputeMinHash(a, 512, seed, 5),
                           ComputeMinHash(b, 512, seed, 5));
  }
  EXPECT_NEAR(sum / 20.0, 1.0 / 3.0, 0.1);
}

TEST(MinHash, DisjointSetsEstimateNearZero) {
  std::mt19937_64 rng(5);
  ShingleSet a, b;
  for (int i = 0; i < 2000; ++i) a.insert(rng());
  for (int i = 0; i < 2000; ++i) b.insert(rng());
  EXPECT_EQ(ExactJaccard(a, b), 0.0);  // brute force: disjoint
  double est = EstimateJaccard(ComputeMinHash(a, 128, 3, 5),
                               ComputeMinHash(b, 128, 3, 5));
  EXPECT_LE(est, 0.05);
}

TEST(MinHash, PlantedNinetyPercentOverlap) {
  ShingleSet a, b;
  for (uint64_t i = 0; i < 900; ++i) {
    a.insert(i);
    b.insert(i);
  }
  for (uint64_t i = 0; i < 50; ++i) a.insert(10000 + i);
  for (uint64_t i = 0; i < 50; ++i) b.insert(20000 + i);
  double exact = ExactJaccard(a, b);
  ASSERT_DOUBLE_EQ(exact, 0.9);  // 900 / 1000 by enumeration
  double est = EstimateJaccard(ComputeMinHash(a, 128, 9, 5),
                               ComputeMinHash(b, 128, 9, 5));
  EXPECT_GE(est, 0.8);
  EXPECT_LE(est, 1.0);
}

TEST(MinHash, UnbiasednessOverSeeds) {
  // mean |estimate - exact| <= 2/sqrt(P) across >= 20 seeds.
  std::mt19937_64 rng(17);
  auto base = testsupport::MakeRandomVerilogFile(rng);
  auto near = testsupport::MutateOneToken(base, rng);
  auto sa = Shingle(base, 5);
  auto sb = Shingle(near, 5);
  double exact = ExactJaccard(sa, sb);
  const uint32_t perms = 128;
  double err_sum = 0;
  const int seeds = 20;
  for (int seed = 0; seed < seeds; ++seed) {
    double est = EstimateJaccard(ComputeMinHash(sa, perms, seed, 5),
                                 ComputeMinHash(sb, perms, seed, 5));
    err_sum += std::abs(est - exact);
  }
  EXPECT_LE(err_sum / seeds, 2.0 / std::sqrt(double(perms)));
}

TEST(Dedup, DistinctCorpusKeepsEverything) {
  std::mt19937_64 rng(23);
  std::vector<SourceFile> files;
  for (int i = 0; i < 30; ++i) {
    files.push_back(File("f" + std::to_string(i),
                         testsupport::MakeRandomVerilogFile(rng)));
  }
  // Brute-force all-pairs: the fixture really is pairwise distinct.
  for (size_t i = 0; i < files.size(); ++i) {
    for (size_t j = i + 1; j < files.size(); ++j) {
      ASSERT_LT(ExactJaccard(Shingle(files[i].content, 5),
                             Shingle(files[j].content, 5)),
                0.3);
    }
  }
  auto result = Dedup(files, {});
  EXPECT_EQ(result.kept.size(), files.size());
  EXPECT_EQ(result.report.removed, 0u);
  EXPECT_TRUE(result.report.clusters.empty());
}

TEST(Dedup, ExactCopiesCollapse) {
  std::mt19937_64 rng(29);
  auto text = testsupport::MakeRandomVerilogFile(rng);
  std::vector<SourceFile> files;
  for (int i = 0; i < 5; ++i) {
    files.push_back(File("copy" + std::to_string(i) + ".v", text));
  }
  auto result = Dedup(files, {});
  EXPECT_EQ(result.kept.size(), 1u);
  EXPECT_EQ(result.kept[0].id, "copy0.v");
  EXPECT_EQ(result.report.removed, 4u);
  ASSERT_EQ(result.report.clusters.size(), 1u);
  EXPECT_EQ(result.report.clusters[0].members.size(), 5u);
}

TEST(Dedup, PlantedNearDuplicateClusters) {
  std::mt19937_64 rng(31);
  std::vector<SourceFile> files;
  for (int i = 0; i < 10; ++i) {
    files.push_back(File("f" + std::to_string(i),
                         testsupport::MakeRandomVerilogFile(rng)));
  }
  auto mutated = testsupport::MutateOneToken(files[3].content, rng);
  ASSERT_GT(ExactJaccard(Shingle(files[3].content, 5), Shingle(mutated, 5)),
            0.85);  // enumeration, not estimate
  files.push_back(File("f3_fork", mutated));
  auto result = Dedup(files, {});
  EXPECT_EQ(result.report.removed, 1u);
  ASSERT_EQ(result.report.clusters.size(), 1u);
  EXPECT_EQ(result.report.clusters[0].members,
            (std::vector<std::string>{"f3", "f3_fork"}));
}

TEST(Dedup, ConservationAndEmptyNormalization) {
  std::vector<SourceFile> files;
  files.push_back(File("only_comment.v", "// nothing else\n"));
  files.push_back(File("real.v", "module m; endmodule\n"));
  auto result = Dedup(files, {});
  EXPECT_EQ(result.report.kept + result.report.removed, files.size());
  EXPECT_EQ(result.kept.size(), 2u);  // comment-only file is not a candidate
}

TEST(Window, StartsAtStrideMultiples) {
  auto ws = WindowText("0123456789", "s", 4, 2);
  ASSERT_EQ(ws.size(), 5u);
  EXPECT_EQ(ws[0].text, "0123");
  EXPECT_EQ(ws[1].text, "2345");
  EXPECT_EQ(ws[4].text, "89");
  EXPECT_EQ(ws[4].window_index, 4u);
}

TEST(Window, StrideEqualsWindowPartitions) {
  auto ws = WindowText("abcdefghij", "s", 4, 4);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[0].text + ws[1].text + ws[2].text, "abcdefghij");
}

TEST(Window, ShortTextSingleWindow) {
  auto ws = WindowText("abc", "s", 10, 5);
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws[0].text, "abc");
}

TEST(Window, FullCoverage) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    size_t len = rng() % 100 + 1;
    size_t window = rng() % 20 + 1;
    size_t stride = rng() % window + 1;
    std::string text;
    for (size_t i = 0; i < len; ++i) text.push_back('a' + i % 26);
    auto ws = WindowText(text, "s", window, stride);
    std::vector<char> covered(len, 0);
    for (auto& w : ws) {
      size_t at = (len <= window) ? 0 : size_t(w.window_index) * stride;
      ASSERT_EQ(text.substr(at, w.text.size()), w.text);
      for (size_t k = 0; k < w.text.size(); ++k) covered[at + k] = 1;
    }
    for (size_t i = 0; i < len; ++i) {
      EXPECT_TRUE(covered[i]) << "char " << i << " uncovered, trial " << trial;
    }
  }
}

TEST(Emit, EmptyAndRoundTrip) {
  util::TempDir dir;
  auto path = dir.path() / "corpus.jsonl";
  EXPECT_EQ(EmitCorpus({}, path), 0u);
  EXPECT_EQ(util::ReadFile(path), "");

  std::vector<TrainingExample> examples = {
      {"module m; endmodule\n", "a.v", 0},
      {"text with \"quotes\" and \xe2\x82\xac", "b.txt", 1},
      {"", "c.v", 2},
  };
  EXPECT_EQ(EmitCorpus(examples, path), 3u);
  auto back = ReadCorpus(path);
  ASSERT_EQ(back.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].text, examples[i].text);
    EXPECT_EQ(back[i].source_id, examples[i].source_id);
    EXPECT_EQ(back[i].window_index, examples[i].window_index);
  }
}

TEST(Dedup, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(41);
  std::vector<SourceFile> files;
  for (int i = 0; i < 40; ++i) {
    auto text = testsupport::MakeRandomVerilogFile(rng);
    files.push_back(File("f" + std::to_string(i), text));
    if (i % 7 == 0) files.push_back(File("f" + std::to_string(i) + "_dup", text));
  }
  DedupParams one;
  one.workers = 1;
  DedupParams many;
  many.workers = 8;
  auto r1 = Dedup(files, one);
  auto r2 = Dedup(files, many);
  ASSERT_EQ(r1.kept.size(), r2.kept.size());
  for (size_t i = 0; i < r1.kept.size(); ++i) {
    EXPECT_EQ(r1.kept[i].id, r2.kept[i].id);
  }
  EXPECT_EQ(DedupReportToJson(r1.report), DedupReportToJson(r2.report));
}

}  // namespace
