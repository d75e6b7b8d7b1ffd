#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wre/curve_io.hpp"
#include "wre/dataset.hpp"
#include "wre/error.hpp"
#include "wre/filter.hpp"

using namespace wre;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("wre_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DatasetManifest group_manifest(const std::vector<std::pair<std::string, std::size_t>>& groups) {
  DatasetManifest m;
  for (const auto& [family, count] : groups)
    for (std::size_t i = 0; i < count; ++i) m.samples.push_back({family + std::to_string(i), "", "", family, 4, 10, i, Split::Train});
  return m;
}

std::array<std::size_t, 3> counts(const DatasetManifest& m, const std::string& family = "") {
  std::array<std::size_t, 3> c{};
  for (const auto& s : m.samples)
    if (family.empty() || s.family == family) ++c[static_cast<std::size_t>(s.split)];
  return c;
}

CorpusOptions small_options(const fs::path& root) {
  CorpusOptions o;
  o.root = root;
  o.seed = 7;
  o.jobs = 2;
  return o;
}

}  // namespace

TEST_CASE("split sizes") {
  auto one = split(group_manifest({{"er", 1000}}), {0.8, 0.1, 0.1}, 1);
  CHECK(counts(one) == std::array<std::size_t, 3>{800, 100, 100});
  auto all_train = split(group_manifest({{"er", 17}}), {1.0, 0.0, 0.0}, 1);
  CHECK(counts(all_train) == std::array<std::size_t, 3>{17, 0, 0});
  auto two = split(group_manifest({{"ba", 10}, {"ws", 10}}), {0.8, 0.1, 0.1}, 3);
  CHECK(counts(two, "ba") == std::array<std::size_t, 3>{8, 1, 1});
  CHECK(counts(two, "ws") == std::array<std::size_t, 3>{8, 1, 1});
  // Full-size arithmetic: 12 groups of 1000.
  std::vector<std::pair<std::string, std::size_t>> groups;
  for (int g = 0; g < 12; ++g) groups.emplace_back("f" + std::to_string(g), 1000);
  CHECK(counts(split(group_manifest(groups), {0.8, 0.1, 0.1}, 9)) == std::array<std::size_t, 3>{9600, 1200, 1200});
}

TEST_CASE("split is seeded and validates ratios") {
  const auto m = group_manifest({{"er", 50}});
  CHECK(split(m, {0.8, 0.1, 0.1}, 4) == split(m, {0.8, 0.1, 0.1}, 4));
  CHECK_FALSE(split(m, {0.8, 0.1, 0.1}, 4) == split(m, {0.8, 0.1, 0.1}, 5));
  CHECK_THROWS_AS(split(m, {0.8, 0.1, 0.2}, 0), Error);
  CHECK_THROWS_AS(split(m, {1.2, -0.1, -0.1}, 0), Error);
  std::vector<std::string> warnings;
  split(group_manifest({{"tiny", 2}}), {0.8, 0.1, 0.1}, 0, &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("manifest round trip and schema guard") {
  TempDir dir("manifest");
  DatasetManifest m;
  m.strategy_set = {"degree", "pagerank"};
  m.samples.push_back({"er_k4_0000", "graphs/er_k4_0000.edges", "labels/er_k4_0000.csv", "er", 4, 100,
                       18446744073709551615ull, Split::Val});
  write_manifest(dir.path / "manifest.json", m);
  CHECK(read_manifest(dir.path / "manifest.json") == m);

  std::ofstream(dir.path / "future.json") << R"({"schema_version": 99, "strategy_set": [], "samples": []})";
  CHECK_THROWS_AS(read_manifest(dir.path / "future.json"), Error);
  std::ofstream(dir.path / "broken.json") << R"({"schema_version": 1)";
  CHECK_THROWS_AS(read_manifest(dir.path / "broken.json"), ParseError);
  CHECK_THROWS_AS(read_manifest(dir.path / "missing.json"), Error);
}

TEST_CASE("synthetic corpus layout, labels and determinism") {
  TempDir a("corpus_a");
  TempDir b("corpus_b");
  const auto families = make_families({Model::BA, Model::ER, Model::WS, Model::Regular}, {4, 6, 8}, 30);
  CHECK(families.size() == 12);
  const auto built = build_synthetic_corpus(families, 2, small_options(a.path));
  CHECK(built.failures.empty());
  REQUIRE(built.manifest.samples.size() == 24);
  CHECK(built.manifest.strategy_set.size() == 8);
  CHECK(read_manifest(a.path / "manifest.json") == built.manifest);

  for (const auto& s : built.manifest.samples) {
    INFO(s.id);
    CHECK(fs::exists(a.path / s.graph_path));
    const auto label = read_curve_csv_file((a.path / s.label_path).string());
    CHECK(label.n == s.n);
    CHECK(is_valid_curve(label.relative));
    CHECK(verify_sample(a.path, built.manifest, s).empty());
  }

  build_synthetic_corpus(families, 2, small_options(b.path));
  CHECK(slurp(a.path / "manifest.json") == slurp(b.path / "manifest.json"));
  for (const auto& s : built.manifest.samples) {
    CHECK(slurp(a.path / s.graph_path) == slurp(b.path / s.graph_path));
    CHECK(slurp(a.path / s.label_path) == slurp(b.path / s.label_path));
  }
}

TEST_CASE("verify_sample notices a tampered label") {
  TempDir dir("tamper");
  const auto built = build_synthetic_corpus(make_families({Model::ER}, {4}, 40), 1, small_options(dir.path));
  const auto& s = built.manifest.samples.at(0);
  auto label = read_curve_csv_file((dir.path / s.label_path).string());
  // Still a valid curve, but no single removal leaves the graph whole.
  label.relative[0] = 1.0;
  write_curve_csv_file((dir.path / s.label_path).string(), label);
  const auto msg = verify_sample(dir.path, built.manifest, s);
  CHECK_FALSE(msg.empty());
}

TEST_CASE("infeasible families are rejected up front") {
  TempDir dir("bad");
  CHECK_THROWS_AS(build_synthetic_corpus(make_families({Model::Regular}, {3}, 31), 1, small_options(dir.path)), Error);
  CHECK_THROWS_AS(build_synthetic_corpus({}, 1, small_options(dir.path)), Error);
}

TEST_CASE("empirical corpus") {
  TempDir dir("empirical");
  std::vector<std::pair<std::string, Graph>> sources;
  sources.emplace_back("web", barabasi_albert(300, 2, 1));
  sources.emplace_back("tiny", oracle::two_triangles());
  const auto built = build_empirical_corpus(sources, 50, 3, small_options(dir.path));
  REQUIRE(built.manifest.samples.size() == 3);
  CHECK(built.warnings.size() == 1);
  for (const auto& s : built.manifest.samples) {
    CHECK(s.family == "web");
    CHECK(s.mean_degree == 0);
    const Graph g = load_edge_list_file((dir.path / s.graph_path).string());
    CHECK(g.node_count() == 50);
    CHECK(connected_components(g).sizes.size() == 1);
    CHECK(verify_sample(dir.path, built.manifest, s).empty());
  }
  TempDir empty("empirical_empty");
  CHECK(build_empirical_corpus(sources, 50, 0, small_options(empty.path)).manifest.samples.empty());
}
