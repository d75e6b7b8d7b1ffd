#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wre/centrality.hpp"
#include "wre/generators.hpp"
#include "wre/graph.hpp"

namespace wre {

enum class Split { Train, Val, Test };
std::string_view to_string(Split s) noexcept;

struct SampleEntry {
  std::string id;
  std::string graph_path;  // relative to the corpus root
  std::string label_path;  // relative to the corpus root
  std::string family;
  unsigned mean_degree = 0;  // target <k>; 0 for samples of empirical graphs
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Split split = Split::Train;
  friend bool operator==(const SampleEntry&, const SampleEntry&) = default;
};

/// Index of a corpus laid out as root/{graphs/*.edges, labels/*.csv, manifest.json}.
struct DatasetManifest {
  static constexpr int kSchemaVersion = 1;
  int schema_version = kSchemaVersion;
  std::vector<std::string> strategy_set;
  std::vector<SampleEntry> samples;
  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);
DatasetManifest read_manifest(const std::filesystem::path& path);

using SplitRatios = std::array<double, 3>;  // train, val, test

/// Seeded shuffle then partition, separately within every (family, <k>)
/// group. Per group: train = round(r0 * size), val = round(r1 * size), test
/// takes the rest. Warnings go to `warnings` when given.
DatasetManifest split(DatasetManifest manifest, const SplitRatios& ratios, std::uint64_t seed,
                      std::vector<std::string>* warnings = nullptr);

struct CorpusOptions {
  std::filesystem::path root;
  std::vector<Metric> strategies{standard_metrics().begin(), standard_metrics().end()};
  CentralityParams params;
  SplitRatios ratios{0.8, 0.1, 0.1};
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct CorpusBuild {
  DatasetManifest manifest;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;  // "<sample id>: <error>"
};

/// One GeneratorConfig per (model, <k>) pair; seeds are assigned per sample.
std::vector<GeneratorConfig> make_families(const std::vector<Model>& models,
                                           const std::vector<unsigned>& mean_degrees, std::size_t n,
                                           double ws_rewire_prob = 0.1);

/// Generates `instances_per_config` graphs per family, labels each with its
/// MDA curve and writes graph, label and manifest under options.root.
/// Failed samples are recorded and skipped; more than 10% failures aborts.
CorpusBuild build_synthetic_corpus(const std::vector<GeneratorConfig>& families,
                                   std::size_t instances_per_config, const CorpusOptions& options);

/// Draws `samples_per_source` connected subgraphs of `sample_size` nodes from
/// every source graph. Sources without a large enough component are skipped
/// with a warning.
CorpusBuild build_empirical_corpus(const std::vector<std::pair<std::string, Graph>>& sources,
                                   std::size_t sample_size, std::size_t samples_per_source,
                                   const CorpusOptions& options);

/// MDA label values for `g` under `strategies`.
std::vector<double> mda_label(const Graph& g, const std::vector<Metric>& strategies,
                              const CentralityParams& params = {});

/// Re-simulates one sample and checks it against its stored label and the
/// manifest invariants. Returns an empty string when consistent, otherwise a
/// description of the mismatch.
std::string verify_sample(const std::filesystem::path& root, const DatasetManifest& manifest,
                          const SampleEntry& sample, const CentralityParams& params = {});

}  // namespace wre
