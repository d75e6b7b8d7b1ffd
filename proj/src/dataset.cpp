#include "wre/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include <json.hpp>

#include "wre/attack.hpp"
#include "wre/curve_io.hpp"
#include "wre/error.hpp"
#include "wre/filter.hpp"
#include "wre/mda.hpp"
#include "wre/parallel.hpp"
#include "wre/random.hpp"

namespace wre {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string_view to_string(Split s) noexcept {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "?";
}

namespace {

Split parse_split(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Val;
  if (s == "test") return Split::Test;
  throw Error("manifest: unknown split '" + s + "'");
}

std::string sample_id(const std::string& family, unsigned k, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", index);
  return k ? family + "_k" + std::to_string(k) + "_" + buf : family + "_" + buf;
}

std::vector<std::string> strategy_names(const std::vector<Metric>& metrics) {
  std::vector<std::string> names;
  for (Metric m : metrics) names.emplace_back(to_string(m));
  return names;
}

// Labels and writes one sample; the entry comes back with paths filled in.
SampleEntry write_sample(const fs::path& root, SampleEntry entry, const Graph& g,
                         const CorpusOptions& options) {
  entry.graph_path = "graphs/" + entry.id + ".edges";
  entry.label_path = "labels/" + entry.id + ".csv";
  entry.n = g.node_count();
  const auto curves = attack_all(g, options.strategies, options.params);
  const auto mda = stack(curves);
  write_edge_list_file((root / entry.graph_path).string(), g);
  write_curve_csv_file((root / entry.label_path).string(), to_curve_file(mda, entry.id));
  return entry;
}

CorpusBuild finish(std::vector<std::optional<SampleEntry>> built, std::vector<std::string> failures,
                   std::vector<std::string> warnings, std::size_t attempted,
                   const CorpusOptions& options) {
  if (attempted > 0 && failures.size() * 10 > attempted) {
    throw Error("corpus build aborted: " + std::to_string(failures.size()) + " of " +
                std::to_string(attempted) + " samples failed (first: " + failures.front() + ")");
  }
  CorpusBuild result;
  result.manifest.strategy_set = strategy_names(options.strategies);
  for (auto& entry : built)
    if (entry) result.manifest.samples.push_back(std::move(*entry));
  result.manifest = split(std::move(result.manifest), options.ratios, options.seed, &warnings);
  write_manifest(options.root / "manifest.json", result.manifest);
  result.failures = std::move(failures);
  result.warnings = std::move(warnings);
  return result;
}

}  // namespace

void write_manifest(const fs::path& path, const DatasetManifest& manifest) {
  Json doc;
  doc["schema_version"] = manifest.schema_version;
  doc["strategy_set"] = manifest.strategy_set;
  Json samples = Json::array();
  for (const auto& s : manifest.samples) {
    samples.push_back({
        {"id", s.id},
        {"graph", s.graph_path},
        {"label", s.label_path},
        {"family", s.family},
        {"mean_degree", s.mean_degree},
        {"n", s.n},
        {"seed", s.seed},
        {"split", std::string(to_string(s.split))},
    });
  }
  doc["samples"] = std::move(samples);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

DatasetManifest read_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  DatasetManifest m;
  try {
    const Json doc = Json::parse(in);
    m.schema_version = doc.at("schema_version").get<int>();
    if (m.schema_version > DatasetManifest::kSchemaVersion) {
      throw Error("manifest schema " + std::to_string(m.schema_version) + " is newer than supported");
    }
    m.strategy_set = doc.at("strategy_set").get<std::vector<std::string>>();
    for (const auto& s : doc.at("samples")) {
      SampleEntry e;
      e.id = s.at("id").get<std::string>();
      e.graph_path = s.at("graph").get<std::string>();
      e.label_path = s.at("label").get<std::string>();
      e.family = s.at("family").get<std::string>();
      e.mean_degree = s.at("mean_degree").get<unsigned>();
      e.n = s.at("n").get<std::size_t>();
      e.seed = s.at("seed").get<std::uint64_t>();
      e.split = parse_split(s.at("split").get<std::string>());
      m.samples.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what(), 0);
  }
  return m;
}

DatasetManifest split(DatasetManifest manifest, const SplitRatios& ratios, std::uint64_t seed,
                      std::vector<std::string>* warnings) {
  for (double r : ratios)
    if (!(r >= 0.0)) throw Error("split: ratios must be non-negative");
  if (std::fabs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-9) {
    throw Error("split: ratios must sum to 1");
  }
  const auto nonzero = std::count_if(ratios.begin(), ratios.end(), [](double r) { return r > 0; });

  std::map<std::pair<std::string, unsigned>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < manifest.samples.size(); ++i) {
    const auto& s = manifest.samples[i];
    groups[{s.family, s.mean_degree}].push_back(i);
  }
  Rng rng(seed);
  for (auto& [key, members] : groups) {
    const std::size_t size = members.size();
    if (size < static_cast<std::size_t>(nonzero) && warnings) {
      warnings->push_back("split: group " + key.first + " k=" + std::to_string(key.second) +
                          " has only " + std::to_string(size) + " samples");
    }
    rng.shuffle(std::span<std::size_t>(members));
    const auto sized = static_cast<double>(size);
    const std::size_t train = std::min(size, static_cast<std::size_t>(std::llround(ratios[0] * sized)));
    const std::size_t val =
        std::min(size - train, static_cast<std::size_t>(std::llround(ratios[1] * sized)));
    for (std::size_t j = 0; j < size; ++j) {
      manifest.samples[members[j]].split =
          j < train ? Split::Train : (j < train + val ? Split::Val : Split::Test);
    }
    if (ratios[2] == 0.0) {
      // Rounding may leave a remainder; it belongs to the last nonzero split.
      for (std::size_t j = train + val; j < size; ++j)
        manifest.samples[members[j]].split = ratios[1] > 0 ? Split::Val : Split::Train;
    }
  }
  return manifest;
}

std::vector<GeneratorConfig> make_families(const std::vector<Model>& models,
                                           const std::vector<unsigned>& mean_degrees, std::size_t n,
                                           double ws_rewire_prob) {
  std::vector<GeneratorConfig> families;
  for (Model m : models) {
    for (unsigned k : mean_degrees) {
      GeneratorConfig c;
      c.model = m;
      c.n = n;
      c.mean_degree = k;
      c.ws_rewire_prob = ws_rewire_prob;
      families.push_back(c);
    }
  }
  return families;
}

std::vector<double> mda_label(const Graph& g, const std::vector<Metric>& strategies,
                              const CentralityParams& params) {
  return stack(attack_all(g, strategies, params)).relative_values();
}

CorpusBuild build_synthetic_corpus(const std::vector<GeneratorConfig>& families,
                                   std::size_t instances_per_config, const CorpusOptions& options) {
  if (families.empty()) throw Error("synthetic corpus: no families given");
  if (instances_per_config == 0) throw Error("synthetic corpus: need at least one instance");
  for (const auto& f : families) validate(f);
  fs::create_directories(options.root / "graphs");
  fs::create_directories(options.root / "labels");

  const std::size_t total = families.size() * instances_per_config;
  std::vector<std::optional<SampleEntry>> built(total);
  std::vector<std::string> failures;
  std::mutex failure_mutex;
  parallel_for(total, options.jobs, [&](std::size_t i) {
    const auto& family = families[i / instances_per_config];
    SampleEntry entry;
    entry.family = std::string(to_string(family.model));
    entry.mean_degree = family.mean_degree;
    entry.id = sample_id(entry.family, family.mean_degree, i % instances_per_config);
    entry.seed = derive_seed(options.seed, i);
    try {
      GeneratorConfig config = family;
      config.seed = entry.seed;
      built[i] = write_sample(options.root, entry, generate(config), options);
    } catch (const std::exception& e) {
      std::lock_guard lock(failure_mutex);
      failures.push_back(entry.id + ": " + e.what());
    }
  });
  std::sort(failures.begin(), failures.end());
  return finish(std::move(built), std::move(failures), {}, total, options);
}

CorpusBuild build_empirical_corpus(const std::vector<std::pair<std::string, Graph>>& sources,
                                   std::size_t sample_size, std::size_t samples_per_source,
                                   const CorpusOptions& options) {
  if (sample_size == 0) throw Error("empirical corpus: sample size must be positive");
  fs::create_directories(options.root / "graphs");
  fs::create_directories(options.root / "labels");

  std::vector<std::string> warnings;
  std::vector<std::size_t> usable;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (connected_components(sources[s].second).largest() < sample_size) {
      warnings.push_back("skipping " + sources[s].first + ": no component with " +
                         std::to_string(sample_size) + " nodes");
    } else {
      usable.push_back(s);
    }
  }

  const std::size_t total = usable.size() * samples_per_source;
  std::vector<std::optional<SampleEntry>> built(total);
  std::vector<std::string> failures;
  std::mutex failure_mutex;
  parallel_for(total, options.jobs, [&](std::size_t i) {
    const auto& [name, source] = sources[usable[i / samples_per_source]];
    SampleEntry entry;
    entry.family = name;
    entry.id = sample_id(name, 0, i % samples_per_source);
    entry.seed = derive_seed(options.seed, i);
    try {
      const Graph sample = sample_connected_subgraph(source, sample_size, entry.seed);
      built[i] = write_sample(options.root, entry, sample, options);
    } catch (const std::exception& e) {
      std::lock_guard lock(failure_mutex);
      failures.push_back(entry.id + ": " + e.what());
    }
  });
  std::sort(failures.begin(), failures.end());
  return finish(std::move(built), std::move(failures), std::move(warnings), total, options);
}

std::string verify_sample(const fs::path& root, const DatasetManifest& manifest,
                          const SampleEntry& sample, const CentralityParams& params) {
  std::vector<Metric> strategies;
  for (const auto& name : manifest.strategy_set) {
    const auto m = parse_metric(name);
    if (!m) return "unknown strategy '" + name + "'";
    strategies.push_back(*m);
  }
  const Graph g = load_edge_list_file((root / sample.graph_path).string());
  if (g.node_count() != sample.n) return "graph node count differs from manifest";
  const CurveFile label = read_curve_csv_file((root / sample.label_path).string());
  if (label.n != sample.n) return "label length differs from node count";
  if (!is_valid_curve(label.relative)) return "label is not a valid curve";
  const auto fresh = mda_label(g, strategies, params);
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (format_value(fresh[i]) != format_value(label.relative[i])) {
      return "label differs from re-simulation at step " + std::to_string(i + 1);
    }
  }
  return {};
}

}  // namespace wre
