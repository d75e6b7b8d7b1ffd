#include "wre/rationality.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wre/error.hpp"
#include "wre/parallel.hpp"
#include "wre/random.hpp"

namespace wre {

namespace {

std::vector<NodeId> candidate_nodes(const MdaPosition& pos) {
  std::vector<NodeId> nodes;
  nodes.reserve(pos.alternatives.size());
  for (const auto& c : pos.alternatives) nodes.push_back(c.node);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

void score(MrReport& report) {
  report.u0 = static_cast<std::size_t>(
      std::count(report.counters.begin(), report.counters.end(), std::uint32_t{0}));
  const auto n = report.counters.size();
  report.mr = n == 0 ? 1.0 : static_cast<double>(n - report.u0) / static_cast<double>(n);
}

}  // namespace

MrReport build_assignment(const MdaCurve& mda) {
  const std::size_t n = mda.node_count();
  MrReport report;
  report.counters.assign(n, 0);
  report.assignment.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    NodeId best = 0;
    std::uint32_t best_count = std::numeric_limits<std::uint32_t>::max();
    for (NodeId v : candidate_nodes(mda.positions[j])) {
      if (report.counters[v] < best_count) {
        best = v;
        best_count = report.counters[v];
      }
    }
    report.assignment[j] = best;
    ++report.counters[best];
  }
  score(report);
  return report;
}

MrReport build_assignment(std::span<const AttackCurve> curves) {
  return build_assignment(stack(curves));
}

std::string_view to_string(MatchRule rule) noexcept {
  return rule == MatchRule::SameValue ? "value" : "position";
}

MrReport optimize_and_score(MrReport report, std::span<const AttackCurve> curves, MatchRule rule) {
  const auto mda = stack(curves);
  const std::size_t n = mda.node_count();
  if (report.assignment.size() != n || report.counters.size() != n) {
    throw Error("rationality: report does not match the curves");
  }
  // Candidate pools: one per position, or one per GCC value. pool_of[j] is
  // the pool consulted at position j.
  std::vector<std::vector<NodeId>> pools;
  std::vector<std::size_t> pool_of(n);
  if (rule == MatchRule::SamePosition) {
    pools.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      pools[j] = candidate_nodes(mda.positions[j]);
      pool_of[j] = j;
    }
  } else {
    pools.resize(n + 1);  // GCC sizes lie in 0..n
    for (const auto& c : curves)
      for (std::size_t p = 0; p < n; ++p) pools[c.gcc_sizes[p]].push_back(c.order[p]);
    for (auto& pool : pools) {
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    }
    for (std::size_t j = 0; j < n; ++j) pool_of[j] = mda.positions[j].gcc_size;
  }
  // A node's counter never returns to zero once raised (only occupants used
  // twice or more are decremented), so each pool keeps a forward cursor.
  std::vector<std::size_t> cursor(pools.size(), 0);

  report.iterations = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++report.iterations;
    for (std::size_t j = 0; j < n; ++j) {
      const NodeId occupant = report.assignment[j];
      // Displacing a node used once would just move the zero elsewhere.
      if (report.counters[occupant] < 2) continue;
      const auto& pool = pools[pool_of[j]];
      auto& at = cursor[pool_of[j]];
      while (at < pool.size() && report.counters[pool[at]] != 0) ++at;
      if (at == pool.size()) continue;
      const NodeId v = pool[at];
      report.assignment[j] = v;
      --report.counters[occupant];
      ++report.counters[v];
      changed = true;
    }
  }
  score(report);
  return report;
}

MrReport maximum_rationality(std::span<const AttackCurve> curves, MatchRule rule) {
  return optimize_and_score(build_assignment(curves), curves, rule);
}

MdaCurve stack_rational(std::span<const AttackCurve> curves) {
  auto mda = stack(curves);
  const auto report = maximum_rationality(curves, MatchRule::SamePosition);
  for (std::size_t j = 0; j < mda.node_count(); ++j) {
    auto& pos = mda.positions[j];
    const auto it = std::find_if(pos.alternatives.begin(), pos.alternatives.end(),
                                 [&](const Candidate& c) { return c.node == report.assignment[j]; });
    pos.winner_strategy = it->strategy;
    pos.winner_node = it->node;
  }
  return mda;
}

MrStatistics summarize(std::vector<double> values) {
  MrStatistics stats;
  stats.values = std::move(values);
  if (stats.values.empty()) return stats;
  stats.max = *std::max_element(stats.values.begin(), stats.values.end());
  stats.min = *std::min_element(stats.values.begin(), stats.values.end());
  stats.mean = std::accumulate(stats.values.begin(), stats.values.end(), 0.0) /
               static_cast<double>(stats.values.size());
  for (double mr : stats.values) {
    std::size_t b = 0;
    while (b < kMrBands.size() && !(mr > kMrBands[b])) ++b;
    if (b < kMrBands.size()) {
      ++stats.band_counts[b];
    } else {
      ++stats.below_bands;
    }
  }
  return stats;
}

std::vector<MrStatistics> mr_experiment(const MrExperiment& experiment,
                                        std::span<const std::vector<Metric>> metric_sets) {
  if (experiment.instances == 0) throw Error("rationality: need at least one instance");
  if (metric_sets.empty()) throw Error("rationality: need at least one metric set");

  // Union of all requested metrics, in first-seen order.
  std::vector<Metric> all;
  for (const auto& set : metric_sets) {
    if (set.empty()) throw Error("rationality: empty metric set");
    for (Metric m : set)
      if (std::find(all.begin(), all.end(), m) == all.end()) all.push_back(m);
  }

  std::vector<std::vector<double>> values(metric_sets.size(),
                                          std::vector<double>(experiment.instances));
  parallel_for(experiment.instances, experiment.jobs, [&](std::size_t i) {
    GeneratorConfig config = experiment.family;
    config.seed = derive_seed(experiment.seed, i);
    const Graph g = generate(config);
    const auto curves = attack_all(g, all, experiment.params);
    for (std::size_t s = 0; s < metric_sets.size(); ++s) {
      std::vector<AttackCurve> subset;
      for (Metric m : metric_sets[s]) {
        const auto at = std::find(all.begin(), all.end(), m) - all.begin();
        subset.push_back(curves[static_cast<std::size_t>(at)]);
      }
      values[s][i] = maximum_rationality(subset, experiment.rule).mr;
    }
  });

  std::vector<MrStatistics> out;
  out.reserve(values.size());
  for (auto& v : values) out.push_back(summarize(std::move(v)));
  return out;
}

}  // namespace wre
