#include "wre/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wre/error.hpp"

namespace wre {

namespace {

void require_permutation(const Graph& g, std::span<const NodeId> order) {
  const std::size_t n = g.node_count();
  if (order.size() != n) {
    throw Error("removal order has " + std::to_string(order.size()) + " entries, graph has " +
                std::to_string(n) + " nodes");
  }
  std::vector<char> seen(n, 0);
  for (NodeId v : order) {
    if (v >= n || seen[v]) throw Error("removal order is not a permutation of the nodes");
    seen[v] = 1;
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns the size of the merged set.
  std::uint32_t unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return size_[a];
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

std::vector<double> AttackCurve::relative_values() const {
  std::vector<double> out(gcc_sizes.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = relative(i);
  return out;
}

AttackCurve simulate_removal(const Graph& g, std::span<const NodeId> order) {
  require_permutation(g, order);
  const std::size_t n = g.node_count();
  AttackCurve curve;
  curve.order.assign(order.begin(), order.end());
  curve.gcc_sizes.assign(n, 0);

  DisjointSets sets(n);
  std::vector<char> present(n, 0);
  std::uint32_t largest = 0;
  // After re-inserting order[i..n-1], `largest` is the GCC once order[0..i-1]
  // are gone, i.e. gcc_sizes[i - 1].
  for (std::size_t i = n; i-- > 1;) {
    const NodeId v = order[i];
    present[v] = 1;
    largest = std::max<std::uint32_t>(largest, 1);
    for (NodeId w : g.neighbors(v)) {
      if (present[w]) largest = std::max(largest, sets.unite(v, w));
    }
    curve.gcc_sizes[i - 1] = largest;
  }
  return curve;
}

AttackCurve naive_curve_oracle(const Graph& g, std::span<const NodeId> order) {
  require_permutation(g, order);
  const std::size_t n = g.node_count();
  AttackCurve curve;
  curve.order.assign(order.begin(), order.end());
  curve.gcc_sizes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rel = gcc_relative_size(g, order.subspan(0, i + 1));
    curve.gcc_sizes[i] = static_cast<std::uint32_t>(std::lround(rel * static_cast<double>(n)));
  }
  return curve;
}

AttackCurve attack_by_strategy(const Graph& g, Metric metric, const CentralityParams& params,
                               TieRule tie_rule, std::uint64_t seed) {
  const auto scores = compute_centrality(g, metric, params);
  const auto ranking = rank(scores.values, tie_rule, seed);
  AttackCurve curve = simulate_removal(g, ranking.order);
  curve.strategy = std::string(to_string(metric));
  return curve;
}

std::vector<AttackCurve> attack_all(const Graph& g, std::span<const Metric> metrics,
                                    const CentralityParams& params, TieRule tie_rule,
                                    std::uint64_t seed) {
  std::vector<AttackCurve> curves;
  curves.reserve(metrics.size());
  for (Metric m : metrics) curves.push_back(attack_by_strategy(g, m, params, tie_rule, seed));
  return curves;
}

double mean_relative(const AttackCurve& curve) {
  if (curve.gcc_sizes.empty()) return 0.0;
  const double total =
      std::accumulate(curve.gcc_sizes.begin(), curve.gcc_sizes.end(), 0.0);
  const auto n = static_cast<double>(curve.gcc_sizes.size());
  return total / (n * n);
}

}  // namespace wre
