#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wre/centrality.hpp"
#include "wre/graph.hpp"

namespace wre {

/// GCC decay under one-by-one removal. gcc_sizes[i] is the size of the
/// largest component after removing order[0..i]; sizes are kept as integers
/// so curves compare exactly.
struct AttackCurve {
  std::string strategy = "custom";
  std::vector<NodeId> order;
  std::vector<std::uint32_t> gcc_sizes;

  std::size_t node_count() const noexcept { return gcc_sizes.size(); }
  double relative(std::size_t i) const noexcept {
    return static_cast<double>(gcc_sizes[i]) / static_cast<double>(gcc_sizes.size());
  }
  std::vector<double> relative_values() const;
};

/// Reverse percolation: nodes are re-inserted from the end of `order` while a
/// union-find tracks the largest component. Throws if `order` is not a
/// permutation of the graph's nodes.
AttackCurve simulate_removal(const Graph& g, std::span<const NodeId> order);

/// Recomputes components by BFS after every removal. Quadratic; reference
/// implementation for tests.
AttackCurve naive_curve_oracle(const Graph& g, std::span<const NodeId> order);

/// Static attack: compute `metric` once, rank, then simulate.
AttackCurve attack_by_strategy(const Graph& g, Metric metric, const CentralityParams& params = {},
                               TieRule tie_rule = TieRule::AscendingId, std::uint64_t seed = 0);

/// One curve per metric, in the order given.
std::vector<AttackCurve> attack_all(const Graph& g, std::span<const Metric> metrics,
                                    const CentralityParams& params = {},
                                    TieRule tie_rule = TieRule::AscendingId,
                                    std::uint64_t seed = 0);

/// Mean relative GCC size along the curve.
double mean_relative(const AttackCurve& curve);

}  // namespace wre
