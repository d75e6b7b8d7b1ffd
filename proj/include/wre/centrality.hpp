#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wre/graph.hpp"

namespace wre {

enum class Metric {
  Degree,
  HIndex,
  Coreness,
  Closeness,
  Betweenness,
  Eigenvector,
  PageRank,
  CycleRatio,
  Hits,
  Subgraph,
  Load,
  CollectiveInfluence,
};

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;

/// Degree, H-index, coreness, closeness, betweenness, eigenvector, PageRank,
/// cycle ratio, in that order.
std::span<const Metric> standard_metrics() noexcept;
/// The standard eight followed by HITS, subgraph, load and collective influence.
std::span<const Metric> extended_metrics() noexcept;

struct CentralityParams {
  double damping = 0.85;
  double pagerank_tolerance = 1e-10;  // L1 change between sweeps
  int pagerank_max_iterations = 200;
  double power_tolerance = 1e-10;     // eigen-residual, infinity norm
  int power_max_iterations = 100000;
  unsigned ci_radius = 2;
  unsigned max_cycle_length = 10;
};

std::string describe(Metric m, const CentralityParams& params);

struct CentralityScores {
  Metric metric = Metric::Degree;
  std::vector<double> values;
  CentralityParams params;
};

/// Static scores of `metric` on `g`. Real-valued metrics are rounded to 12
/// significant digits so nodes that tie in exact arithmetic tie here too.
/// Throws ConvergenceError if an iterative metric runs out of iterations.
CentralityScores compute_centrality(const Graph& g, Metric metric,
                                    const CentralityParams& params = {});

// Individual metrics, unrounded.
std::vector<double> degree_centrality(const Graph& g);
std::vector<double> h_index(const Graph& g);
std::vector<double> coreness(const Graph& g);
/// Harmonic closeness: sum over j != i of 1/d(i, j), divided by n - 1.
std::vector<double> closeness(const Graph& g);
/// Unnormalized shortest-path betweenness over unordered pairs.
std::vector<double> betweenness(const Graph& g);
/// Load: unit flow per ordered pair, split evenly at every branching towards
/// the source; halved for undirected graphs.
std::vector<double> load_centrality(const Graph& g);

struct Eigenpair {
  double eigenvalue = 0.0;
  std::vector<double> vector;  // unit L2 norm, non-negative
};
Eigenpair eigenvector_centrality(const Graph& g, double tolerance, int max_iterations);
/// Authority scores from power iteration on A^2 (hub = authority when
/// undirected). Sums to 1.
std::vector<double> hits(const Graph& g, double tolerance, int max_iterations);
std::vector<double> pagerank(const Graph& g, double damping, double tolerance,
                             int max_iterations);
/// Diagonal of exp(A) by Lanczos quadrature, one Krylov run per node.
std::vector<double> subgraph_centrality(const Graph& g);
/// (k_i - 1) * sum of (k_j - 1) over nodes at distance exactly `radius`.
std::vector<double> collective_influence(const Graph& g, unsigned radius);

/// Shortest cycles through every node, up to `max_cycle_length`, each stored
/// once in canonical rotation (smallest node first, smaller neighbor second).
std::vector<std::vector<NodeId>> shortest_cycle_set(const Graph& g, unsigned max_cycle_length);
/// r_i = sum over j with c_ij > 0 of c_ij / c_jj, computed on shortest_cycle_set.
std::vector<double> cycle_ratio(const Graph& g, unsigned max_cycle_length = 10);

enum class TieRule { AscendingId, SeededShuffle };

struct Ranking {
  std::vector<NodeId> order;  // highest score first
  TieRule tie_rule = TieRule::AscendingId;
};

/// Descending-score permutation. Tie blocks are ordered by node id, or
/// shuffled with `seed` under TieRule::SeededShuffle.
Ranking rank(std::span<const double> scores, TieRule tie_rule = TieRule::AscendingId,
             std::uint64_t seed = 0);

/// "# <metric description>" then "node_id,score" rows.
void write_scores_csv(std::ostream& out, const CentralityScores& scores);

/// Rounds to `digits` significant decimal digits.
double round_significant(double x, int digits);

}  // namespace wre
