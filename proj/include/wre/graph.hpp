#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wre {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph on nodes 0..n-1, stored as compressed adjacency.
///
/// Construction drops self-loops and duplicate edges; the graph is immutable
/// afterwards. Neighbor lists are sorted ascending. Edges are kept with u < v,
/// sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary pairs. Self-loops and duplicates are
  /// dropped; the counts end up in `dropped_self_loops()` and
  /// `dropped_duplicates()`.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  double mean_degree() const noexcept {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
  }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Original labels, index = contiguous id. Empty when ids are the labels.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }
  std::size_t dropped_duplicates() const noexcept { return dropped_duplicates_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> labels_;
  std::size_t dropped_self_loops_ = 0;
  std::size_t dropped_duplicates_ = 0;
};

/// Parses a whitespace-separated edge list. '#' starts a comment line, blank
/// lines are skipped. Labels are mapped to ids in order of first appearance.
///
/// A `# nodes <N>` directive switches to identity labelling: every label must
/// then be an integer in [0, N), and isolated nodes survive the round trip.
/// Throws ParseError on malformed lines or empty input.
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

/// Writes `# nodes <n>` followed by one "u v" line per edge.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Two-column sidecar: original label, contiguous id.
void write_relabel_map(std::ostream& out, const Graph& g);

/// Size of each connected component, indexed by component id, and the
/// component id of every node.
struct Components {
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> of_node;
  std::size_t largest() const noexcept;
};
Components connected_components(const Graph& g);

/// Largest-component size after deleting `removed`, divided by n.
double gcc_relative_size(const Graph& g, std::span<const NodeId> removed);

/// Relative GCC size of the intact graph, G(0).
double intact_gcc(const Graph& g);

/// Subgraph induced by `nodes` (relabelled in the given order).
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Grows a connected node set from a random start by repeatedly adding a
/// uniformly chosen node adjacent to the set, then keeps all internal edges.
/// The start is drawn among nodes whose component holds at least `size` nodes.
/// Output ids follow ascending original id; labels record the original ids.
Graph sample_connected_subgraph(const Graph& g, std::size_t size, std::uint64_t seed);

}  // namespace wre
