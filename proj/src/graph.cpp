#include "wre/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "wre/error.hpp"
#include "wre/random.hpp"

namespace wre {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      ++dropped_self_loops_;
      continue;
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  const auto last = std::unique(edges_.begin(), edges_.end());
  dropped_duplicates_ = static_cast<std::size_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted with u < v: the first pass appends each node's smaller
  // neighbors in ascending order, the second its larger ones.
  for (auto [u, v] : edges_) adjacency_[fill[v]++] = u;
  for (auto [u, v] : edges_) adjacency_[fill[u]++] = v;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw Error("label count does not match node count");
  labels_ = std::move(labels);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_uint(std::string_view s, std::uint64_t& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph load_edge_list(std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> raw_edges;
  std::vector<std::size_t> edge_lines;
  std::optional<std::size_t> declared_nodes;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto tokens = split_ws(line.substr(1));
      if (tokens.size() == 2 && tokens[0] == "nodes") {
        std::uint64_t n = 0;
        if (!parse_uint(tokens[1], n)) throw ParseError("bad node-count directive", line_no);
        declared_nodes = static_cast<std::size_t>(n);
      }
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("expected two node labels, got " + std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    raw_edges.emplace_back(tokens[0], tokens[1]);
    edge_lines.push_back(line_no);
  }

  if (raw_edges.empty() && !declared_nodes) throw ParseError("edge list is empty", 0);

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  if (declared_nodes) {
    const std::size_t n = *declared_nodes;
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
      std::uint64_t u = 0, v = 0;
      if (!parse_uint(raw_edges[i].first, u) || !parse_uint(raw_edges[i].second, v) || u >= n ||
          v >= n) {
        throw ParseError("label is not an integer id below the declared node count", edge_lines[i]);
      }
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return Graph(n, edges);
  }

  std::unordered_map<std::string_view, NodeId> ids;
  std::vector<std::string> labels;
  auto id_of = [&](std::string_view label) {
    const auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };
  for (auto [a, b] : raw_edges) {
    const NodeId u = id_of(a);
    const NodeId v = id_of(b);
    edges.emplace_back(u, v);
  }
  Graph g(labels.size(), edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_edge_list(out, g);
}

void write_relabel_map(std::ostream& out, const Graph& g) {
  const auto& labels = g.labels();
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out << (labels.empty() ? std::to_string(i) : labels[i]) << ' ' << i << '\n';
  }
}

std::size_t Components::largest() const noexcept {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr auto unset = UINT32_MAX;
  Components c;
  c.of_node.assign(n, unset);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (c.of_node[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(c.sizes.size());
    queue.clear();
    queue.push_back(s);
    c.of_node[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (c.of_node[w] == unset) {
          c.of_node[w] = id;
          queue.push_back(w);
        }
      }
    }
    c.sizes.push_back(queue.size());
  }
  return c;
}

double gcc_relative_size(const Graph& g, std::span<const NodeId> removed) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<char> gone(n, 0);
  for (NodeId v : removed) {
    if (v >= n) throw Error("removed node out of range");
    gone[v] = 1;
  }
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::size_t best = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, queue.size());
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

double intact_gcc(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  return static_cast<double>(connected_components(g).largest()) /
         static_cast<double>(g.node_count());
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr auto absent = UINT32_MAX;
  std::vector<NodeId> local(g.node_count(), absent);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      if (local[w] != absent && local[w] > i) edges.emplace_back(static_cast<NodeId>(i), local[w]);
    }
  }
  Graph sub(nodes.size(), edges);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (NodeId v : nodes) {
    labels.push_back(g.labels().empty() ? std::to_string(v) : g.labels()[v]);
  }
  sub.set_labels(std::move(labels));
  return sub;
}

Graph sample_connected_subgraph(const Graph& g, std::size_t size, std::uint64_t seed) {
  if (size == 0) throw Error("sample size must be positive");
  const auto comps = connected_components(g);
  std::vector<NodeId> starts;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comps.sizes[comps.of_node[v]] >= size) starts.push_back(v);
  }
  if (starts.empty()) {
    throw Error("no connected component with at least " + std::to_string(size) + " nodes");
  }

  Rng rng(seed);
  std::vector<char> state(g.node_count(), 0);  // 0 untouched, 1 frontier, 2 sampled
  std::vector<NodeId> frontier;
  std::vector<NodeId> sampled;
  sampled.reserve(size);
  auto take = [&](NodeId v) {
    state[v] = 2;
    sampled.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (state[w] == 0) {
        state[w] = 1;
        frontier.push_back(w);
      }
    }
  };
  take(starts[rng.below(starts.size())]);
  while (sampled.size() < size) {
    const std::size_t pick = rng.below(frontier.size());
    const NodeId v = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    take(v);
  }
  std::sort(sampled.begin(), sampled.end());
  return induced_subgraph(g, sampled);
}

}  // namespace wre
