#include "wre/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "wre/error.hpp"
#include "wre/random.hpp"

namespace wre {

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::BA: return "ba";
    case Model::ER: return "er";
    case Model::WS: return "ws";
    case Model::Regular: return "regular";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ba") return Model::BA;
  if (lower == "er") return Model::ER;
  if (lower == "ws") return Model::WS;
  if (lower == "regular" || lower == "rr") return Model::Regular;
  return std::nullopt;
}

void validate(const GeneratorConfig& c) {
  const std::string name(to_string(c.model));
  if (c.n == 0) throw Error(name + ": node count must be positive");
  if (c.mean_degree == 0) throw Error(name + ": mean degree must be positive");
  if (c.n < static_cast<std::size_t>(c.mean_degree) + 1) {
    throw Error(name + ": need n >= <k> + 1");
  }
  switch (c.model) {
    case Model::BA:
    case Model::WS:
      if (c.mean_degree % 2 != 0) throw Error(name + ": mean degree must be even");
      break;
    case Model::Regular:
      if ((c.n * c.mean_degree) % 2 != 0) throw Error("regular: n * k must be even");
      break;
    case Model::ER:
      break;
  }
  if (c.model == Model::WS && !(c.ws_rewire_prob >= 0.0 && c.ws_rewire_prob <= 1.0)) {
    throw Error("ws: rewiring probability must lie in [0, 1]");
  }
}

Graph generate(const GeneratorConfig& c) {
  validate(c);
  switch (c.model) {
    case Model::BA: return barabasi_albert(c.n, c.mean_degree / 2, c.seed);
    case Model::ER:
      return erdos_renyi(c.n, static_cast<double>(c.mean_degree) / static_cast<double>(c.n - 1),
                         c.seed);
    case Model::WS: return watts_strogatz(c.n, c.mean_degree, c.ws_rewire_prob, c.seed);
    case Model::Regular: return random_regular(c.n, c.mean_degree, c.seed);
  }
  throw Error("unknown model");
}

Graph barabasi_albert(std::size_t n, unsigned m, std::uint64_t seed) {
  if (m == 0 || n < m + 1) throw Error("ba: need m >= 1 and n >= m + 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Every edge endpoint goes into `ends`, so a uniform pick from it is a
  // degree-proportional pick of a node.
  std::vector<NodeId> ends;
  ends.reserve(2 * (static_cast<std::size_t>(m) * n));
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = ends[rng.below(ends.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return Graph(n, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("er: edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  if (p <= 0.0 || n < 2) return Graph(n, edges);
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
  }
  // Geometric skipping over the lower triangle (Batagelj & Brandes).
  const double log_q = std::log1p(-p);
  long long v = 1;
  long long w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double r = rng.uniform();
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return Graph(n, edges);
}

Graph watts_strogatz(std::size_t n, unsigned k, double rewire_prob, std::uint64_t seed) {
  if (k % 2 != 0 || n < k + 1) throw Error("ws: need even k and n >= k + 1");
  Rng rng(seed);
  const unsigned half = k / 2;
  std::vector<std::set<NodeId>> adj(n);
  auto link = [&](NodeId a, NodeId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (NodeId u = 0; u < n; ++u) {
    for (unsigned j = 1; j <= half; ++j) link(u, static_cast<NodeId>((u + j) % n));
  }
  // Rewire the far endpoint of each lattice edge, layer by layer.
  for (unsigned j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      if (rng.uniform() >= rewire_prob) continue;
      const auto v = static_cast<NodeId>((u + j) % n);
      if (!adj[u].count(v) || adj[u].size() >= n - 1) continue;
      NodeId w;
      do {
        w = static_cast<NodeId>(rng.below(n));
      } while (w == u || adj[u].count(w));
      adj[u].erase(v);
      adj[v].erase(u);
      link(u, w);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

// One pairing attempt. Stubs are shuffled and paired; pairs that would form a
// self-loop or a repeated edge are returned to the pool and re-paired. Gives
// up when the leftover stubs cannot be paired validly.
std::optional<std::vector<Edge>> try_pairing(std::size_t n, unsigned k, Rng& rng) {
  std::set<Edge> edges;
  std::vector<NodeId> stubs;
  stubs.reserve(n * k);
  for (NodeId v = 0; v < n; ++v)
    for (unsigned i = 0; i < k; ++i) stubs.push_back(v);

  std::vector<NodeId> leftover;
  while (!stubs.empty()) {
    rng.shuffle(std::span<NodeId>(stubs));
    leftover.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId a = stubs[i], b = stubs[i + 1];
      if (a > b) std::swap(a, b);
      if (a != b && edges.insert({a, b}).second) continue;
      leftover.push_back(a);
      leftover.push_back(b);
    }
    if (leftover.empty()) break;
    // A valid pair must remain among the leftover stubs, otherwise restart.
    std::vector<NodeId> distinct(leftover);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    bool pairable = false;
    for (std::size_t i = 0; i < distinct.size() && !pairable; ++i)
      for (std::size_t j = i + 1; j < distinct.size() && !pairable; ++j)
        pairable = !edges.count({distinct[i], distinct[j]});
    if (!pairable) return std::nullopt;
    stubs.swap(leftover);
  }
  return std::vector<Edge>(edges.begin(), edges.end());
}

}  // namespace

Graph random_regular(std::size_t n, unsigned k, std::uint64_t seed) {
  if (n < k + 1 || (n * k) % 2 != 0) throw Error("regular: need n >= k + 1 and n * k even");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    if (auto edges = try_pairing(n, k, rng)) return Graph(n, *edges);
  }
  throw Error("regular: pairing failed repeatedly");
}

}  // namespace wre
