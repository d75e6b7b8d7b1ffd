#include "wre/centrality.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>

#include "wre/error.hpp"
#include "wre/random.hpp"

namespace wre {

namespace {

constexpr std::array kStandard = {
    Metric::Degree,      Metric::HIndex,   Metric::Coreness, Metric::Closeness,
    Metric::Betweenness, Metric::Eigenvector, Metric::PageRank, Metric::CycleRatio,
};

constexpr std::array kExtended = {
    Metric::Degree,   Metric::HIndex,     Metric::Coreness, Metric::Closeness,
    Metric::Betweenness, Metric::Eigenvector, Metric::PageRank, Metric::CycleRatio,
    Metric::Hits,     Metric::Subgraph,   Metric::Load,     Metric::CollectiveInfluence,
};

struct MetricName {
  Metric metric;
  std::string_view name;
};

constexpr std::array kNames = {
    MetricName{Metric::Degree, "degree"},
    MetricName{Metric::HIndex, "hindex"},
    MetricName{Metric::Coreness, "coreness"},
    MetricName{Metric::Closeness, "closeness"},
    MetricName{Metric::Betweenness, "betweenness"},
    MetricName{Metric::Eigenvector, "eigenvector"},
    MetricName{Metric::PageRank, "pagerank"},
    MetricName{Metric::CycleRatio, "cycleratio"},
    MetricName{Metric::Hits, "hits"},
    MetricName{Metric::Subgraph, "subgraph"},
    MetricName{Metric::Load, "load"},
    MetricName{Metric::CollectiveInfluence, "ci"},
};

// Breadth-first layers from a source; reused across sources.
struct Bfs {
  std::vector<int> dist;
  std::vector<NodeId> order;

  explicit Bfs(std::size_t n) : dist(n, -1) { order.reserve(n); }

  void run(const Graph& g, NodeId source, int max_depth = INT32_MAX) {
    for (NodeId v : order) dist[v] = -1;
    order.clear();
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      if (dist[v] >= max_depth) continue;
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
      }
    }
  }
};

void normalize_l2(std::vector<double>& x) {
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (double& v : x) v /= norm;
}

void multiply_adjacency(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double s = 0.0;
    for (NodeId w : g.neighbors(v)) s += x[w];
    out[v] = s;
  }
}

}  // namespace

std::string_view to_string(Metric m) noexcept {
  for (const auto& entry : kNames)
    if (entry.metric == m) return entry.name;
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  lower.erase(std::remove_if(lower.begin(), lower.end(), [](char c) { return c == '-' || c == '_'; }),
              lower.end());
  if (lower == "collectiveinfluence") return Metric::CollectiveInfluence;
  if (lower == "subgraphcentrality") return Metric::Subgraph;
  for (const auto& entry : kNames)
    if (entry.name == lower) return entry.metric;
  return std::nullopt;
}

std::span<const Metric> standard_metrics() noexcept { return kStandard; }
std::span<const Metric> extended_metrics() noexcept { return kExtended; }

std::string describe(Metric m, const CentralityParams& p) {
  std::string s(to_string(m));
  switch (m) {
    case Metric::PageRank:
      s += " damping=" + std::to_string(p.damping);
      break;
    case Metric::CollectiveInfluence:
      s += " radius=" + std::to_string(p.ci_radius);
      break;
    case Metric::CycleRatio:
      s += " max_cycle_length=" + std::to_string(p.max_cycle_length);
      break;
    default:
      break;
  }
  return s;
}

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

std::vector<double> degree_centrality(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
  return out;
}

std::vector<double> h_index(const Graph& g) {
  std::vector<double> out(g.node_count());
  std::vector<std::size_t> degrees;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    degrees.clear();
    for (NodeId w : g.neighbors(v)) degrees.push_back(g.degree(w));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    std::size_t h = 0;
    while (h < degrees.size() && degrees[h] >= h + 1) ++h;
    out[v] = static_cast<double>(h);
  }
  return out;
}

std::vector<double> coreness(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n), pos(n), vert(n);
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(vert[i]);
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const auto w = static_cast<NodeId>(vert[pw]);
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return {deg.begin(), deg.end()};
}

std::vector<double> closeness(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  Bfs bfs(n);
  std::vector<std::size_t> per_distance;
  for (NodeId s = 0; s < n; ++s) {
    bfs.run(g, s);
    per_distance.assign(static_cast<std::size_t>(bfs.dist[bfs.order.back()]) + 1, 0);
    for (NodeId v : bfs.order) ++per_distance[static_cast<std::size_t>(bfs.dist[v])];
    // Summing by distance shell makes the result depend only on the distance
    // profile, so structurally equivalent nodes get bit-identical scores.
    double sum = 0.0;
    for (std::size_t d = 1; d < per_distance.size(); ++d)
      sum += static_cast<double>(per_distance[d]) / static_cast<double>(d);
    out[s] = sum / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0), sigma(n), delta(n);
  Bfs bfs(n);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId v : bfs.order) sigma[v] = 0.0;
    bfs.run(g, s);
    sigma[s] = 1.0;
    for (NodeId v : bfs.order) {
      for (NodeId w : g.neighbors(v))
        if (bfs.dist[w] == bfs.dist[v] + 1) sigma[w] += sigma[v];
    }
    for (NodeId v : bfs.order) delta[v] = 0.0;
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (bfs.dist[v] == bfs.dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  for (double& v : bc) v /= 2.0;
  return bc;
}

std::vector<double> load_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> load(n, 0.0), flow(n);
  Bfs bfs(n);
  for (NodeId s = 0; s < n; ++s) {
    bfs.run(g, s);
    for (NodeId v : bfs.order) flow[v] = 1.0;
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
      const NodeId v = *it;
      if (v == s) continue;
      std::size_t preds = 0;
      bool source_adjacent = false;
      for (NodeId w : g.neighbors(v)) {
        if (bfs.dist[w] == bfs.dist[v] - 1) {
          ++preds;
          source_adjacent |= (w == s);
        }
      }
      if (source_adjacent) continue;
      const double share = flow[v] / static_cast<double>(preds);
      for (NodeId w : g.neighbors(v))
        if (bfs.dist[w] == bfs.dist[v] - 1) flow[w] += share;
    }
    for (NodeId v : bfs.order)
      if (v != s) load[v] += flow[v] - 1.0;
  }
  for (double& v : load) v /= 2.0;
  return load;
}

Eigenpair eigenvector_centrality(const Graph& g, double tolerance, int max_iterations) {
  const std::size_t n = g.node_count();
  Eigenpair result;
  if (n == 0) return result;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n);
  // Iterating with A + I keeps the Perron root strictly dominant on bipartite
  // graphs, where plain power iteration oscillates.
  for (int it = 0; it <= max_iterations; ++it) {
    multiply_adjacency(g, x, ax);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += x[i] * ax[i];
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::fabs(ax[i] - lambda * x[i]));
    if (residual <= tolerance * std::max(1.0, lambda)) {
      for (double& v : x) v = std::max(v, 0.0);
      result.eigenvalue = lambda;
      result.vector = std::move(x);
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] += ax[i];
    normalize_l2(x);
  }
  throw ConvergenceError("eigenvector: power iteration did not converge in " +
                         std::to_string(max_iterations) + " iterations");
}

std::vector<double> hits(const Graph& g, double tolerance, int max_iterations) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n), aax(n);
  for (int it = 0; it <= max_iterations; ++it) {
    multiply_adjacency(g, x, ax);
    multiply_adjacency(g, ax, aax);
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += x[i] * aax[i];
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::fabs(aax[i] - mu * x[i]));
    if (mu == 0.0 || residual <= tolerance * mu) {
      const double total = std::accumulate(x.begin(), x.end(), 0.0);
      for (double& v : x) v = std::max(v, 0.0) / total;
      return x;
    }
    x = aax;
    normalize_l2(x);
  }
  throw ConvergenceError("hits: power iteration did not converge in " +
                         std::to_string(max_iterations) + " iterations");
}

std::vector<double> pagerank(const Graph& g, double damping, double tolerance, int max_iterations) {
  if (!(damping > 0.0 && damping < 1.0)) throw Error("pagerank: damping must lie in (0, 1)");
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  const double nd = static_cast<double>(n);
  std::vector<double> x(n, 1.0 / nd), next(n), share(n);
  for (int it = 0; it < max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) {
        dangling += x[v];
        share[v] = 0.0;
      } else {
        share[v] = x[v] / static_cast<double>(g.degree(v));
      }
    }
    const double base = (1.0 - damping) / nd + damping * dangling / nd;
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double s = 0.0;
      for (NodeId w : g.neighbors(v)) s += share[w];
      next[v] = base + damping * s;
      change += std::fabs(next[v] - x[v]);
    }
    x.swap(next);
    if (change < tolerance) {
      const double total = std::accumulate(x.begin(), x.end(), 0.0);
      for (double& v : x) v /= total;
      return x;
    }
  }
  throw ConvergenceError("pagerank: did not converge in " + std::to_string(max_iterations) +
                         " iterations");
}

std::vector<double> subgraph_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 1.0);
  constexpr int kMaxSteps = 120;
  std::vector<double> q_prev(n, 0.0), q(n, 0.0), w(n, 0.0);
  std::vector<double> alpha, beta;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;

  // e_1^T exp(T) e_1 for the leading k x k block of the Lanczos tridiagonal.
  auto quadrature = [&](std::size_t k) {
    Eigen::VectorXd diag(static_cast<Eigen::Index>(k));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(k > 0 ? k - 1 : 0));
    for (std::size_t i = 0; i < k; ++i) diag[static_cast<Eigen::Index>(i)] = alpha[i];
    for (std::size_t i = 0; i + 1 < k; ++i) sub[static_cast<Eigen::Index>(i)] = beta[i];
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    double s = 0.0;
    for (Eigen::Index j = 0; j < values.size(); ++j) s += vectors(0, j) * vectors(0, j) * std::exp(values[j]);
    return s;
  };

  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) == 0) continue;  // exp(0) = 1
    std::fill(q_prev.begin(), q_prev.end(), 0.0);
    std::fill(q.begin(), q.end(), 0.0);
    q[i] = 1.0;
    alpha.clear();
    beta.clear();
    double estimate = 0.0;
    double previous = -1.0;
    for (int step = 0; step < kMaxSteps; ++step) {
      multiply_adjacency(g, q, w);
      const double b_prev = beta.empty() ? 0.0 : beta.back();
      double a = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        w[v] -= b_prev * q_prev[v];
        a += q[v] * w[v];
      }
      double b = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        w[v] -= a * q[v];
        b += w[v] * w[v];
      }
      b = std::sqrt(b);
      alpha.push_back(a);
      const bool exhausted = b < 1e-10;
      if (exhausted || step % 4 == 3 || step + 1 == kMaxSteps) {
        estimate = quadrature(alpha.size());
        if (exhausted || std::fabs(estimate - previous) <= 1e-14 * estimate) break;
        previous = estimate;
      }
      beta.push_back(b);
      for (std::size_t v = 0; v < n; ++v) {
        q_prev[v] = q[v];
        q[v] = w[v] / b;
      }
    }
    out[i] = estimate;
  }
  return out;
}

std::vector<double> collective_influence(const Graph& g, unsigned radius) {
  if (radius < 1) throw Error("ci: radius must be at least 1");
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  Bfs bfs(n);
  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) < 2) continue;
    bfs.run(g, i, static_cast<int>(radius));
    double boundary = 0.0;
    for (NodeId v : bfs.order) {
      if (bfs.dist[v] == static_cast<int>(radius))
        boundary += static_cast<double>(g.degree(v)) - 1.0;
    }
    out[i] = (static_cast<double>(g.degree(i)) - 1.0) * boundary;
  }
  return out;
}

namespace {

// Length of the shortest cycle through `root`, or 0 if none is at most
// `max_length`. BFS tags each node with the root neighbor it descends from; a
// non-tree edge joining two different branches closes a cycle through root.
unsigned girth_through(const Graph& g, NodeId root, unsigned max_length, std::vector<int>& dist,
                       std::vector<NodeId>& branch, std::vector<NodeId>& touched) {
  for (NodeId v : touched) dist[v] = -1;
  touched.clear();
  dist[root] = 0;
  touched.push_back(root);
  unsigned best = max_length + 1;
  for (std::size_t head = 0; head < touched.size(); ++head) {
    const NodeId v = touched[head];
    // Any cycle found from here on has length >= 2 * dist[v] + 1.
    if (2 * static_cast<unsigned>(dist[v]) + 1 >= best) break;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        branch[w] = v == root ? w : branch[v];
        touched.push_back(w);
      } else if (w != root && v != root && branch[w] != branch[v]) {
        best = std::min(best, static_cast<unsigned>(dist[v] + dist[w] + 1));
      }
    }
  }
  return best <= max_length ? best : 0;
}

std::vector<NodeId> canonical_cycle(std::vector<NodeId> cycle) {
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<std::vector<NodeId>> shortest_cycle_set(const Graph& g, unsigned max_cycle_length) {
  if (max_cycle_length < 3) throw Error("cycle ratio: max cycle length must be at least 3");
  const std::size_t n = g.node_count();
  std::vector<int> dist(n, -1);
  std::vector<NodeId> branch(n, 0), touched;
  std::set<std::vector<NodeId>> cycles;

  std::vector<NodeId> path;
  std::vector<char> on_path(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    const unsigned length = girth_through(g, root, max_cycle_length, dist, branch, touched);
    if (length == 0) continue;
    // `dist` still holds BFS distances from root for every node within
    // (length - 1) / 2 + 1 hops, which covers every node of a shortest cycle.
    path.assign(1, root);
    on_path[root] = 1;
    auto extend = [&](auto&& self, NodeId v, unsigned depth) -> void {
      for (NodeId w : g.neighbors(v)) {
        if (depth + 1 == length) {
          if (w == root) cycles.insert(canonical_cycle(path));
          continue;
        }
        if (on_path[w] || dist[w] < 0) continue;
        const unsigned remaining = length - depth - 1;
        if (static_cast<unsigned>(dist[w]) > std::min(depth + 1, remaining)) continue;
        on_path[w] = 1;
        path.push_back(w);
        self(self, w, depth + 1);
        path.pop_back();
        on_path[w] = 0;
      }
    };
    extend(extend, root, 0);
    on_path[root] = 0;
  }
  return {cycles.begin(), cycles.end()};
}

std::vector<double> cycle_ratio(const Graph& g, unsigned max_cycle_length) {
  const auto cycles = shortest_cycle_set(g, max_cycle_length);
  const std::size_t n = g.node_count();
  std::vector<double> count(n, 0.0);
  for (const auto& c : cycles)
    for (NodeId v : c) count[v] += 1.0;
  // r_i = sum_j c_ij / c_jj = sum over cycles C containing i of sum_{j in C} 1 / c_jj.
  std::vector<double> ratio(n, 0.0);
  for (const auto& c : cycles) {
    double weight = 0.0;
    for (NodeId v : c) weight += 1.0 / count[v];
    for (NodeId v : c) ratio[v] += weight;
  }
  return ratio;
}

CentralityScores compute_centrality(const Graph& g, Metric metric, const CentralityParams& params) {
  if (g.node_count() == 0) throw Error(std::string(to_string(metric)) + ": graph is empty");
  CentralityScores out;
  out.metric = metric;
  out.params = params;
  bool real_valued = true;
  switch (metric) {
    case Metric::Degree:
      out.values = degree_centrality(g);
      real_valued = false;
      break;
    case Metric::HIndex:
      out.values = h_index(g);
      real_valued = false;
      break;
    case Metric::Coreness:
      out.values = coreness(g);
      real_valued = false;
      break;
    case Metric::Closeness: out.values = closeness(g); break;
    case Metric::Betweenness: out.values = betweenness(g); break;
    case Metric::Eigenvector:
      out.values =
          eigenvector_centrality(g, params.power_tolerance, params.power_max_iterations).vector;
      break;
    case Metric::PageRank:
      out.values = pagerank(g, params.damping, params.pagerank_tolerance,
                            params.pagerank_max_iterations);
      break;
    case Metric::CycleRatio: out.values = cycle_ratio(g, params.max_cycle_length); break;
    case Metric::Hits:
      out.values = hits(g, params.power_tolerance, params.power_max_iterations);
      break;
    case Metric::Subgraph: out.values = subgraph_centrality(g); break;
    case Metric::Load: out.values = load_centrality(g); break;
    case Metric::CollectiveInfluence:
      out.values = collective_influence(g, params.ci_radius);
      real_valued = false;
      break;
  }
  if (real_valued) {
    for (double& v : out.values) v = round_significant(v, 12);
  }
  return out;
}

Ranking rank(std::span<const double> scores, TieRule tie_rule, std::uint64_t seed) {
  for (double s : scores)
    if (!std::isfinite(s)) throw Error("rank: scores must be finite");
  Ranking r;
  r.tie_rule = tie_rule;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  std::vector<std::uint64_t> key(scores.size(), 0);
  if (tie_rule == TieRule::SeededShuffle) {
    Rng rng(seed);
    for (auto& k : key) k = rng.next();
  }
  std::sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;
  });
  return r;
}

void write_scores_csv(std::ostream& out, const CentralityScores& scores) {
  out << "# " << describe(scores.metric, scores.params) << '\n';
  out << "node_id,score\n";
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < scores.values.size(); ++i) out << i << ',' << scores.values[i] << '\n';
  out.precision(old_precision);
}

}  // namespace wre
