#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "wre/centrality.hpp"
#include "wre/error.hpp"
#include "wre/generators.hpp"

using namespace wre;
using doctest::Approx;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double eps = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("node " << i);
    CHECK(got[i] == Approx(want[i]).epsilon(eps).scale(1.0));
  }
}

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

TEST_CASE("star examples") {
  const Graph s = oracle::star(4);
  check_close(degree_centrality(s), {4, 1, 1, 1, 1});
  check_close(h_index(s), {1, 1, 1, 1, 1});
  check_close(coreness(s), {1, 1, 1, 1, 1});
  check_close(betweenness(s), {6, 0, 0, 0, 0});
  check_close(closeness(s), {1.0, 0.625, 0.625, 0.625, 0.625});
  const auto order = rank(compute_centrality(s, Metric::Degree).values).order;
  CHECK(order == std::vector<NodeId>{0, 1, 2, 3, 4});
}

TEST_CASE("path examples") {
  const Graph p = oracle::path(3);
  check_close(betweenness(p), {0, 1, 0});
  check_close(load_centrality(p), {0, 1, 0});
  check_close(closeness(p), {0.75, 1.0, 0.75});
  check_close(cycle_ratio(p), {0, 0, 0});

  // CI with radius 1 on a-b-c-d: (2-1) * ((1-1) + (2-1)) = 1.
  const Graph p4 = oracle::path(4);
  check_close(collective_influence(p4, 1), {0, 1, 1, 0});
  check_close(collective_influence(p4, 2), oracle::collective_influence(p4, 2));
}

TEST_CASE("vertex-transitive graphs give uniform scores for every metric") {
  for (const Graph& g : {oracle::cycle(5), oracle::complete(4), oracle::complete(5), oracle::cycle(6)}) {
    for (Metric m : extended_metrics()) {
      INFO(to_string(m));
      CHECK(all_equal(compute_centrality(g, m).values));
    }
  }
  check_close(coreness(oracle::cycle(5)), {2, 2, 2, 2, 2});
  check_close(compute_centrality(oracle::cycle(5), Metric::PageRank).values, {0.2, 0.2, 0.2, 0.2, 0.2});
}

TEST_CASE("cycle ratio hand examples") {
  check_close(cycle_ratio(oracle::complete(3)), {3, 3, 3});
  check_close(cycle_ratio(oracle::two_triangles()), {3, 3, 3, 3, 3, 3});
  check_close(cycle_ratio(oracle::star(5)), std::vector<double>(6, 0.0));
  // K4: four triangles, every node on three of them.
  // r_i = c_ii/c_ii + 3 * (2/3) = 3.
  check_close(cycle_ratio(oracle::complete(4)), {3, 3, 3, 3});
}

TEST_CASE("cycle ratio matches exhaustive enumeration on small graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
    INFO("seed " << seed);
    check_close(cycle_ratio(g), oracle::cycle_ratio(g), 1e-12);
  }
}

TEST_CASE("cycle cap drops longer cycles") {
  const Graph c = oracle::cycle(6);
  check_close(cycle_ratio(c, 6), std::vector<double>(6, 6.0));
  check_close(cycle_ratio(c, 5), std::vector<double>(6, 0.0));
  // Every stored cycle is canonical and unique.
  const auto cycles = shortest_cycle_set(oracle::complete(5), 10);
  CHECK(cycles.size() == 10);  // C(5,3) triangles
  for (const auto& cyc : cycles) {
    CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
    CHECK(cyc[1] < cyc.back());
  }
}

TEST_CASE("betweenness and load match brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(12, 0.25, seed);
    INFO("seed " << seed);
    check_close(betweenness(g), oracle::betweenness(g));
    check_close(load_centrality(g), oracle::load(g));
  }
}

TEST_CASE("load differs from betweenness when paths split unevenly") {
  // 0 reaches 5 through 1-3-5 or 2-3-5 / 2-4-5.
  const Graph g = oracle::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  const auto bc = betweenness(g);
  const auto ld = load_centrality(g);
  check_close(ld, oracle::load(g));
  bool differs = false;
  for (std::size_t i = 0; i < bc.size(); ++i) differs |= std::fabs(bc[i] - ld[i]) > 1e-9;
  CHECK(differs);
}

TEST_CASE("collective influence matches the distance-matrix definition") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(15, 0.2, seed);
    for (unsigned r : {1u, 2u, 3u}) check_close(collective_influence(g, r), oracle::collective_influence(g, static_cast<int>(r)));
  }
}

TEST_CASE("closeness is harmonic and tolerates disconnection") {
  const Graph g = oracle::two_triangles();
  // Two neighbours at distance 1, nothing else reachable: 2 / 5.
  check_close(closeness(g), std::vector<double>(6, 0.4));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph r = oracle::random_graph(14, 0.15, seed);
    const auto d = oracle::distances(r);
    const auto got = closeness(r);
    for (NodeId i = 0; i < r.node_count(); ++i) {
      double want = 0.0;
      for (NodeId j = 0; j < r.node_count(); ++j)
        if (j != i && d[i][j] < oracle::kInf) want += 1.0 / d[i][j];
      CHECK(got[i] == Approx(want / 13.0));
    }
  }
}

TEST_CASE("coreness <= h-index <= degree on random graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(60, 0.02 + 0.004 * static_cast<double>(seed), seed);
    const auto c = coreness(g);
    const auto h = h_index(g);
    const auto d = degree_centrality(g);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(c[i] <= h[i]);
      CHECK(h[i] <= d[i]);
    }
  }
}

TEST_CASE("eigenvector satisfies the eigen-equation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = barabasi_albert(300, 2 + seed % 3, seed);
    const auto ev = eigenvector_centrality(g, 1e-10, 100000);
    double residual = 0.0;
    double top = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      double ax = 0.0;
      for (NodeId j : g.neighbors(i)) ax += ev.vector[j];
      residual = std::max(residual, std::fabs(ax - ev.eigenvalue * ev.vector[i]));
      top = std::max(top, ev.vector[i]);
      CHECK(ev.vector[i] >= 0.0);
    }
    CHECK(residual / top <= 1e-6);
  }
}

TEST_CASE("eigenvector converges on bipartite graphs") {
  const auto ev = eigenvector_centrality(oracle::path(6), 1e-10, 100000);
  CHECK(ev.eigenvalue == Approx(2.0 * std::cos(M_PI / 7.0)));
  const auto star = eigenvector_centrality(oracle::star(4), 1e-10, 100000);
  CHECK(star.eigenvalue == Approx(2.0));
}

TEST_CASE("iterative metrics report non-convergence") {
  const Graph g = barabasi_albert(200, 2, 1);
  CHECK_THROWS_AS(eigenvector_centrality(g, 1e-15, 3), ConvergenceError);
  CHECK_THROWS_AS(pagerank(g, 0.85, 1e-15, 2), ConvergenceError);
  CentralityParams bad;
  bad.damping = 1.0;
  CHECK_THROWS_AS(compute_centrality(g, Metric::PageRank, bad), Error);
  bad = {};
  bad.ci_radius = 0;
  CHECK_THROWS_AS(compute_centrality(g, Metric::CollectiveInfluence, bad), Error);
  CHECK_THROWS_AS(compute_centrality(Graph{}, Metric::Degree), Error);
}

TEST_CASE("pagerank sums to one and ignores node labelling") {
  const Graph g = erdos_renyi(400, 0.01, 3);  // leaves some isolated nodes
  const auto pr = pagerank(g, 0.85, 1e-10, 200);
  CHECK(std::accumulate(pr.begin(), pr.end(), 0.0) == Approx(1.0).epsilon(1e-9));

  std::vector<NodeId> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), NodeId{0});
  Rng rng(8);
  rng.shuffle(std::span<NodeId>(perm));
  std::vector<Edge> relabelled;
  for (auto [u, v] : g.edges()) relabelled.emplace_back(perm[u], perm[v]);
  const Graph h(g.node_count(), relabelled);
  const auto pr2 = pagerank(h, 0.85, 1e-10, 200);
  for (NodeId i = 0; i < g.node_count(); ++i) CHECK(pr2[perm[i]] == Approx(pr[i]).epsilon(1e-8));
}

TEST_CASE("hits sums to one and tracks the principal eigenvector") {
  const Graph g = barabasi_albert(200, 2, 4);
  const auto h = hits(g, 1e-12, 100000);
  CHECK(std::accumulate(h.begin(), h.end(), 0.0) == Approx(1.0));
  const auto ev = eigenvector_centrality(g, 1e-12, 100000);
  const double total = std::accumulate(ev.vector.begin(), ev.vector.end(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) CHECK(h[i] == Approx(ev.vector[i] / total).epsilon(1e-5));
}

TEST_CASE("subgraph centrality matches the dense eigendecomposition") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_graph(40, 0.1 + 0.03 * static_cast<double>(seed), seed);
    check_close(subgraph_centrality(g), oracle::subgraph_centrality(g), 1e-9);
  }
  // Where the degree-20 series has converged it agrees too.
  const Graph sparse = oracle::random_graph(30, 0.08, 77);
  check_close(subgraph_centrality(sparse), oracle::subgraph_series(sparse, 20), 1e-9);
  check_close(subgraph_centrality(Graph(3, {})), {1, 1, 1});
}

TEST_CASE("integer metrics are integers; all scores finite") {
  const Graph g = barabasi_albert(300, 3, 9);
  for (Metric m : extended_metrics()) {
    const auto s = compute_centrality(g, m);
    REQUIRE(s.values.size() == g.node_count());
    for (double v : s.values) CHECK(std::isfinite(v));
    if (m == Metric::Degree || m == Metric::HIndex || m == Metric::Coreness)
      for (double v : s.values) CHECK(v == std::floor(v));
  }
}

TEST_CASE("rank examples") {
  const std::vector<double> a{3.0, 1.0, 2.0};
  CHECK(rank(a).order == std::vector<NodeId>{0, 2, 1});
  const std::vector<double> b{1.0, 1.0, 1.0};
  CHECK(rank(b).order == std::vector<NodeId>{0, 1, 2});
  const std::vector<double> c{2.0, 2.0, 5.0};
  CHECK(rank(c).order == std::vector<NodeId>{2, 0, 1});
  const std::vector<double> bad{1.0, NAN};
  CHECK_THROWS_AS(rank(bad), Error);
}

TEST_CASE("rank is invariant under positive scaling") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(50);
    for (double& x : s) x = static_cast<double>(rng.below(10));
    std::vector<double> scaled = s;
    const double c = 0.5 + rng.uniform() * 10.0;
    for (double& x : scaled) x *= c;
    CHECK(rank(s).order == rank(scaled).order);
  }
}

TEST_CASE("seeded shuffle only permutes within tie blocks") {
  const std::vector<double> s{1, 5, 1, 5, 1, 5, 3};
  const auto r = rank(s, TieRule::SeededShuffle, 11);
  CHECK(r.tie_rule == TieRule::SeededShuffle);
  for (std::size_t i = 1; i < r.order.size(); ++i) CHECK(s[r.order[i - 1]] >= s[r.order[i]]);
  CHECK(r.order == rank(s, TieRule::SeededShuffle, 11).order);
  CHECK(s[r.order[3]] == 3);
}

TEST_CASE("metric names and score export") {
  for (Metric m : extended_metrics()) CHECK(parse_metric(to_string(m)) == m);
  CHECK(parse_metric("cycle_ratio") == Metric::CycleRatio);
  CHECK(parse_metric("Collective-Influence") == Metric::CollectiveInfluence);
  CHECK_FALSE(parse_metric("closenes").has_value());
  CHECK(standard_metrics().size() == 8);
  CHECK(extended_metrics().size() == 12);

  std::ostringstream out;
  write_scores_csv(out, compute_centrality(oracle::path(3), Metric::Betweenness));
  const std::string text = out.str();
  CHECK(text.rfind("# betweenness", 0) == 0);
  CHECK(text.find("node_id,score\n0,0\n1,1\n2,0\n") != std::string::npos);
}

TEST_CASE("round_significant") {
  CHECK(round_significant(0.1 + 0.2, 12) == round_significant(0.3, 12));
  CHECK(round_significant(0.0, 12) == 0.0);
  CHECK(round_significant(123456.7891234567, 6) == 123457.0);
}
