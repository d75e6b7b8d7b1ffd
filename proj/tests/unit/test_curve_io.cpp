#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "wre/curve_io.hpp"
#include "wre/error.hpp"

using namespace wre;

TEST_CASE("attack curve round trip") {
  const NodeId order[] = {1, 0, 2};
  auto curve = simulate_removal(oracle::path(3), order);
  curve.strategy = "degree";
  std::ostringstream out;
  write_curve_csv(out, to_curve_file(curve, "p3"));
  CHECK(out.str() ==
        "# n=3,strategy=degree,graph_id=p3\n"
        "step,node,gcc_size,relative,provenance\n"
        "1,1,1,0.333333333333,simulated\n"
        "2,0,1,0.333333333333,simulated\n"
        "3,2,0,0,simulated\n");
  std::istringstream in(out.str());
  const auto back = read_curve_csv(in);
  CHECK(back.n == 3);
  CHECK(back.strategy == "degree");
  CHECK(back.graph_id == "p3");
  CHECK(back.provenance == "simulated");
  CHECK(back.nodes[0] == NodeId{1});
  CHECK(back.gcc_sizes[2] == 0u);
  CHECK(back.relative[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("predicted curves leave node and size empty") {
  std::ostringstream out;
  write_curve_csv(out, to_curve_file({0.9, 0.25}, "mda", "g7", "predicted-filtered"));
  std::istringstream in(out.str());
  const auto back = read_curve_csv(in);
  CHECK(back.provenance == "predicted-filtered");
  CHECK_FALSE(back.nodes[0].has_value());
  CHECK_FALSE(back.gcc_sizes[1].has_value());
  CHECK(back.relative == std::vector<double>{0.9, 0.25});
}

TEST_CASE("minimal external CSV with only a relative column") {
  std::istringstream in("relative\n1\n0.5\n0\n");
  const auto c = read_curve_csv(in);
  CHECK(c.n == 3);
  CHECK(c.relative == std::vector<double>{1.0, 0.5, 0.0});
}

TEST_CASE("malformed curve CSVs") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_curve_csv(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("step,value\n1,0.5\n"), ParseError);
  CHECK_THROWS_AS(parse("step,relative\n1,abc\n"), ParseError);
  CHECK_THROWS_AS(parse("step,relative\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("# n=3\nstep,relative\n1,0.5\n"), ParseError);
  try {
    parse("step,relative\n1,0.5\n2,x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(read_curve_csv_file("/nonexistent/curve.csv"), Error);
}

TEST_CASE("MDA and decomposition CSVs") {
  AttackCurve a, b;
  a.strategy = "a";
  a.order = {0, 1, 2, 3, 4, 5};
  b.strategy = "b";
  b.order = {5, 4, 3, 2, 1, 0};
  b.gcc_sizes = {4, 4, 4, 2, 1, 0};
  a.gcc_sizes = {3, 2, 2, 2, 2, 0};
  const AttackCurve cs[] = {a, b};
  const auto mda = stack(cs);
  std::ostringstream m;
  write_mda_csv(m, mda);
  CHECK(m.str().rfind("step,relative,winner_strategy,winner_node,alternative_count\n1,0.5,a,0,1\n", 0) == 0);
  CHECK(m.str().find("\n6,0,a,5,2\n") != std::string::npos);
  std::ostringstream d;
  write_decomposition_csv(d, mda);
  CHECK(d.str() == "strategy,positions,ranges\na,5,1-4;6\nb,1,5\n");
}

TEST_CASE("MR table CSV") {
  std::ostringstream out;
  write_mr_csv(out, {{"ba", 4, 8, summarize({1.0, 0.96, 0.9})}});
  CHECK(out.str() ==
        "family,k,q,max,min,mean,gt_0.95,gt_0.90,gt_0.85,gt_0.80,gt_0.75,gt_0.70\n"
        "ba,4,8,1,0.9,0.953333333333,2,0,1,0,0,0\n");
}
