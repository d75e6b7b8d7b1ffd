#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wre/curve_io.hpp"
#include "wre/dataset.hpp"
#include "wre/graph.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "wre_cli_test";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const auto log = kWork / "stdout.txt";
  const std::string cmd = std::string("\"") + WRE_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::ostringstream text;
  text << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string path(const std::string& name) { return (kWork / name).string(); }

struct Fixture {
  Fixture() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "generate, attack, mda, compare, plot") {
  auto r = run("generate --model ba --n 300 --k 4 --seed 42 -o " + path("g.edges"));
  REQUIRE(r.code == 0);
  const auto g = wre::load_edge_list_file(path("g.edges"));
  CHECK(g.node_count() == 300);

  // Deterministic given flags.
  REQUIRE(run("generate --model ba --n 300 --k 4 --seed 42 -o " + path("g2.edges")).code == 0);
  CHECK(wre::load_edge_list_file(path("g2.edges")) == g);

  r = run("attack " + path("g.edges") + " --strategy degree -o " + path("deg.csv"));
  REQUIRE(r.code == 0);
  CHECK(wre::read_curve_csv_file(path("deg.csv")).n == 300);

  r = run("mda " + path("g.edges") +
          " --strategies degree,hindex,coreness,closeness,betweenness,eigenvector,pagerank,cycleratio -o " +
          path("mda.csv") + " --decomposition " + path("dec.csv") + " --label " + path("label.csv"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R_W") != std::string::npos);
  CHECK(fs::exists(path("mda.csv")));
  CHECK(fs::exists(path("dec.csv")));

  r = run("compare " + path("label.csv") + " " + path("label.csv"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("abs difference 0\n") != std::string::npos);
  CHECK(r.out.find("MSE 0\n") != std::string::npos);

  r = run("compare " + path("label.csv") + " " + path("deg.csv") + " --filter -o " + path("cmp.txt"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R_W simulated") != std::string::npos);
  CHECK(r.out.find("R_W predicted") != std::string::npos);

  r = run("plot " + path("label.csv") + " " + path("deg.csv") + " -o " + path("fig.svg"));
  REQUIRE(r.code == 0);
  CHECK(fs::exists(path("fig.svg")));
  CHECK(fs::exists(path("fig.csv")));
}

TEST_CASE_FIXTURE(Fixture, "dataset and rationality verbs") {
  auto r = run("dataset synthetic --family er,ba --k 4 --n 40 --instances 5 --seed 3 --jobs 2 -o " + path("corpus"));
  REQUIRE(r.code == 0);
  const auto m = wre::read_manifest(kWork / "corpus" / "manifest.json");
  CHECK(m.samples.size() == 10);
  r = run("dataset verify " + path("corpus") + " --fraction 1");
  CHECK(r.code == 0);

  r = run("rationality --family ba --k 4 --q 1,8 --n 100 --instances 2 --seed 1 -o " + path("mr.csv"));
  REQUIRE(r.code == 0);
  std::ifstream in(path("mr.csv"));
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header.rfind("family,k,q,max,min,mean", 0) == 0);
  CHECK(first.rfind("ba,4,1,1,1,1,", 0) == 0);
}

TEST_CASE_FIXTURE(Fixture, "exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("generate --model ba --n 10 --k 2 --bogus -o " + path("x.edges")).code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("mda " + path("g.edges") + " --strategies nonsense").code == 1);
  CHECK(run("attack " + path("missing.edges") + " -o " + path("a.csv")).code == 2);
  CHECK(run("compare " + path("missing.csv") + " " + path("missing.csv")).code == 2);
  CHECK(run("generate --model regular --n 5 --k 3 -o " + path("x.edges")).code == 2);
  CHECK(run("--help").code == 0);
  // Nothing but the requested outputs is written.
  CHECK_FALSE(fs::exists(path("a.csv")));
}

TEST_CASE_FIXTURE(Fixture, "labelled input gets a relabel sidecar") {
  std::ofstream(path("lab.edges")) << "alice bob\nbob carol\n";
  REQUIRE(run("attack " + path("lab.edges") + " -o " + path("lab.csv")).code == 0);
  std::ifstream in(path("lab.csv.map"));
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "alice 0\nbob 1\ncarol 2\n");

  REQUIRE(run("generate --model er --n 20 --k 4 -o " + path("plain.edges")).code == 0);
  REQUIRE(run("attack " + path("plain.edges") + " -o " + path("plain.csv")).code == 0);
  CHECK_FALSE(fs::exists(path("plain.csv.map")));
}
