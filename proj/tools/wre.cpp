// wre: command-line front end for attack simulation, MDA stacking,
// rationality experiments, corpus builds and prediction comparison.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "wre/attack.hpp"
#include "wre/curve_io.hpp"
#include "wre/dataset.hpp"
#include "wre/error.hpp"
#include "wre/filter.hpp"
#include "wre/generators.hpp"
#include "wre/mda.hpp"
#include "wre/random.hpp"
#include "wre/rationality.hpp"

namespace fs = std::filesystem;
using namespace wre;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
};

// Writes to `path`, or to stdout when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  fn(out);
  if (!out) throw Error("write failed: " + path);
}

// Loads an edge list. When its labels are not already 0..n-1, the
// label -> id map is written next to `out` as `<out>.map`.
Graph load_graph(const std::string& path, const std::string& out) {
  Graph graph = load_edge_list_file(path);
  const auto& labels = graph.labels();
  bool identity = true;
  for (std::size_t i = 0; identity && i < labels.size(); ++i) identity = labels[i] == std::to_string(i);
  if (!identity && !out.empty() && out != "-") {
    emit(out + ".map", [&](std::ostream& os) { write_relabel_map(os, graph); });
  }
  return graph;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names) {
  std::vector<Metric> metrics;
  for (const auto& name : names) {
    const auto m = parse_metric(name);
    if (!m) throw CLI::ValidationError("--strategies", "unknown strategy '" + name + "'");
    metrics.push_back(*m);
  }
  return metrics;
}

std::vector<Metric> metrics_for_q(std::size_t q) {
  const auto all = extended_metrics();
  if (q == 0 || q > all.size()) throw CLI::ValidationError("--q", "must be in 1..12");
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(q)};
}

Model model_option(const std::string& name) {
  const auto m = parse_model(name);
  if (!m) throw CLI::ValidationError("--model", "unknown model '" + name + "'");
  return *m;
}

TieRule tie_rule_option(const std::string& name) {
  if (name == "id") return TieRule::AscendingId;
  if (name == "shuffle") return TieRule::SeededShuffle;
  throw CLI::ValidationError("--ties", "expected 'id' or 'shuffle'");
}

MatchRule match_option(const std::string& name) {
  if (name == "value") return MatchRule::SameValue;
  if (name == "position") return MatchRule::SamePosition;
  throw CLI::ValidationError("--match", "expected 'value' or 'position'");
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

// Linear resampling on the relative-p axis, used when a prediction was made
// at a different curve length than the simulation.
std::vector<double> resample(const std::vector<double>& v, std::size_t n) {
  if (v.size() == n || v.empty()) return v;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    const double x = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(x));
    const auto hi = std::min(lo + 1, v.size() - 1);
    out[i] = v[lo] + (x - static_cast<double>(lo)) * (v[hi] - v[lo]);
  }
  return out;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// --- generate ---------------------------------------------------------------

void add_generate(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("generate", "Generate a synthetic network as an edge list");
  auto model = std::make_shared<std::string>("er");
  auto config = std::make_shared<GeneratorConfig>();
  cmd->add_option("--model", *model, "ba, er, ws or regular")->required();
  cmd->add_option("--n", config->n, "Node count")->required();
  cmd->add_option("--k", config->mean_degree, "Mean degree")->required();
  cmd->add_option("--rewire", config->ws_rewire_prob, "WS rewiring probability")->capture_default_str();
  cmd->callback([&g, model, config] {
    config->model = model_option(*model);
    config->seed = g.seed;
    const Graph graph = generate(*config);
    emit(g.out, [&](std::ostream& out) { write_edge_list(out, graph); });
    std::fprintf(stderr, "%s n=%zu m=%zu <k>=%.4f\n", std::string(to_string(config->model)).c_str(),
                 graph.node_count(), graph.edge_count(), graph.mean_degree());
  });
}

// --- attack -----------------------------------------------------------------

void add_attack(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("attack", "Simulate one static attack strategy");
  struct Opts {
    std::string graph, strategy = "degree", ties = "id", scores;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("graph", o->graph, "Edge-list file")->required();
  cmd->add_option("--strategy", o->strategy, "Centrality metric")->capture_default_str();
  cmd->add_option("--ties", o->ties, "Tie rule: id or shuffle")->capture_default_str();
  cmd->add_option("--scores", o->scores, "Also write the centrality scores CSV here");
  cmd->callback([&g, o] {
    const auto metric = parse_metrics({o->strategy}).front();
    const auto rule = tie_rule_option(o->ties);
    const Graph graph = load_graph(o->graph, g.out);
    if (!o->scores.empty()) {
      const auto scores = compute_centrality(graph, metric);
      emit(o->scores, [&](std::ostream& out) { write_scores_csv(out, scores); });
    }
    const auto curve = attack_by_strategy(graph, metric, {}, rule, g.seed);
    emit(g.out, [&](std::ostream& out) { write_curve_csv(out, to_curve_file(curve, stem(o->graph))); });
    std::fprintf(stderr, "%s: mean relative GCC %.6f\n", curve.strategy.c_str(), mean_relative(curve));
  });
}

// --- mda --------------------------------------------------------------------

void add_mda(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("mda", "Stack attack strategies into the most destructive curve");
  struct Opts {
    std::string graph, decomposition, label, ties = "id", match = "value";
    std::vector<std::string> strategies;
    bool rational = false;
  };
  auto o = std::make_shared<Opts>();
  for (Metric m : standard_metrics()) o->strategies.emplace_back(to_string(m));
  cmd->add_option("graph", o->graph, "Edge-list file")->required();
  cmd->add_option("--strategies", o->strategies, "Comma-separated metrics")->delimiter(',')->capture_default_str();
  cmd->add_option("--decomposition", o->decomposition, "Per-strategy contribution CSV");
  cmd->add_option("--label", o->label, "Also write the curve in label format");
  cmd->add_option("--ties", o->ties, "Tie rule: id or shuffle")->capture_default_str();
  cmd->add_flag("--rational", o->rational, "Pick winners by the rationality counter rule");
  cmd->add_option("--match", o->match, "Replacement rule for the reported MR: value or position")
      ->capture_default_str();
  cmd->callback([&g, o] {
    const auto metrics = parse_metrics(o->strategies);
    const auto rule = tie_rule_option(o->ties);
    const auto match = match_option(o->match);
    const Graph graph = load_graph(o->graph, g.out);
    const auto curves = attack_all(graph, metrics, {}, rule, g.seed);
    const auto mda = o->rational ? stack_rational(curves) : stack(curves);
    emit(g.out, [&](std::ostream& out) { write_mda_csv(out, mda); });
    if (!o->decomposition.empty())
      emit(o->decomposition, [&](std::ostream& out) { write_decomposition_csv(out, mda); });
    if (!o->label.empty())
      emit(o->label, [&](std::ostream& out) { write_curve_csv(out, to_curve_file(mda, stem(o->graph))); });
    const double g0 = intact_gcc(graph);
    std::fprintf(stderr, "R_W %.6f  D_MDA %.6f  G(0) %.6f  MR %.4f\n", worst_robustness(mda),
                 destruction(mda, g0), g0, maximum_rationality(curves, match).mr);
  });
}

// --- rationality ------------------------------------------------------------

void add_rationality(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("rationality", "Maximum-rationality statistics over generated instances");
  struct Opts {
    std::vector<std::string> families{"ba", "er", "regular"};
    std::vector<unsigned> degrees{4, 6, 8};
    std::vector<std::size_t> qs{8};
    std::size_t n = 1000, instances = 20;
    std::string match = "value";
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--family", o->families, "Comma-separated models")->delimiter(',')->capture_default_str();
  cmd->add_option("--k", o->degrees, "Comma-separated mean degrees")->delimiter(',')->capture_default_str();
  cmd->add_option("--q", o->qs, "Strategy counts (8 = standard set, 12 = extended)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--n", o->n, "Nodes per instance")->capture_default_str();
  cmd->add_option("--instances", o->instances, "Instances per configuration")->capture_default_str();
  cmd->add_option("--match", o->match, "Replacement rule: value or position")->capture_default_str();
  cmd->callback([&g, o] {
    const auto match = match_option(o->match);
    std::vector<std::vector<Metric>> sets;
    for (std::size_t q : o->qs) sets.push_back(metrics_for_q(q));
    std::vector<Model> models;
    for (const auto& f : o->families) models.push_back(model_option(f));

    std::vector<MrRow> rows;
    std::printf("%-8s %3s %3s %6s %6s %6s", "family", "k", "q", "max", "min", "mean");
    for (double b : kMrBands) std::printf(" %6s", fmt(">%.2f", b).c_str());
    std::printf("\n");
    for (const auto& family : make_families(models, o->degrees, o->n)) {
      MrExperiment exp;
      exp.family = family;
      exp.instances = o->instances;
      exp.seed = g.seed;
      exp.jobs = g.jobs;
      exp.rule = match;
      const auto stats = mr_experiment(exp, sets);
      for (std::size_t s = 0; s < sets.size(); ++s) {
        const auto& st = stats[s];
        rows.push_back({std::string(to_string(family.model)), family.mean_degree, sets[s].size(), st});
        std::printf("%-8s %3u %3zu %6.3f %6.3f %6.3f", rows.back().family.c_str(), family.mean_degree,
                    sets[s].size(), st.max, st.min, st.mean);
        for (std::size_t c : st.band_counts) std::printf(" %6zu", c);
        std::printf("\n");
        std::fflush(stdout);
      }
    }
    if (!g.out.empty()) emit(g.out, [&](std::ostream& out) { write_mr_csv(out, rows); });
  });
}

// --- dataset ----------------------------------------------------------------

void print_build(const CorpusBuild& build, const std::string& root) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : build.manifest.samples) ++counts[static_cast<int>(s.split)];
  std::printf("%zu samples in %s (train %zu, val %zu, test %zu)\n", build.manifest.samples.size(),
              root.c_str(), counts[0], counts[1], counts[2]);
  for (const auto& w : build.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  for (const auto& f : build.failures) std::fprintf(stderr, "failed: %s\n", f.c_str());
}

void add_dataset(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("dataset", "Build or check a labelled training corpus");
  cmd->require_subcommand(1);
  struct Opts {
    std::vector<std::string> families{"ba", "er", "ws", "regular"};
    std::vector<unsigned> degrees{4, 6, 8};
    std::vector<std::string> strategies;
    std::vector<double> ratios{0.8, 0.1, 0.1};
    std::vector<std::string> sources;
    std::size_t n = 100, instances = 50, sample_size = 1000, samples = 1000;
    double rewire = 0.1, fraction = 0.01;
    std::string root;
  };
  auto o = std::make_shared<Opts>();
  for (Metric m : standard_metrics()) o->strategies.emplace_back(to_string(m));
  auto options = [&g, o] {
    if (g.out.empty()) throw CLI::ValidationError("-o", "corpus root directory is required");
    if (o->ratios.size() != 3) throw CLI::ValidationError("--ratios", "expected train,val,test");
    CorpusOptions c;
    c.root = g.out;
    c.strategies = parse_metrics(o->strategies);
    c.ratios = {o->ratios[0], o->ratios[1], o->ratios[2]};
    c.seed = g.seed;
    c.jobs = g.jobs;
    return c;
  };
  auto common = [o](CLI::App* sub) {
    sub->add_option("--strategies", o->strategies, "Labelling metrics")->delimiter(',')->capture_default_str();
    sub->add_option("--ratios", o->ratios, "train,val,test")->delimiter(',')->capture_default_str();
  };

  auto* syn = cmd->add_subcommand("synthetic", "Generated networks");
  syn->add_option("--family", o->families, "Comma-separated models")->delimiter(',')->capture_default_str();
  syn->add_option("--k", o->degrees, "Comma-separated mean degrees")->delimiter(',')->capture_default_str();
  syn->add_option("--n", o->n, "Nodes per graph")->capture_default_str();
  syn->add_option("--instances", o->instances, "Instances per (family, k)")->capture_default_str();
  syn->add_option("--rewire", o->rewire, "WS rewiring probability")->capture_default_str();
  common(syn);
  syn->callback([&g, o, options] {
    std::vector<Model> models;
    for (const auto& f : o->families) models.push_back(model_option(f));
    const auto opts = options();
    print_build(build_synthetic_corpus(make_families(models, o->degrees, o->n, o->rewire), o->instances, opts),
                g.out);
  });

  auto* emp = cmd->add_subcommand("empirical", "Connected samples of real networks");
  emp->add_option("sources", o->sources, "Edge-list files; the file stem names the family")->required();
  emp->add_option("--sample-size", o->sample_size, "Nodes per sample")->capture_default_str();
  emp->add_option("--samples", o->samples, "Samples per source")->capture_default_str();
  common(emp);
  emp->callback([&g, o, options] {
    const auto opts = options();
    std::vector<std::pair<std::string, Graph>> sources;
    for (const auto& path : o->sources) sources.emplace_back(stem(path), load_edge_list_file(path));
    print_build(build_empirical_corpus(sources, o->sample_size, o->samples, opts), g.out);
  });

  auto* ver = cmd->add_subcommand("verify", "Re-simulate a random fraction of a corpus");
  ver->add_option("root", o->root, "Corpus root")->required();
  ver->add_option("--fraction", o->fraction, "Share of samples to re-simulate")->capture_default_str();
  ver->callback([&g, o] {
    const auto manifest = read_manifest(fs::path(o->root) / "manifest.json");
    std::vector<std::size_t> picks(manifest.samples.size());
    std::iota(picks.begin(), picks.end(), std::size_t{0});
    Rng rng(g.seed);
    rng.shuffle(std::span<std::size_t>(picks));
    const auto take = std::min(picks.size(), static_cast<std::size_t>(std::ceil(
                                                 o->fraction * static_cast<double>(picks.size()))));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < take; ++i) {
      const auto& s = manifest.samples[picks[i]];
      const auto msg = verify_sample(o->root, manifest, s);
      if (!msg.empty()) {
        ++bad;
        std::fprintf(stderr, "%s: %s\n", s.id.c_str(), msg.c_str());
      }
    }
    std::printf("verified %zu of %zu samples, %zu mismatches\n", take, manifest.samples.size(), bad);
    if (bad) throw Error("corpus verification failed");
  });
}

// --- compare ----------------------------------------------------------------

void add_compare(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("compare", "Compare a simulated curve with a predicted one");
  struct Opts {
    std::string simulated, predicted;
    bool filter = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("simulated", o->simulated, "Simulated curve CSV")->required();
  cmd->add_option("predicted", o->predicted, "Predicted curve CSV")->required();
  cmd->add_flag("--filter", o->filter, "Clamp and repair the prediction before comparing");
  cmd->callback([&g, o] {
    const auto sim = read_curve_csv_file(o->simulated).relative;
    auto pred = read_curve_csv_file(o->predicted).relative;
    if (sim.empty() || pred.empty()) throw Error("compare: empty curve");
    const bool resampled = pred.size() != sim.size();
    pred = resample(pred, sim.size());
    if (o->filter) pred = apply_filter(pred);
    double mse = 0.0;
    for (std::size_t i = 0; i < sim.size(); ++i) mse += (sim[i] - pred[i]) * (sim[i] - pred[i]);
    mse /= static_cast<double>(sim.size());
    const double rw_sim = mean(sim), rw_pred = mean(pred);
    std::ostringstream report;
    report << "R_W simulated " << format_value(rw_sim) << '\n'
           << "R_W predicted " << format_value(rw_pred) << '\n'
           << "abs difference " << format_value(std::fabs(rw_sim - rw_pred)) << '\n'
           << "MSE " << format_value(mse) << '\n';
    if (resampled) report << "note: prediction resampled to " << sim.size() << " points\n";
    std::cout << report.str();
    if (!g.out.empty()) emit(g.out, [&](std::ostream& out) { out << report.str(); });
  });
}

// --- plot -------------------------------------------------------------------

const char* kColors[] = {"#1f5fbf", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#2c3e50"};

void write_svg(std::ostream& out, const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& series, const std::string& title) {
  const double w = 640, h = 420, left = 60, right = 20, top = 40, bottom = 50;
  const double pw = w - left - right, ph = h - top - bottom;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n"
      << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double f = t / 5.0;
    out << "<text x=\"" << left + f * pw << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
        << fmt("%.1f", f) << "</text>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << top + ph - f * ph + 4 << "\" text-anchor=\"end\">"
        << fmt("%.1f", f) << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\">p</text>\n"
      << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
      << ")\" text-anchor=\"middle\">G(p)</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& v = series[s];
    const char* color = kColors[s % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double p = static_cast<double>(i + 1) / static_cast<double>(v.size());
      out << fmt("%.2f", left + p * pw) << ',' << fmt("%.2f", top + ph - std::clamp(v[i], 0.0, 1.0) * ph) << ' ';
    }
    out << "\"/>\n"
        << "<text x=\"" << left + pw - 10 << "\" y=\"" << top + 18 + 16 * static_cast<double>(s)
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << names[s] << "  R_W="
        << fmt("%.4f", mean(v)) << "</text>\n";
  }
  out << "</svg>\n";
}

void add_plot(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("plot", "SVG overlay of curves, with a CSV of the plotted data");
  struct Opts {
    std::vector<std::string> curves;
    std::string title = "Attack curves";
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("curves", o->curves, "Curve CSVs (simulated first, predictions after)")->required();
  cmd->add_option("--title", o->title, "Plot title")->capture_default_str();
  cmd->callback([&g, o] {
    if (g.out.empty() || g.out == "-") throw CLI::ValidationError("-o", "an SVG output path is required");
    std::vector<std::string> names;
    std::vector<std::vector<double>> series;
    for (const auto& path : o->curves) {
      const auto c = read_curve_csv_file(path);
      names.push_back(stem(path) + " (" + (c.provenance.empty() ? "curve" : c.provenance) + ")");
      series.push_back(c.relative);
    }
    emit(g.out, [&](std::ostream& out) { write_svg(out, names, series, o->title); });
    const auto csv = fs::path(g.out).replace_extension(".csv").string();
    emit(csv, [&](std::ostream& out) {
      out << "series,step,p,relative\n";
      for (std::size_t s = 0; s < series.size(); ++s)
        for (std::size_t i = 0; i < series[s].size(); ++i)
          out << names[s] << ',' << (i + 1) << ','
              << format_value(static_cast<double>(i + 1) / static_cast<double>(series[s].size())) << ','
              << format_value(series[s][i]) << '\n';
    });
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-robustness evaluation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for batch verbs")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("-o,--out", g.out, "Output path");

  add_generate(app, g);
  add_attack(app, g);
  add_mda(app, g);
  add_rationality(app, g);
  add_dataset(app, g);
  add_compare(app, g);
  add_plot(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // Validation errors thrown from callbacks land here too.
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
