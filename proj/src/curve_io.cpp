#include "wre/curve_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wre/error.hpp"

namespace wre {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CurveFile to_curve_file(const AttackCurve& curve, const std::string& graph_id) {
  CurveFile f;
  f.n = curve.node_count();
  f.strategy = curve.strategy;
  f.graph_id = graph_id;
  f.relative = curve.relative_values();
  for (std::size_t i = 0; i < f.n; ++i) {
    f.nodes.emplace_back(curve.order[i]);
    f.gcc_sizes.emplace_back(curve.gcc_sizes[i]);
  }
  return f;
}

CurveFile to_curve_file(const MdaCurve& mda, const std::string& graph_id) {
  CurveFile f;
  f.n = mda.node_count();
  f.strategy = "mda";
  f.graph_id = graph_id;
  f.relative = mda.relative_values();
  for (const auto& p : mda.positions) {
    f.nodes.emplace_back(p.winner_node);
    f.gcc_sizes.emplace_back(p.gcc_size);
  }
  return f;
}

CurveFile to_curve_file(const std::vector<double>& values, const std::string& strategy,
                        const std::string& graph_id, const std::string& provenance) {
  CurveFile f;
  f.n = values.size();
  f.strategy = strategy;
  f.graph_id = graph_id;
  f.provenance = provenance;
  f.relative = values;
  f.nodes.assign(values.size(), std::nullopt);
  f.gcc_sizes.assign(values.size(), std::nullopt);
  return f;
}

void write_curve_csv(std::ostream& out, const CurveFile& c) {
  out << "# n=" << c.n << ",strategy=" << c.strategy << ",graph_id=" << c.graph_id << '\n';
  out << "step,node,gcc_size,relative,provenance\n";
  for (std::size_t i = 0; i < c.relative.size(); ++i) {
    out << (i + 1) << ',';
    if (i < c.nodes.size() && c.nodes[i]) out << *c.nodes[i];
    out << ',';
    if (i < c.gcc_sizes.size() && c.gcc_sizes[i]) out << *c.gcc_sizes[i];
    out << ',' << format_value(c.relative[i]) << ',' << c.provenance << '\n';
  }
}

void write_curve_csv_file(const std::string& path, const CurveFile& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_curve_csv(out, curve);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <class T>
bool parse_number(const std::string& s, T& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

CurveFile read_curve_csv(std::istream& in) {
  CurveFile c;
  c.provenance.clear();
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  int col_node = -1, col_gcc = -1, col_rel = -1, col_prov = -1;
  std::optional<std::size_t> declared_n;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      for (const auto& kv : split_csv(line.substr(1))) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        auto key = kv.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        const auto value = kv.substr(eq + 1);
        if (key == "n") {
          std::size_t n = 0;
          if (!parse_number(value, n)) throw ParseError("bad node count in metadata", line_no);
          declared_n = n;
        } else if (key == "strategy") {
          c.strategy = value;
        } else if (key == "graph_id") {
          c.graph_id = value;
        }
      }
      continue;
    }
    if (header.empty()) {
      header = split_csv(line);
      for (int i = 0; i < static_cast<int>(header.size()); ++i) {
        const auto& h = header[static_cast<std::size_t>(i)];
        if (h == "node") col_node = i;
        if (h == "gcc_size") col_gcc = i;
        if (h == "relative") col_rel = i;
        if (h == "provenance") col_prov = i;
      }
      if (col_rel < 0) throw ParseError("curve CSV has no 'relative' column", line_no);
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields", line_no);
    }
    double rel = 0.0;
    // from_chars for double is not available on every toolchain in use.
    try {
      std::size_t used = 0;
      rel = std::stod(fields[static_cast<std::size_t>(col_rel)], &used);
      if (used != fields[static_cast<std::size_t>(col_rel)].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad relative value", line_no);
    }
    c.relative.push_back(rel);
    std::optional<NodeId> node;
    if (col_node >= 0 && !fields[static_cast<std::size_t>(col_node)].empty()) {
      NodeId v = 0;
      if (!parse_number(fields[static_cast<std::size_t>(col_node)], v))
        throw ParseError("bad node id", line_no);
      node = v;
    }
    c.nodes.push_back(node);
    std::optional<std::uint32_t> gcc;
    if (col_gcc >= 0 && !fields[static_cast<std::size_t>(col_gcc)].empty()) {
      std::uint32_t s = 0;
      if (!parse_number(fields[static_cast<std::size_t>(col_gcc)], s))
        throw ParseError("bad gcc size", line_no);
      gcc = s;
    }
    c.gcc_sizes.push_back(gcc);
    if (col_prov >= 0 && c.provenance.empty()) c.provenance = fields[static_cast<std::size_t>(col_prov)];
  }
  if (header.empty()) throw ParseError("curve CSV has no header", 0);
  c.n = c.relative.size();
  if (declared_n && *declared_n != c.n) {
    throw ParseError("metadata says n=" + std::to_string(*declared_n) + " but file has " +
                         std::to_string(c.n) + " rows",
                     0);
  }
  return c;
}

CurveFile read_curve_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return read_curve_csv(in);
}

void write_mda_csv(std::ostream& out, const MdaCurve& mda) {
  out << "step,relative,winner_strategy,winner_node,alternative_count\n";
  for (std::size_t i = 0; i < mda.node_count(); ++i) {
    const auto& p = mda.positions[i];
    out << (i + 1) << ',' << format_value(mda.relative(i)) << ','
        << mda.source_strategies[p.winner_strategy] << ',' << p.winner_node << ','
        << p.alternatives.size() << '\n';
  }
}

void write_decomposition_csv(std::ostream& out, const MdaCurve& mda) {
  out << "strategy,positions,ranges\n";
  const auto owned = decompose(mda);
  for (std::size_t s = 0; s < owned.size(); ++s) {
    out << mda.source_strategies[s] << ',' << owned[s].size() << ',';
    bool first = true;
    for (auto [a, b] : to_ranges(owned[s])) {
      if (!first) out << ';';
      first = false;
      out << (a + 1);
      if (b != a) out << '-' << (b + 1);
    }
    out << '\n';
  }
}

void write_mr_csv(std::ostream& out, const std::vector<MrRow>& rows) {
  out << "family,k,q,max,min,mean";
  for (double b : kMrBands) {
    char buf[16];
    std::snprintf(buf, sizeof buf, ",gt_%.2f", b);
    out << buf;
  }
  out << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.mean_degree << ',' << r.q << ',' << format_value(r.stats.max)
        << ',' << format_value(r.stats.min) << ',' << format_value(r.stats.mean);
    for (std::size_t count : r.stats.band_counts) out << ',' << count;
    out << '\n';
  }
}

}  // namespace wre
