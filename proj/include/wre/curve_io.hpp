#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wre/attack.hpp"
#include "wre/mda.hpp"
#include "wre/rationality.hpp"

namespace wre {

/// A relative-GCC curve as stored on disk:
///
///   # n=<n>,strategy=<id>,graph_id=<id>
///   step,node,gcc_size,relative,provenance
///   1,17,99,0.99,simulated
///
/// `node` and `gcc_size` are left empty when unknown (predicted curves).
/// Relative values carry 12 significant digits.
struct CurveFile {
  std::size_t n = 0;
  std::string strategy;
  std::string graph_id;
  std::string provenance = "simulated";
  std::vector<double> relative;
  std::vector<std::optional<NodeId>> nodes;
  std::vector<std::optional<std::uint32_t>> gcc_sizes;
};

CurveFile to_curve_file(const AttackCurve& curve, const std::string& graph_id);
CurveFile to_curve_file(const MdaCurve& mda, const std::string& graph_id);
CurveFile to_curve_file(const std::vector<double>& values, const std::string& strategy,
                        const std::string& graph_id, const std::string& provenance);

void write_curve_csv(std::ostream& out, const CurveFile& curve);
void write_curve_csv_file(const std::string& path, const CurveFile& curve);
/// Throws ParseError on malformed content.
CurveFile read_curve_csv(std::istream& in);
CurveFile read_curve_csv_file(const std::string& path);

/// step,relative,winner_strategy,winner_node,alternative_count
void write_mda_csv(std::ostream& out, const MdaCurve& mda);
/// strategy,positions,ranges  (ranges as "first-last" 1-based, ';'-separated)
void write_decomposition_csv(std::ostream& out, const MdaCurve& mda);

struct MrRow {
  std::string family;
  unsigned mean_degree = 0;
  std::size_t q = 0;
  MrStatistics stats;
};
/// family,k,q,max,min,mean,gt_0.95,...,gt_0.70
void write_mr_csv(std::ostream& out, const std::vector<MrRow>& rows);

/// "%.12g"
std::string format_value(double v);

}  // namespace wre
