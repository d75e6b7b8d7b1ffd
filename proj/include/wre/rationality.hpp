#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wre/attack.hpp"
#include "wre/generators.hpp"
#include "wre/mda.hpp"

namespace wre {

/// Node occurrence counts along an MDA curve and the resulting Maximum
/// Rationality, MR = (N - u0) / N.
struct MrReport {
  std::vector<std::uint32_t> counters;
  std::vector<NodeId> assignment;  // node chosen at each position
  std::size_t u0 = 0;
  double mr = 0.0;
  std::size_t iterations = 0;  // replacement passes run by optimize_and_score
};

/// Left-to-right assignment: at each position, among the nodes of the
/// strategies attaining the minimum, take the one with the smallest counter
/// (then the smallest id).
MrReport build_assignment(const MdaCurve& mda);
MrReport build_assignment(std::span<const AttackCurve> curves);

/// Which zero-counter nodes may take over a position in the replacement pass.
///   SameValue:    the node's GCC value under some strategy (taken where that
///                 strategy removes it) equals the MDA value at the position.
///   SamePosition: the node is removed at that very position by a strategy
///                 attaining the minimum.
/// SamePosition never yields more than a maximum bipartite matching of
/// positions to their candidates allows; SameValue can reach further.
enum class MatchRule { SameValue, SamePosition };

std::string_view to_string(MatchRule rule) noexcept;

/// Swaps matching zero-counter nodes into positions whose occupant is used at
/// least twice, scanning positions ascending and candidates by ascending id,
/// until a full pass changes nothing. Then recomputes u0 and MR.
MrReport optimize_and_score(MrReport report, std::span<const AttackCurve> curves,
                            MatchRule rule = MatchRule::SameValue);

/// build_assignment followed by optimize_and_score.
MrReport maximum_rationality(std::span<const AttackCurve> curves,
                             MatchRule rule = MatchRule::SameValue);

/// The stacked curve with winners taken from the optimized assignment. Uses
/// MatchRule::SamePosition so every winner is a genuine candidate.
MdaCurve stack_rational(std::span<const AttackCurve> curves);

/// MR thresholds of the statistics table, highest first.
inline constexpr std::array<double, 6> kMrBands = {0.95, 0.90, 0.85, 0.80, 0.75, 0.70};

struct MrStatistics {
  std::vector<double> values;  // per instance
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  /// band_counts[b]: instances with kMrBands[b] < MR <= the next band up
  /// (1.0 for b = 0). Instances at or below 0.70 land in `below_bands`.
  std::array<std::size_t, 6> band_counts{};
  std::size_t below_bands = 0;
};

MrStatistics summarize(std::vector<double> values);

struct MrExperiment {
  GeneratorConfig family;  // seed is ignored; instance seeds derive from `seed`
  std::size_t instances = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  CentralityParams params;
  MatchRule rule = MatchRule::SameValue;
};

/// Generates the instances once and scores MR for every metric set on the
/// same graphs. Curves are shared across sets, so each metric is computed
/// once per instance.
std::vector<MrStatistics> mr_experiment(const MrExperiment& experiment,
                                        std::span<const std::vector<Metric>> metric_sets);

}  // namespace wre
